#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgq {

/// Read-only point/line incidence. Implemented by the coordinatized
/// ProjSpace and by the abstract IncidenceStructure (quotients, duals).
/// Point and line ids are dense, starting at 0; all returned id lists
/// are sorted ascending.
class Geometry {
 public:
  virtual ~Geometry() = default;

  virtual int point_count() const = 0;
  virtual int line_count() const = 0;
  /// Projective dimension.
  virtual int dimension() const = 0;
  virtual std::span<const int> line_points(int line) const = 0;
  virtual std::span<const int> lines_through(int point) const = 0;
  /// The line through distinct points a and b, or -1 if there is none.
  virtual int line_through(int a, int b) const = 0;

  bool incident(int point, int line) const;
  /// Common point of two distinct lines, if any.
  std::optional<int> common_point(int a, int b) const;
  /// a, b, c distinct.
  bool collinear(int a, int b, int c) const;
};

enum class Provenance { Native, Quotient, Dual };

const char* to_string(Provenance p);

/// Abstract incidence structure on points 0..N-1. `point_labels[i]` records
/// what point i stands for in the structure it came from (a line id for a
/// quotient, a plane id for a dual).
class IncidenceStructure final : public Geometry {
 public:
  /// Throws InvalidStructure if a line has < 2 points, repeats a point,
  /// references an unknown point, or two lines share a point set.
  IncidenceStructure(std::vector<int> point_labels, std::vector<std::vector<int>> lines,
                     Provenance provenance, int dimension);

  int point_count() const override { return static_cast<int>(labels_.size()); }
  int line_count() const override { return static_cast<int>(line_offsets_.size()) - 1; }
  int dimension() const override { return dimension_; }
  std::span<const int> line_points(int line) const override;
  std::span<const int> lines_through(int point) const override;
  int line_through(int a, int b) const override;

  Provenance provenance() const noexcept { return provenance_; }
  std::span<const int> point_labels() const noexcept { return labels_; }

 private:
  std::vector<int> labels_;
  std::vector<int> line_offsets_, line_data_;
  std::vector<int> through_offsets_, through_data_;
  std::vector<int> pair_line_;  // dense N x N table when N is small
  Provenance provenance_;
  int dimension_;
};

/// Lines through `centre` lying in the plane spanned by the distinct lines
/// l1, l2 through `centre`.
std::vector<int> plane_pencil(const Geometry& g, int centre, int l1, int l2);

/// Points: the lines through `centre`. Lines: the pencils with that centre.
IncidenceStructure quotient(const Geometry& g, int centre);

/// Incidence structure with exactly the points and lines of `g`.
IncidenceStructure native_structure(const Geometry& g);

/// Dual of an abstract 3-dimensional projective space: points are its
/// planes (recovered as closures of intersecting line pairs, sorted by
/// point set), lines are its lines. Throws UnsupportedDimension otherwise.
IncidenceStructure dual_structure(const Geometry& g);

struct AxiomReport {
  bool unique_joins = true;  // two points lie on exactly one line
  bool veblen_young = true;  // a line meeting two sides of a triangle meets the third
  bool thick_lines = true;   // every line has >= 3 points
  std::string unique_joins_witness, veblen_young_witness, thick_lines_witness;

  bool ok() const noexcept { return unique_joins && veblen_young && thick_lines; }
};

AxiomReport verify_projective_axioms(const Geometry& g);

/// Point bijection mapping the lines of `a` exactly onto the lines of `b`,
/// found by backtracking. Throws BudgetExceeded after `node_budget` nodes.
std::optional<std::vector<int>> find_isomorphism(const Geometry& a, const Geometry& b,
                                                 std::uint64_t node_budget = 10'000'000);

}  // namespace pgq
