#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pgq/bigint.hpp"
#include "pgq/field.hpp"
#include "pgq/geometry.hpp"
#include "pgq/linalg.hpp"

namespace pgq {

/// Subspace of GF(q)^(n+1) given by its canonical RREF basis; a projective
/// line has 2 rows, a plane 3.
struct Subspace {
  Matrix basis;

  int vector_dim() const noexcept { return basis.rows; }
  int projective_dim() const noexcept { return basis.rows - 1; }
  bool operator==(const Subspace&) const = default;
};

/// PG(n, q), fully enumerated.
///
/// Point ids follow the lexicographic order of normalized coordinate tuples
/// (leftmost nonzero entry 1, entries compared by element code). Line ids
/// follow the lexicographic order of sorted incident point-id tuples.
class ProjSpace final : public Geometry {
 public:
  /// Throws DimensionTooSmall (n < 2), UnsupportedOrder, or TooLarge when
  /// the tables would exceed the in-memory limits.
  ProjSpace(int n, int q);

  int n() const noexcept { return n_; }
  int q() const noexcept { return field_.order(); }
  const FieldTable& field() const noexcept { return field_; }
  /// Coordinates per point (n + 1).
  int width() const noexcept { return n_ + 1; }

  int point_count() const override { return point_count_; }
  int line_count() const override { return line_count_; }
  int dimension() const override { return n_; }
  std::span<const int> line_points(int line) const override;
  std::span<const int> lines_through(int point) const override;
  /// Same as join; a != b.
  int line_through(int a, int b) const override { return join(a, b); }

  std::span<const Elem> coords(int point) const;
  /// Scales v so that its leftmost nonzero entry is 1. v must be nonzero.
  void normalize(std::span<Elem> v) const;
  /// Id of the point spanned by the nonzero vector v.
  int point_id(std::span<const Elem> v) const;

  /// Throws EqualPoints if a == b.
  int join(int a, int b) const;
  /// Throws EqualLines if a == b.
  std::optional<int> meet(int a, int b) const;

  int points_per_line() const noexcept { return q() + 1; }
  int lines_per_point() const noexcept { return lines_per_point_; }

  /// Canonical RREF basis of a line.
  Subspace line_subspace(int line) const;

 private:
  int n_;
  FieldTable field_;
  int point_count_ = 0;
  int line_count_ = 0;
  int lines_per_point_ = 0;
  std::vector<Elem> coords_;
  std::vector<int> code_to_point_;
  std::vector<int> line_points_;
  std::vector<int> lines_through_;
};

ProjSpace build_space(int n, int q);

/// Number of k-dimensional subspaces of GF(q)^m.
BigInt gaussian_binomial(int m, int k, int q);

int join(const ProjSpace& sp, int a, int b);
std::optional<int> meet(const ProjSpace& sp, int a, int b);
/// Throws RepeatedPoints unless a, b, c are pairwise distinct.
bool collinear(const ProjSpace& sp, int a, int b, int c);

/// All lines through q, ascending.
std::vector<int> star(const ProjSpace& sp, int point);

/// Lines through `point` inside the plane `eps`. Throws NotAPlane unless
/// eps has 3 basis rows of width n + 1, PointNotInPlane unless point lies in it.
std::vector<int> pencil(const ProjSpace& sp, int point, const Subspace& eps);

/// Span of the given points.
Subspace span_points(const ProjSpace& sp, std::span<const int> points);
bool contains(const ProjSpace& sp, const Subspace& s, int point);

IncidenceStructure quotient(const ProjSpace& sp, int point);

/// Planes of PG(3, q) are indexed by the point id of their normalized
/// coefficient vector u, i.e. the plane {x : u . x = 0}.
int plane_id(const ProjSpace& sp, const Subspace& plane);
Subspace plane_subspace(const ProjSpace& sp, int plane);
/// The line whose points are the coefficient vectors of the planes through
/// `line` (n = 3).
int annihilator_line(const ProjSpace& sp, int line);

/// Points: planes (by plane_id). Lines: the lines of sp, with the same ids,
/// each carrying the planes that contain it. Throws UnsupportedDimension
/// unless n = 3.
IncidenceStructure dual_space(const ProjSpace& sp);

}  // namespace pgq
