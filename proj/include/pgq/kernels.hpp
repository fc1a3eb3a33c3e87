#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// straightforward reference kept for testing, `parallel` is the OpenMP
// version the library calls. Both must return identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "pgq/geometry.hpp"
#include "pgq/linalg.hpp"
#include "pgq/projspace.hpp"

namespace pgq::kernels {

/// Square bit matrix, row-major, 64 columns per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), bits_(words_ * n, 0) {}

  int size() const noexcept { return n_; }
  bool test(int r, int c) const noexcept {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(int r, int c) noexcept {
    bits_[static_cast<std::size_t>(r) * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  bool operator==(const BitMatrix&) const = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Relation {
  Intersecting,  // distinct lines with a common point
  Skew,          // distinct lines without one
};

namespace serial {

/// adjacency(a, b) iff a != b and the lines meet.
BitMatrix line_adjacency(const ProjSpace& sp);

/// For every source pair in relation `r`, the images are in relation `r`
/// too (for Intersecting, equal images also count as intersecting).
bool preserves_relation(const Geometry& src, const Geometry& tgt, std::span<const int> line_image,
                        Relation r);

/// Property (III): collinear triples with pairwise distinct images map to
/// collinear triples.
bool preserves_collinearity(const Geometry& src, const Geometry& tgt,
                            std::span<const int> point_image);

/// Property (IV): non-collinear triples map to pairwise distinct,
/// non-collinear triples.
bool preserves_noncollinearity(const Geometry& src, const Geometry& tgt,
                               std::span<const int> point_image);

/// Line permutation induced by x -> x^sigma * M for each matrix (sigma fixed).
std::vector<std::vector<int>> semilinear_line_images(const ProjSpace& sp,
                                                     std::span<const Matrix> matrices,
                                                     int auto_index);

}  // namespace serial

namespace parallel {

BitMatrix line_adjacency(const ProjSpace& sp);
bool preserves_relation(const Geometry& src, const Geometry& tgt, std::span<const int> line_image,
                        Relation r);
bool preserves_collinearity(const Geometry& src, const Geometry& tgt,
                            std::span<const int> point_image);
bool preserves_noncollinearity(const Geometry& src, const Geometry& tgt,
                               std::span<const int> point_image);
std::vector<std::vector<int>> semilinear_line_images(const ProjSpace& sp,
                                                     std::span<const Matrix> matrices,
                                                     int auto_index);

}  // namespace parallel

/// Point image of x -> normalize(x^sigma * M).
std::vector<int> semilinear_point_images(const ProjSpace& src, const ProjSpace& tgt,
                                         const Matrix& m, int auto_index);

int max_threads();

}  // namespace pgq::kernels
