#include "pgq/kernels.hpp"

namespace pgq::kernels {

std::vector<int> semilinear_point_images(const ProjSpace& src, const ProjSpace& tgt,
                                         const Matrix& m, int auto_index) {
  const auto& f = src.field();
  std::vector<int> out(src.point_count());
  std::vector<Elem> v(src.width());
  for (int p = 0; p < src.point_count(); ++p) {
    auto c = src.coords(p);
    for (int i = 0; i < src.width(); ++i) v[i] = f.apply_automorphism(auto_index, c[i]);
    out[p] = tgt.point_id(row_times(f, v, m));
  }
  return out;
}

namespace serial {

BitMatrix line_adjacency(const ProjSpace& sp) {
  BitMatrix adj(sp.line_count());
  for (int a = 0; a < sp.line_count(); ++a)
    for (int b = a + 1; b < sp.line_count(); ++b)
      if (sp.common_point(a, b)) {
        adj.set(a, b);
        adj.set(b, a);
      }
  return adj;
}

bool preserves_relation(const Geometry& src, const Geometry& tgt, std::span<const int> line_image,
                        Relation r) {
  for (int a = 0; a < src.line_count(); ++a)
    for (int b = a + 1; b < src.line_count(); ++b) {
      const bool meets = src.common_point(a, b).has_value();
      const int ia = line_image[a], ib = line_image[b];
      if (r == Relation::Intersecting && meets) {
        if (ia != ib && !tgt.common_point(ia, ib)) return false;
      } else if (r == Relation::Skew && !meets) {
        if (ia == ib || tgt.common_point(ia, ib)) return false;
      }
    }
  return true;
}

bool preserves_collinearity(const Geometry& src, const Geometry& tgt,
                            std::span<const int> point_image) {
  const int n = src.point_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!src.collinear(a, b, c)) continue;
        const int x = point_image[a], y = point_image[b], z = point_image[c];
        if (x == y || y == z || x == z) continue;
        if (!tgt.collinear(x, y, z)) return false;
      }
  return true;
}

bool preserves_noncollinearity(const Geometry& src, const Geometry& tgt,
                               std::span<const int> point_image) {
  const int n = src.point_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (src.collinear(a, b, c)) continue;
        const int x = point_image[a], y = point_image[b], z = point_image[c];
        if (x == y || y == z || x == z || tgt.collinear(x, y, z)) return false;
      }
  return true;
}

std::vector<std::vector<int>> semilinear_line_images(const ProjSpace& sp,
                                                     std::span<const Matrix> matrices,
                                                     int auto_index) {
  std::vector<std::vector<int>> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) {
    const auto pts = semilinear_point_images(sp, sp, m, auto_index);
    std::vector<int> lines(sp.line_count());
    for (int l = 0; l < sp.line_count(); ++l) {
      auto lp = sp.line_points(l);
      lines[l] = sp.join(pts[lp[0]], pts[lp[1]]);
    }
    out.push_back(std::move(lines));
  }
  return out;
}

}  // namespace serial
}  // namespace pgq::kernels
