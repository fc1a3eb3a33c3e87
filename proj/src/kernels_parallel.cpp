#include <omp.h>

#include "pgq/kernels.hpp"

namespace pgq::kernels {

int max_threads() { return omp_get_max_threads(); }

namespace parallel {

BitMatrix line_adjacency(const ProjSpace& sp) {
  const int n = sp.line_count();
  BitMatrix adj(n);
  // Each iteration writes only row a.
#pragma omp parallel for schedule(static)
  for (int a = 0; a < n; ++a)
    for (int p : sp.line_points(a))
      for (int b : sp.lines_through(p))
        if (b != a) adj.set(a, b);
  return adj;
}

bool preserves_relation(const Geometry& src, const Geometry& tgt, std::span<const int> line_image,
                        Relation r) {
  bool ok = true;
  if (r == Relation::Intersecting) {
    // Intersecting pairs are exactly the pairs inside some star.
    const int np = src.point_count();
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : ok)
    for (int p = 0; p < np; ++p) {
      auto st = src.lines_through(p);
      for (std::size_t i = 0; i < st.size() && ok; ++i)
        for (std::size_t j = i + 1; j < st.size(); ++j) {
          const int ia = line_image[st[i]], ib = line_image[st[j]];
          if (ia != ib && !tgt.common_point(ia, ib)) {
            ok = false;
            break;
          }
        }
    }
    return ok;
  }

  const int nl = src.line_count();
#pragma omp parallel reduction(&& : ok)
  {
    std::vector<int> mark(nl, -1);
#pragma omp for schedule(dynamic, 4)
    for (int a = 0; a < nl; ++a) {
      for (int p : src.line_points(a))
        for (int b : src.lines_through(p)) mark[b] = a;
      for (int b = a + 1; b < nl && ok; ++b) {
        if (mark[b] == a) continue;
        const int ia = line_image[a], ib = line_image[b];
        if (ia == ib || tgt.common_point(ia, ib)) ok = false;
      }
    }
  }
  return ok;
}

bool preserves_collinearity(const Geometry& src, const Geometry& tgt,
                            std::span<const int> point_image) {
  bool ok = true;
  const int nl = src.line_count();
  // Collinear triples are exactly the triples on some line.
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
  for (int l = 0; l < nl; ++l) {
    auto pts = src.line_points(l);
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          const int x = point_image[pts[i]], y = point_image[pts[j]], z = point_image[pts[k]];
          if (x == y || y == z || x == z) continue;
          if (!tgt.collinear(x, y, z)) {
            ok = false;
            break;
          }
        }
  }
  return ok;
}

bool preserves_noncollinearity(const Geometry& src, const Geometry& tgt,
                               std::span<const int> point_image) {
  bool ok = true;
  const int n = src.point_count();
#pragma omp parallel for schedule(dynamic, 1) reduction(&& : ok)
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n && ok; ++b) {
      const int ab = src.line_through(a, b);
      for (int c = b + 1; c < n; ++c) {
        if (ab >= 0 && src.incident(c, ab)) continue;
        const int x = point_image[a], y = point_image[b], z = point_image[c];
        if (x == y || y == z || x == z || tgt.collinear(x, y, z)) {
          ok = false;
          break;
        }
      }
    }
  }
  return ok;
}

std::vector<std::vector<int>> semilinear_line_images(const ProjSpace& sp,
                                                     std::span<const Matrix> matrices,
                                                     int auto_index) {
  const auto count = static_cast<std::int64_t>(matrices.size());
  std::vector<std::vector<int>> out(matrices.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto pts = semilinear_point_images(sp, sp, matrices[i], auto_index);
    std::vector<int> lines(sp.line_count());
    for (int l = 0; l < sp.line_count(); ++l) {
      auto lp = sp.line_points(l);
      lines[l] = sp.join(pts[lp[0]], pts[lp[1]]);
    }
    out[i] = std::move(lines);
  }
  return out;
}

}  // namespace parallel
}  // namespace pgq::kernels
