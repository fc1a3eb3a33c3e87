#include "pgq/maps.hpp"

#include <algorithm>
#include <sstream>

#include "pgq/error.hpp"
#include "pgq/kernels.hpp"
#include "pgq/rng.hpp"

namespace pgq {

namespace {

const ProjSpace& as_projspace(const Geometry* g, const char* what) {
  auto* sp = dynamic_cast<const ProjSpace*>(g);
  if (sp == nullptr) throw IncompatibleSpaces(std::string(what) + " must be a coordinatized space");
  return *sp;
}

void require_same_field(const ProjSpace& a, const ProjSpace& b) {
  if (a.q() != b.q()) throw IncompatibleSpaces("spaces are over different fields");
}

bool sampled_noncollinearity(const Geometry& src, const Geometry& tgt,
                             const std::vector<int>& image) {
  SplitMix64 rng(kPropertySeed);
  const auto n = static_cast<std::uint64_t>(src.point_count());
  for (int s = 0; s < kPropertySamples; ++s) {
    const int a = static_cast<int>(rng.below(n));
    const int b = static_cast<int>(rng.below(n));
    const int c = static_cast<int>(rng.below(n));
    if (a == b || b == c || a == c || src.collinear(a, b, c)) continue;
    const int x = image[a], y = image[b], z = image[c];
    if (x == y || y == z || x == z || tgt.collinear(x, y, z)) return false;
  }
  return true;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::Collineation: return "Collineation";
    case MapClass::Semicollineation: return "Semicollineation";
    case MapClass::Embedding: return "Embedding";
    case MapClass::Other: return "Other";
  }
  return "?";
}

const char* to_string(KappaStatus s) {
  switch (s) {
    case KappaStatus::InducedIntoTarget: return "InducedIntoTarget";
    case KappaStatus::InducedIntoDual: return "InducedIntoDual";
    case KappaStatus::Mixed: return "Mixed";
  }
  return "?";
}

PointMap semilinear_point_map(const Matrix& matrix, int auto_index, const ProjSpace& src,
                              const ProjSpace& tgt) {
  require_same_field(src, tgt);
  if (matrix.rows != src.width() || matrix.cols != tgt.width())
    throw IncompatibleSpaces("matrix shape does not match the spaces");
  if (auto_index < 0 || auto_index >= src.field().automorphism_count())
    throw IncompatibleSpaces("no such field automorphism");
  if (rank(src.field(), matrix) != src.width())
    throw IncompatibleSpaces("semilinear map is not injective");
  return {&src, &tgt, kernels::semilinear_point_images(src, tgt, matrix, auto_index)};
}

PointMap collineation_point_map(const Collineation& c, const ProjSpace& src, const ProjSpace& tgt) {
  if (src.n() != tgt.n()) throw IncompatibleSpaces("collineation needs equal dimensions");
  return semilinear_point_map(c.matrix, c.auto_index, src, tgt);
}

LineMap induced_line_map(const PointMap& pm) {
  const Geometry& src = *pm.source;
  const Geometry& tgt = *pm.target;
  LineMap lm{pm.source, pm.target, std::vector<int>(src.line_count(), -1)};
  for (int l = 0; l < src.line_count(); ++l) {
    auto pts = src.line_points(l);
    const int a = pm.image[pts[0]], b = pm.image[pts[1]];
    if (a < 0 || b < 0 || a == b)
      throw NotLineConsistent("points of line " + std::to_string(l) + " collapse");
    const int m = tgt.line_through(a, b);
    if (m < 0) throw NotLineConsistent("no target line through the images");
    for (std::size_t i = 2; i < pts.size(); ++i) {
      const int c = pm.image[pts[i]];
      if (c == a || c == b || c < 0 || !tgt.incident(c, m))
        throw NotLineConsistent("images of line " + std::to_string(l) + " are not on one line");
    }
    lm.image[l] = m;
  }
  return lm;
}

std::vector<int> duality_plane_map(const Duality& d, const ProjSpace& src, const ProjSpace& tgt) {
  if (src.n() != 3 || tgt.n() != 3) throw IncompatibleSpaces("dualities need n = 3");
  require_same_field(src, tgt);
  if (d.matrix.rows != 4 || d.matrix.cols != 4 || rank(src.field(), d.matrix) != 4)
    throw IncompatibleSpaces("duality matrix must be invertible 4x4");
  // Plane ids are the point ids of coefficient vectors.
  return kernels::semilinear_point_images(src, tgt, d.matrix, d.auto_index);
}

LineMap duality_line_map(const Duality& d, const ProjSpace& src, const ProjSpace& tgt) {
  const auto planes = duality_plane_map(d, src, tgt);
  LineMap lm{&src, &tgt, std::vector<int>(src.line_count())};
  for (int l = 0; l < src.line_count(); ++l) {
    auto pts = src.line_points(l);
    // The planes of the line's points form the annihilator line of the image.
    lm.image[l] = annihilator_line(tgt, tgt.join(planes[pts[0]], planes[pts[1]]));
  }
  return lm;
}

PropertyFlags check_properties(const PointMap& pm) {
  const Geometry& src = *pm.source;
  const Geometry& tgt = *pm.target;
  PropertyFlags f;
  std::vector<char> hit(tgt.point_count(), 0);
  f.injective = true;
  for (int x : pm.image) {
    if (x < 0 || x >= tgt.point_count())
      throw PreconditionViolated("point map is not total");
    if (hit[x]) f.injective = false;
    hit[x] = 1;
  }
  f.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  f.collinear = kernels::parallel::preserves_collinearity(src, tgt, pm.image);
  f.noncollinear = src.point_count() <= kExhaustivePointLimit
                       ? kernels::parallel::preserves_noncollinearity(src, tgt, pm.image)
                       : sampled_noncollinearity(src, tgt, pm.image);
  return f;
}

MapClass classify(const PropertyFlags& f) {
  if (f.injective && f.surjective && f.collinear && f.noncollinear) return MapClass::Collineation;
  if (f.injective && f.surjective && f.collinear) return MapClass::Semicollineation;
  if (f.injective && f.collinear && f.noncollinear) return MapClass::Embedding;
  return MapClass::Other;
}

MapClass classify_point_map(const PointMap& pm) { return classify(check_properties(pm)); }

bool is_bijective(const LineMap& lm) {
  if (lm.source->line_count() != lm.target->line_count()) return false;
  std::vector<char> hit(lm.target->line_count(), 0);
  for (int x : lm.image) {
    if (x < 0 || x >= lm.target->line_count() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool preserves_intersections(const LineMap& lm) {
  return kernels::parallel::preserves_relation(*lm.source, *lm.target, lm.image,
                                               kernels::Relation::Intersecting);
}

bool preserves_skewness(const LineMap& lm) {
  return kernels::parallel::preserves_relation(*lm.source, *lm.target, lm.image,
                                               kernels::Relation::Skew);
}

LineMap compose(const LineMap& outer, const LineMap& inner) {
  LineMap out{inner.source, outer.target, std::vector<int>(inner.image.size())};
  for (std::size_t i = 0; i < inner.image.size(); ++i) out.image[i] = outer.image[inner.image[i]];
  return out;
}

KappaReport reconstruct_point_map(const LineMap& lm) {
  if (!is_bijective(lm)) throw PreconditionViolated("line map is not bijective");
  if (!preserves_intersections(lm))
    throw PreconditionViolated("line map does not preserve intersections");

  const Geometry& src = *lm.source;
  const Geometry& tgt = *lm.target;
  const auto* tsp = dynamic_cast<const ProjSpace*>(lm.target);
  const bool may_be_dual = tsp != nullptr && tsp->n() == 3;

  KappaReport rep;
  std::vector<int> kappa(src.point_count(), -1), plane(src.point_count(), -1);
  int star_type = 0, plane_type = 0;

  for (int q = 0; q < src.point_count(); ++q) {
    std::vector<int> images;
    for (int l : src.lines_through(q)) images.push_back(lm.image[l]);

    auto first = tgt.line_points(images[0]);
    std::vector<int> common(first.begin(), first.end());
    for (std::size_t i = 1; i < images.size() && !common.empty(); ++i)
      common = sorted_intersection(common, tgt.line_points(images[i]));
    if (common.size() == 1) {
      kappa[q] = common[0];
      ++star_type;
      continue;
    }

    if (may_be_dual && images.size() >= 2) {
      const auto x = tgt.common_point(images[0], images[1]);
      auto p0 = tgt.line_points(images[0]), p1 = tgt.line_points(images[1]);
      const int a = p0[0] == *x ? p0[1] : p0[0];
      const int b = p1[0] == *x ? p1[1] : p1[0];
      const std::vector<int> spanning{*x, a, b};
      const int pid = plane_id(*tsp, span_points(*tsp, spanning));
      const auto u = tsp->coords(pid);
      bool coplanar = true;
      for (int m : images)
        for (int p : tgt.line_points(m))
          if (dot(tsp->field(), u, tsp->coords(p)) != 0) coplanar = false;
      if (coplanar) {
        plane[q] = pid;
        ++plane_type;
        continue;
      }
    }
    rep.skew_image_points.push_back(q);
    if (rep.witness.empty())
      rep.witness = "star of point " + std::to_string(q) + " has no common image point";
  }

  if (star_type == src.point_count()) {
    rep.status = KappaStatus::InducedIntoTarget;
    rep.kappa = PointMap{lm.source, lm.target, std::move(kappa)};
  } else if (plane_type == src.point_count()) {
    rep.status = KappaStatus::InducedIntoDual;
    rep.dual_target = std::make_shared<IncidenceStructure>(dual_space(*tsp));
    rep.kappa = PointMap{lm.source, rep.dual_target.get(), std::move(plane)};
  } else {
    rep.status = KappaStatus::Mixed;
    rep.kappa = PointMap{lm.source, lm.target, std::move(kappa)};
    return rep;
  }

  // Pull back each target star: it is a star (its point is in kappa's image)
  // or a set of mutually skew lines.
  const Geometry& kt = *rep.kappa.target;
  std::vector<int> inverse(tgt.line_count());
  for (int l = 0; l < src.line_count(); ++l) inverse[lm.image[l]] = l;
  std::vector<char> reached(kt.point_count(), 0);
  for (int x : rep.kappa.image) reached[x] = 1;
  for (int y = 0; y < kt.point_count(); ++y) {
    if (reached[y]) continue;
    std::vector<int> pre;
    for (int m : kt.lines_through(y)) pre.push_back(inverse[m]);
    bool mutually_skew = true;
    for (std::size_t i = 0; i < pre.size() && mutually_skew; ++i)
      for (std::size_t j = i + 1; j < pre.size(); ++j)
        if (src.common_point(pre[i], pre[j])) {
          mutually_skew = false;
          break;
        }
    if (mutually_skew)
      rep.skew_preimage_points.push_back(y);
    else
      rep.star_dichotomy = false;
  }
  return rep;
}

StarRestriction restrict_to_star(const LineMap& lm, int point, const PointMap& kappa) {
  if (point < 0 || point >= static_cast<int>(kappa.image.size()) || kappa.image[point] < 0)
    throw PreconditionViolated("kappa is undefined at the point");
  if (kappa.target->line_count() != lm.target->line_count())
    throw PreconditionViolated("kappa target does not share line ids with the line map");

  StarRestriction r;
  r.source_quotient = std::make_shared<IncidenceStructure>(quotient(*lm.source, point));
  r.target_quotient =
      std::make_shared<IncidenceStructure>(quotient(*kappa.target, kappa.image[point]));
  const auto labels = r.target_quotient->point_labels();
  r.map.source = r.source_quotient.get();
  r.map.target = r.target_quotient.get();
  for (int l : r.source_quotient->point_labels()) {
    const int m = lm.image[l];
    auto it = std::lower_bound(labels.begin(), labels.end(), m);
    if (it == labels.end() || *it != m)
      throw PreconditionViolated("star image leaves the target star");
    r.map.image.push_back(static_cast<int>(it - labels.begin()));
  }
  return r;
}

std::optional<int> noncollinear_witness(const ProjSpace& sp, int point, int a, int b, int c) {
  for (int l : {a, b, c})
    if (l < 0 || l >= sp.line_count() || !sp.incident(point, l))
      throw NotInStar("line " + std::to_string(l) + " is not in the star");
  if (a == b || b == c || a == c) throw NotInStar("witness needs three distinct star lines");
  for (int d = 0; d < sp.line_count(); ++d) {
    if (d == a || d == b || d == c) continue;
    if (sp.common_point(d, a) && sp.common_point(d, b) && !sp.common_point(d, c)) return d;
  }
  return std::nullopt;
}

bool is_pencil(const Geometry& g, std::vector<int> lines) {
  std::sort(lines.begin(), lines.end());
  if (lines.size() < 2 || std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    return false;
  auto first = g.line_points(lines[0]);
  std::vector<int> common(first.begin(), first.end());
  for (std::size_t i = 1; i < lines.size() && !common.empty(); ++i)
    common = sorted_intersection(common, g.line_points(lines[i]));
  if (common.size() != 1) return false;
  return plane_pencil(g, common[0], lines[0], lines[1]) == lines;
}

bool pencil_image_is_pencil(const LineMap& lm, int point, const Subspace& eps) {
  const ProjSpace& sp = as_projspace(lm.source, "line map source");
  std::vector<int> images;
  for (int l : pencil(sp, point, eps)) images.push_back(lm.image[l]);
  return is_pencil(*lm.target, std::move(images));
}

bool intersection_compatibility_check(const LineMap& lm, const PointMap& kappa, int point,
                                      const Subspace& eps, int a) {
  const ProjSpace& sp = as_projspace(lm.source, "line map source");
  auto apts = sp.line_points(a);
  if (!contains(sp, eps, apts[0]) || !contains(sp, eps, apts[1]))
    throw BadConfiguration("line is not in the plane");
  if (sp.incident(point, a)) throw BadConfiguration("line passes through the pencil centre");
  const Geometry& kt = *kappa.target;
  for (int l : pencil(sp, point, eps)) {
    const int x = *sp.meet(l, a);
    const auto y = kt.common_point(lm.image[l], lm.image[a]);
    if (!y || kappa.image[x] != *y) return false;
  }
  return true;
}

}  // namespace pgq
