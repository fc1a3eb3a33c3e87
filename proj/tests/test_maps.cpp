#include <doctest.h>

#include <numeric>
#include <set>

#include "pgq/error.hpp"
#include "pgq/grassmann.hpp"
#include "pgq/maps.hpp"
#include "pgq/rng.hpp"
#include "pgq/theorems.hpp"

using namespace pgq;

namespace {

PointMap identity_points(const ProjSpace& sp) {
  PointMap pm{&sp, &sp, std::vector<int>(sp.point_count())};
  std::iota(pm.image.begin(), pm.image.end(), 0);
  return pm;
}

LineMap identity_lines(const ProjSpace& sp) {
  LineMap lm{&sp, &sp, std::vector<int>(sp.line_count())};
  std::iota(lm.image.begin(), lm.image.end(), 0);
  return lm;
}

// Three lines lie in one plane iff all their points span a 3-dim space.
bool coplanar(const ProjSpace& sp, std::initializer_list<int> lines) {
  std::vector<int> pts;
  for (int l : lines)
    for (int p : sp.line_points(l)) pts.push_back(p);
  return span_points(sp, pts).vector_dim() == 3;
}

std::pair<int, int> skew_pair(const ProjSpace& sp) {
  for (int a = 0; a < sp.line_count(); ++a)
    for (int b = a + 1; b < sp.line_count(); ++b)
      if (!sp.common_point(a, b)) return {a, b};
  return {-1, -1};
}

}  // namespace

TEST_CASE("identity collineation") {
  const ProjSpace sp(3, 2);
  const auto pm = collineation_point_map({Matrix::identity(4), 0}, sp, sp);
  CHECK(pm.image == identity_points(sp).image);
  CHECK(check_properties(pm) == PropertyFlags{true, true, true, true});
  CHECK(classify_point_map(pm) == MapClass::Collineation);
  CHECK(induced_line_map(pm).image == identity_lines(sp).image);
}

TEST_CASE("random collineations have all four properties") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {2, 4}, {3, 4}}) {
    const ProjSpace sp(n, q);
    SplitMix64 rng(n * 100 + q);
    for (int t = 0; t < 10; ++t) {
      const auto pm = collineation_point_map(random_collineation(rng, sp), sp, sp);
      CHECK(check_properties(pm) == PropertyFlags{true, true, true, true});
    }
  }
}

TEST_CASE("Frobenius on PG(2,4)") {
  const ProjSpace sp(2, 4);
  const auto pm = collineation_point_map({Matrix::identity(3), 1}, sp, sp);
  int moved = 0;
  for (int p = 0; p < sp.point_count(); ++p) {
    CHECK(pm.image[pm.image[p]] == p);
    moved += pm.image[p] != p;
  }
  CHECK(moved > 0);
  CHECK(classify_point_map(pm) == MapClass::Collineation);
}

TEST_CASE("plane embedded in space") {
  const ProjSpace plane(2, 2), space(3, 2);
  Matrix m(3, 4);
  for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
  const auto pm = semilinear_point_map(m, 0, plane, space);
  CHECK(check_properties(pm) == PropertyFlags{true, false, true, true});
  CHECK(classify_point_map(pm) == MapClass::Embedding);
  const auto lm = induced_line_map(pm);
  std::set<int> distinct(lm.image.begin(), lm.image.end());
  CHECK(distinct.size() == 7);
  CHECK_THROWS_AS(semilinear_point_map(m, 0, plane, ProjSpace(3, 3)), IncompatibleSpaces);
  Matrix singular(3, 4);
  singular.at(0, 0) = singular.at(1, 0) = singular.at(2, 1) = 1;
  CHECK_THROWS_AS(semilinear_point_map(singular, 0, plane, space), IncompatibleSpaces);
}

TEST_CASE("degenerate triples") {
  const ProjSpace sp(3, 2);
  PointMap constant{&sp, &sp, std::vector<int>(sp.point_count(), 4)};
  CHECK(check_properties(constant) == PropertyFlags{false, false, true, false});
  CHECK(classify_point_map(constant) == MapClass::Other);
  CHECK_THROWS_AS(induced_line_map(constant), NotLineConsistent);

  // beyond the exhaustive limit IV is sampled; the collapse is still caught
  const ProjSpace big(3, 4);
  PointMap c2{&big, &big, std::vector<int>(big.point_count(), 0)};
  CHECK(check_properties(c2) == PropertyFlags{false, false, true, false});
}

TEST_CASE("classification table") {
  CHECK(classify({true, true, true, true}) == MapClass::Collineation);
  CHECK(classify({true, true, true, false}) == MapClass::Semicollineation);
  CHECK(classify({true, false, true, true}) == MapClass::Embedding);
  for (int bits = 0; bits < 16; ++bits) {
    PropertyFlags f{bool(bits & 1), bool(bits & 2), bool(bits & 4), bool(bits & 8)};
    if (bits == 15 || bits == 7 || bits == 13) continue;
    CHECK(classify(f) == MapClass::Other);
  }
  CHECK(std::string(to_string(MapClass::Semicollineation)) == "Semicollineation");
}

TEST_CASE("a bijection breaking collinearity") {
  const ProjSpace sp(2, 2);
  auto pm = identity_points(sp);
  std::swap(pm.image[0], pm.image[1]);
  const auto f = check_properties(pm);
  CHECK(f.injective);
  CHECK(f.surjective);
  CHECK_FALSE(f.collinear);
  CHECK(classify(f) == MapClass::Other);
  CHECK_THROWS_AS(induced_line_map(pm), NotLineConsistent);
}

TEST_CASE("induced line maps follow the point images") {
  const ProjSpace sp(3, 3);
  SplitMix64 rng(5);
  const auto pm = collineation_point_map(random_collineation(rng, sp), sp, sp);
  const auto lm = induced_line_map(pm);
  for (int l = 0; l < sp.line_count(); ++l) {
    auto p = sp.line_points(l);
    CHECK(lm.image[l] == join(sp, pm.image[p[0]], pm.image[p[1]]));
    CHECK(lm.image[l] == join(sp, pm.image[p[2]], pm.image[p[3]]));
  }
  CHECK(is_bijective(lm));
}

TEST_CASE("dualities") {
  const ProjSpace sp(3, 2);
  const Duality d{Matrix::identity(4), 0};
  const auto lm = duality_line_map(d, sp, sp);
  CHECK(is_bijective(lm));
  // concurrent lines go to coplanar lines
  for (int p = 0; p < sp.point_count(); ++p) {
    const auto s = sp.lines_through(p);
    for (std::size_t i = 2; i < s.size(); ++i)
      CHECK(coplanar(sp, {lm.image[s[0]], lm.image[s[1]], lm.image[s[i]]}));
  }
  // the relation is preserved both ways
  const auto g = build_grassmann(sp);
  for (int a = 0; a < 35; ++a)
    for (int b = 0; b < 35; ++b) CHECK(related(g, a, b) == related(g, lm.image[a], lm.image[b]));
  CHECK(preserves_intersections(lm));
  CHECK(preserves_skewness(lm));

  // applying it twice gives a collineation-induced map
  const auto twice = compose(lm, lm);
  const auto kr = reconstruct_point_map(twice);
  REQUIRE(kr.status == KappaStatus::InducedIntoTarget);
  CHECK(classify_point_map(kr.kappa) == MapClass::Collineation);
  CHECK(induced_line_map(kr.kappa).image == twice.image);

  // the plane images are the planes spanned by the line images
  const auto planes = duality_plane_map(d, sp, sp);
  for (int p = 0; p < sp.point_count(); ++p) {
    const Subspace eps = plane_subspace(sp, planes[p]);
    for (int l : sp.lines_through(p))
      for (int x : sp.line_points(lm.image[l])) CHECK(contains(sp, eps, x));
  }
  CHECK_THROWS_AS(duality_line_map(d, ProjSpace(2, 2), ProjSpace(2, 2)), IncompatibleSpaces);
}

TEST_CASE("compose applies inner first") {
  const ProjSpace sp(2, 2);
  LineMap a{&sp, &sp, {1, 2, 0, 3, 4, 5, 6}}, b{&sp, &sp, {0, 1, 2, 4, 3, 5, 6}};
  CHECK(compose(a, b).image == std::vector<int>{1, 2, 0, 4, 3, 5, 6});
  CHECK(compose(b, a).image == std::vector<int>{1, 2, 0, 4, 3, 5, 6});
  LineMap c{&sp, &sp, {3, 1, 2, 0, 4, 5, 6}};
  CHECK(compose(c, a).image == std::vector<int>{1, 2, 3, 0, 4, 5, 6});
  CHECK(compose(a, c).image == std::vector<int>{3, 2, 0, 1, 4, 5, 6});
}

TEST_CASE("intersection and skewness preservation") {
  const ProjSpace sp(3, 2);
  CHECK(preserves_intersections(identity_lines(sp)));
  CHECK(preserves_skewness(identity_lines(sp)));
  SplitMix64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto lm = induced_line_map(collineation_point_map(random_collineation(rng, sp), sp, sp));
    CHECK(preserves_intersections(lm));
    CHECK(preserves_skewness(lm));
  }
  const auto [a, b] = skew_pair(sp);
  auto swapped = identity_lines(sp);
  std::swap(swapped.image[a], swapped.image[b]);
  CHECK_FALSE(preserves_intersections(swapped));

  // a skew to b; c meets b: sending a to c makes the skew pair (a, b) meet
  int c = -1;
  for (int x = 0; x < sp.line_count() && c < 0; ++x)
    if (x != b && x != a && sp.common_point(x, b)) c = x;
  auto broken = identity_lines(sp);
  std::swap(broken.image[a], broken.image[c]);
  CHECK_FALSE(preserves_skewness(broken));
}

TEST_CASE("kappa reconstruction") {
  SUBCASE("identity") {
    const ProjSpace sp(3, 2);
    const auto kr = reconstruct_point_map(identity_lines(sp));
    CHECK(kr.status == KappaStatus::InducedIntoTarget);
    CHECK(kr.kappa.image == identity_points(sp).image);
    CHECK(kr.skew_image_points.empty());
    CHECK(kr.skew_preimage_points.empty());
    CHECK(kr.star_dichotomy);
  }
  SUBCASE("random collineations") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {2, 3}}) {
      const ProjSpace sp(n, q);
      SplitMix64 rng(31 * n + q);
      for (int t = 0; t < 100; ++t) {
        const auto pm = collineation_point_map(random_collineation(rng, sp), sp, sp);
        const auto kr = reconstruct_point_map(induced_line_map(pm));
        REQUIRE(kr.status == KappaStatus::InducedIntoTarget);
        CHECK(kr.kappa.image == pm.image);
      }
    }
  }
  SUBCASE("all of PGL(3,2) on the Fano plane") {
    const ProjSpace sp(2, 2);
    int count = 0;
    for (int code = 0; code < 512; ++code) {
      Matrix m(3, 3);
      for (int i = 0; i < 9; ++i) m.data[i] = (code >> i) & 1;
      if (rank(sp.field(), m) != 3) continue;
      ++count;
      const auto pm = collineation_point_map({m, 0}, sp, sp);
      const auto kr = reconstruct_point_map(induced_line_map(pm));
      REQUIRE(kr.status == KappaStatus::InducedIntoTarget);
      CHECK(kr.kappa.image == pm.image);
    }
    CHECK(count == 168);
  }
  SUBCASE("dualities") {
    for (int q : {2, 3}) {
      const ProjSpace sp(3, q);
      SplitMix64 rng(q);
      for (int t = 0; t < 30; ++t) {
        const auto d = random_duality(rng, sp);
        const auto kr = reconstruct_point_map(duality_line_map(d, sp, sp));
        REQUIRE(kr.status == KappaStatus::InducedIntoDual);
        REQUIRE(kr.dual_target);
        CHECK(kr.kappa.target == kr.dual_target.get());
        CHECK(kr.kappa.image == duality_plane_map(d, sp, sp));
        CHECK(classify_point_map(kr.kappa) == MapClass::Collineation);
      }
    }
  }
  SUBCASE("preconditions") {
    const ProjSpace sp(3, 2);
    auto lm = identity_lines(sp);
    lm.image[0] = lm.image[1];
    CHECK_THROWS_AS(reconstruct_point_map(lm), PreconditionViolated);
    const auto [a, b] = skew_pair(sp);
    auto sw = identity_lines(sp);
    std::swap(sw.image[a], sw.image[b]);
    CHECK_THROWS_AS(reconstruct_point_map(sw), PreconditionViolated);
  }
}

TEST_CASE("different collineations induce different line maps") {
  const ProjSpace sp(3, 3);
  SplitMix64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto p1 = collineation_point_map(random_collineation(rng, sp), sp, sp);
    const auto p2 = collineation_point_map(random_collineation(rng, sp), sp, sp);
    CHECK((p1.image == p2.image) == (induced_line_map(p1).image == induced_line_map(p2).image));
  }
}

TEST_CASE("star restrictions") {
  const ProjSpace sp(3, 2);
  SUBCASE("identity") {
    const auto lm = identity_lines(sp);
    const auto kappa = identity_points(sp);
    for (int p = 0; p < sp.point_count(); ++p) {
      const auto r = restrict_to_star(lm, p, kappa);
      std::vector<int> id(7);
      std::iota(id.begin(), id.end(), 0);
      CHECK(r.map.image == id);
    }
  }
  SUBCASE("collineations give quotient collineations") {
    SplitMix64 rng(8);
    for (int t = 0; t < 20; ++t) {
      const auto pm = collineation_point_map(random_collineation(rng, sp), sp, sp);
      const auto lm = induced_line_map(pm);
      for (int p = 0; p < sp.point_count(); ++p) {
        const auto r = restrict_to_star(lm, p, pm);
        const auto f = check_properties(r.map);
        CHECK(f.injective);
        CHECK(f.surjective);
        CHECK(f.collinear);
        CHECK(classify(f) == MapClass::Collineation);
        // quotient points carry the star line ids
        const auto sl = r.source_quotient->point_labels();
        const auto tl = r.target_quotient->point_labels();
        for (std::size_t i = 0; i < sl.size(); ++i) CHECK(tl[r.map.image[i]] == lm.image[sl[i]]);
      }
    }
  }
  SUBCASE("dualities, read in the dual space") {
    SplitMix64 rng(9);
    const auto lm = duality_line_map(random_duality(rng, sp), sp, sp);
    const auto kr = reconstruct_point_map(lm);
    for (int p = 0; p < sp.point_count(); ++p)
      CHECK(classify_point_map(restrict_to_star(lm, p, kr.kappa).map) == MapClass::Collineation);
  }
  SUBCASE("undefined kappa") {
    auto kappa = identity_points(sp);
    kappa.image[3] = -1;
    CHECK_THROWS_AS(restrict_to_star(identity_lines(sp), 3, kappa), PreconditionViolated);
  }
}

TEST_CASE("skew witnesses detect non-coplanar star triples") {
  for (int q : {2, 3}) {
    const ProjSpace sp(3, q);
    for (int p = 0; p < sp.point_count(); ++p) {
      const auto s = sp.lines_through(p);
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          for (std::size_t k = j + 1; k < s.size(); ++k) {
            const auto w = noncollinear_witness(sp, p, s[i], s[j], s[k]);
            REQUIRE(w.has_value() == !coplanar(sp, {s[i], s[j], s[k]}));
            if (w) {
              CHECK_FALSE(sp.common_point(*w, s[k]).has_value());
              CHECK(sp.common_point(*w, s[i]).has_value());
              CHECK(sp.common_point(*w, s[j]).has_value());
            }
          }
    }
  }
  const ProjSpace sp(3, 2);
  const auto s = sp.lines_through(0);
  int off = -1;
  for (int l = 0; l < sp.line_count() && off < 0; ++l)
    if (!sp.incident(0, l)) off = l;
  CHECK_THROWS_AS(noncollinear_witness(sp, 0, s[0], s[1], off), NotInStar);
  CHECK_THROWS_AS(noncollinear_witness(sp, 0, s[0], s[0], s[1]), NotInStar);
}

TEST_CASE("pencil images") {
  const ProjSpace sp(3, 2);
  SplitMix64 rng(10);
  const auto lm = induced_line_map(collineation_point_map(random_collineation(rng, sp), sp, sp));
  const auto id = identity_lines(sp);
  for (int u = 0; u < sp.point_count(); ++u) {
    const Subspace eps = plane_subspace(sp, u);
    for (int p = 0; p < sp.point_count(); ++p) {
      if (!contains(sp, eps, p)) continue;
      CHECK(pencil_image_is_pencil(lm, p, eps));
      CHECK(pencil_image_is_pencil(id, p, eps));
    }
  }
  // move one pencil line out of the star
  const Subspace eps = plane_subspace(sp, 0);
  int centre = 0;
  while (!contains(sp, eps, centre)) ++centre;
  const auto pen = pencil(sp, centre, eps);
  int off = 0;
  while (sp.incident(centre, off)) ++off;
  auto scrambled = id;
  std::swap(scrambled.image[pen[0]], scrambled.image[off]);
  CHECK_FALSE(pencil_image_is_pencil(scrambled, centre, eps));

  CHECK(is_pencil(sp, pen));
  CHECK_FALSE(is_pencil(sp, {pen[0], pen[1]}));
  CHECK_FALSE(is_pencil(sp, {pen[0], pen[1], off}));
}

TEST_CASE("intersection compatibility") {
  const ProjSpace sp(3, 2);
  SplitMix64 rng(12);
  const auto pm = collineation_point_map(random_collineation(rng, sp), sp, sp);
  const auto lm = induced_line_map(pm);
  int configs = 0;
  for (int u = 0; u < sp.point_count(); ++u) {
    const Subspace eps = plane_subspace(sp, u);
    for (int p = 0; p < sp.point_count(); ++p) {
      if (!contains(sp, eps, p)) continue;
      for (int a = 0; a < sp.line_count(); ++a) {
        if (sp.incident(p, a)) continue;
        auto pts = sp.line_points(a);
        if (!std::all_of(pts.begin(), pts.end(), [&](int x) { return contains(sp, eps, x); })) continue;
        CHECK(intersection_compatibility_check(lm, pm, p, eps, a));
        CHECK(intersection_compatibility_check(identity_lines(sp), identity_points(sp), p, eps, a));
        ++configs;
      }
    }
  }
  CHECK(configs == 15 * 7 * 4);

  // a kappa that disagrees with the line map
  const Subspace eps = plane_subspace(sp, 0);
  int p = 0;
  while (!contains(sp, eps, p)) ++p;
  int a = 0;
  while (true) {
    auto pts = sp.line_points(a);
    if (!sp.incident(p, a) &&
        std::all_of(pts.begin(), pts.end(), [&](int x) { return contains(sp, eps, x); }))
      break;
    ++a;
  }
  auto wrong = identity_points(sp);
  const int hit = *sp.common_point(pencil(sp, p, eps)[0], a);
  wrong.image[hit] = (hit + 1) % sp.point_count();
  CHECK_FALSE(intersection_compatibility_check(identity_lines(sp), wrong, p, eps, a));

  CHECK_THROWS_AS(intersection_compatibility_check(lm, pm, p, eps, pencil(sp, p, eps)[0]), BadConfiguration);
  int outside = 0;
  while (true) {
    auto pts = sp.line_points(outside);
    if (!std::all_of(pts.begin(), pts.end(), [&](int x) { return contains(sp, eps, x); })) break;
    ++outside;
  }
  CHECK_THROWS_AS(intersection_compatibility_check(lm, pm, p, eps, outside), BadConfiguration);
}
