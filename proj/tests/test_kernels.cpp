#include <doctest.h>

#include <numeric>

#include "pgq/kernels.hpp"
#include "pgq/maps.hpp"
#include "pgq/rng.hpp"
#include "pgq/theorems.hpp"

using namespace pgq;
namespace k = pgq::kernels;

namespace {

std::vector<int> random_permutation(SplitMix64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("line adjacency kernels agree") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 7}, {3, 4}}) {
    const ProjSpace sp(n, q);
    CHECK(k::serial::line_adjacency(sp) == k::parallel::line_adjacency(sp));
  }
}

TEST_CASE("relation kernels agree") {
  const ProjSpace sp(3, 2);
  SplitMix64 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> image;
    if (t % 3 == 0) {
      image = generate_instance({static_cast<std::uint64_t>(t), InstanceKind::Collineation}, sp, sp).image;
    } else if (t % 3 == 1) {
      image = generate_instance({static_cast<std::uint64_t>(t), InstanceKind::Perturbed}, sp, sp).image;
    } else {
      image = random_permutation(rng, sp.line_count());
      if (t % 2) image[3] = image[4];
    }
    for (auto r : {k::Relation::Intersecting, k::Relation::Skew})
      CHECK(k::serial::preserves_relation(sp, sp, image, r) ==
            k::parallel::preserves_relation(sp, sp, image, r));
  }
}

TEST_CASE("collinearity kernels agree") {
  const ProjSpace small(2, 2), sp(3, 2), big(3, 3);
  SplitMix64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const ProjSpace& tgt = t % 2 ? big : sp;
    std::vector<int> image(sp.point_count());
    switch (t % 4) {
      case 0: image = k::semilinear_point_images(sp, sp, random_collineation(rng, sp).matrix, 0); break;
      case 1:
        for (auto& x : image) x = static_cast<int>(rng.below(tgt.point_count()));
        break;
      case 2: image.assign(image.size(), 5); break;
      default: {
        image = random_permutation(rng, sp.point_count());
        break;
      }
    }
    const ProjSpace& t2 = (t % 4 == 0 || t % 4 == 3) ? sp : tgt;
    CHECK(k::serial::preserves_collinearity(sp, t2, image) ==
          k::parallel::preserves_collinearity(sp, t2, image));
    CHECK(k::serial::preserves_noncollinearity(sp, t2, image) ==
          k::parallel::preserves_noncollinearity(sp, t2, image));
  }
  std::vector<int> id(7);
  std::iota(id.begin(), id.end(), 0);
  CHECK(k::parallel::preserves_collinearity(small, small, id));
  CHECK(k::parallel::preserves_noncollinearity(small, small, id));
}

TEST_CASE("semilinear line image kernels agree") {
  for (int q : {2, 4}) {
    const ProjSpace sp(3, q);
    SplitMix64 rng(q);
    std::vector<Matrix> ms;
    for (int i = 0; i < 30; ++i) ms.push_back(random_collineation(rng, sp).matrix);
    for (int a = 0; a < sp.field().degree(); ++a) {
      const auto s = k::serial::semilinear_line_images(sp, ms, a);
      CHECK(s == k::parallel::semilinear_line_images(sp, ms, a));
      for (std::size_t i = 0; i < ms.size(); ++i)
        CHECK(s[i] == induced_line_map(collineation_point_map({ms[i], a}, sp, sp)).image);
    }
  }
}
