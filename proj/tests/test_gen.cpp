#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "linkednets/analysis.hpp"
#include "linkednets/errors.hpp"
#include "linkednets/gen.hpp"

using namespace linkednets;
using testing_helpers::make_spec;

TEST(GenSpec, Validation) {
  GenSpec spec = make_spec(1, 2, 2, false);
  EXPECT_NO_THROW(spec.validate());
  GenSpec small = spec;
  small.window_radius = 2;
  EXPECT_THROW(small.validate(), InvalidInput);
  GenSpec empty = spec;
  empty.seeds.clear();
  EXPECT_THROW(empty.validate(), InvalidInput);
  GenSpec mixed = spec;
  mixed.seeds.push_back(Vertex::origin(3));
  EXPECT_THROW(mixed.validate(), InvalidInput);
}

TEST(Gen, Deterministic) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto spec = make_spec(s, 2, 3, true);
    EXPECT_EQ(random_semisimple_net(spec).first, random_semisimple_net(spec).first);
  }
  auto a = make_spec(1, 2, 2, true);
  auto b = a;
  b.seed_rng += 1;
  EXPECT_FALSE(random_semisimple_net(a).first == random_semisimple_net(b).first);
  EXPECT_EQ(random_invertible(3, 9), random_invertible(3, 9));
}

TEST(Gen, SimpleNetsPassEveryChecker) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    int n = 1 + static_cast<int>(s % 3);
    auto spec = make_spec(40 + s, n, 1, false);
    auto [net, k] = random_semisimple_net(spec);
    EXPECT_EQ(k, 1u);
    for (const auto& r : axiom_reports(net)) EXPECT_TRUE(r.passed) << r.check;
    EXPECT_EQ(net.generators(), spec.seeds);
    EXPECT_EQ(is_simple(net), spec.seeds[0]);
    for (std::size_t d : net.dims()) EXPECT_EQ(d, 1u);
  }
}

TEST(Gen, SemisimpleNetsPassEveryChecker) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    int n = 1 + static_cast<int>(s % 3);
    auto spec = make_spec(60 + s, n, 2 + s % 3, s % 2 == 1);
    auto [net, k] = random_semisimple_net(spec);
    EXPECT_EQ(k, spec.seeds.size());
    for (const auto& r : axiom_reports(net)) EXPECT_TRUE(r.passed) << r.check;
    EXPECT_EQ(net.generators(), hull(spec.seeds));
    EXPECT_EQ(net.window(), spec_window(spec));
    EXPECT_TRUE(window_adequacy(net).adequate);
  }
}

TEST(Gen, ScalarsComeFromPool) {
  const auto& pool = scalar_pool();
  auto [net, k] = random_semisimple_net(make_spec(5, 2, 1, false));
  for (const auto& [ref, m] : net.arrows()) {
    Rational x = m(0, 0);
    if (x == 0) continue;
    bool ratio = false;
    for (const auto& a : pool)
      for (const auto& b : pool) ratio = ratio || x == a / b;
    EXPECT_TRUE(ratio);
  }
}

TEST(Gen, SeedOutsideWindowRejected) {
  auto spec = make_spec(3, 2, 1, false);
  std::vector<Vertex> window{Vertex::origin(2)};
  Vertex far = Vertex::from_twists({5, 0, 0});
  EXPECT_THROW(random_simple_net(2, far, window, 1), InvalidInput);
}

TEST(Gen, PolygonSeedsDecompose) {
  std::mt19937_64 rng(91);
  for (int s = 0; s < 10; ++s) {
    auto polygon = testing_helpers::random_polygon(rng, 2, 2 + s % 2);
    ASSERT_TRUE(is_polygon(polygon));
    GenSpec spec{.n = 2, .window_radius = 3, .seeds = polygon, .seed_rng = rng(), .conjugate = s % 2 == 0};
    auto [net, k] = random_semisimple_net(spec);
    std::sort(polygon.begin(), polygon.end());
    EXPECT_EQ(net.generators(), polygon);
    auto d = decompose(net);
    EXPECT_TRUE(d.semisimple());
    EXPECT_EQ(d.summands.size(), k);
  }
}

TEST(Gen, FixtureMetadata) {
  auto p = fixture_nonsemisimple();
  EXPECT_EQ(p.window().size(), 7u);
  EXPECT_EQ(p.generators().size(), 7u);
  ASSERT_TRUE(p.frame());
  EXPECT_EQ(to_multidegree(*p.frame(), Vertex::origin(2)), (IntTuple{2, 2, 2}));
  EXPECT_EQ(to_multidegree(*p.frame(), Vertex::from_twists({0, 1, 1})), (IntTuple{4, 1, 1}));
  EXPECT_EQ(p.boundary_zero_arrows().size(), 3u);
}
