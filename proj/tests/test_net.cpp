#include <gtest/gtest.h>

#include "helpers.hpp"
#include "linkednets/analysis.hpp"
#include "linkednets/errors.hpp"
#include "linkednets/gen.hpp"
#include "linkednets/net.hpp"

using namespace linkednets;
using testing_helpers::make_spec;

namespace {

Vertex V(std::initializer_list<Int> t) { return Vertex::from_twists(IntTuple(t)); }

const Vertex kCenter = V({0, 0, 0});

bool has_witness(const CheckReport& r, const std::string& condition, const std::vector<Vertex>& vertices) {
  for (const auto& w : r.witnesses)
    if (w.condition == condition && w.vertices == vertices) return true;
  return false;
}

std::vector<bool> verdicts(const NetPresentation& p) {
  return {check_weakly_linked(p).passed, check_linked(p).passed, check_exact(p).passed,
          check_pure_and_generated(p).passed};
}

std::optional<RMatrix> p_try(const NetPresentation& p, const Vertex& u, const Vertex& w) {
  try {
    return path_map(p, u, w);
  } catch (const WindowInsufficient&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(Presentation, SortsAndRejectsDuplicates) {
  NetPresentation p(1, {V({1, 0}), V({0, 0})}, {2, 1}, {}, {V({0, 0})});
  EXPECT_EQ(p.window().front(), V({0, 0}));
  EXPECT_EQ(p.dim(V({1, 0})), 2u);
  EXPECT_THROW(NetPresentation(1, {V({0, 0}), V({0, 0})}, {1, 1}, {}, {}), InvalidInput);
  EXPECT_THROW(NetPresentation(1, {V({0, 0})}, {1, 1}, {}, {}), InvalidInput);
  EXPECT_THROW(p.dim(V({5, 0})), InvalidInput);
}

TEST(Validate, Fixture) {
  EXPECT_TRUE(validate(fixture_nonsemisimple()).passed);
}

TEST(Validate, WrongShapeNamesArrow) {
  auto p = fixture_nonsemisimple();
  p.set_arrow(ArrowRef{kCenter, {0}}, RMatrix(2, 3));
  auto r = validate(p);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].condition, "shape");
  EXPECT_NE(r.witnesses[0].detail.find("(0,0,0) -[0]-> (1,0,0)"), std::string::npos);
}

TEST(Validate, EmptyWindowAndOtherDefects) {
  EXPECT_FALSE(validate(NetPresentation(2, {}, {}, {}, {})).passed);
  NetPresentation p(1, {V({0, 0}), V({1, 0})}, {1, 1}, {}, {V({3, 0})});
  auto r = validate(p);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(has_witness(r, "generators", {V({3, 0})}));
  EXPECT_TRUE(has_witness(r, "missing_arrow", {V({0, 0}), V({1, 0})}));
}

TEST(PathMap, FixtureExamples) {
  auto p = fixture_nonsemisimple();
  EXPECT_EQ(path_map(p, kCenter, kCenter), RMatrix::identity(2));
  EXPECT_EQ(path_map(p, kCenter, V({1, 0, 1})), (RMatrix{{1, -1}, {0, 0}}));
  EXPECT_EQ(path_map(p, V({1, 0, 0}), kCenter), RMatrix::zero(2, 2));
  EXPECT_EQ(simple_map(p, kCenter, TypeSet{0}), RMatrix::identity(2));
  EXPECT_EQ(simple_map(p, kCenter, TypeSet{1, 2}), (RMatrix{{0, 0}, {0, 1}}));
  EXPECT_EQ(simple_map(p, V({1, 0, 1}), TypeSet{}), RMatrix::identity(2));
  EXPECT_THROW(simple_map(p, kCenter, TypeSet::full(2)), InvalidInput);
}

TEST(PathMap, MissingArrowsReported) {
  auto p = fixture_nonsemisimple();
  try {
    path_map(p, V({1, 0, 0}), V({2, 0, 0}));
    FAIL() << "expected WindowInsufficient";
  } catch (const WindowInsufficient& e) {
    EXPECT_FALSE(e.missing().empty());
  }
  try {
    path_map(p, V({1, 0, 0}), V({1, 0, 1}));
  } catch (...) {
    FAIL() << "in-window path should be found";
  }
}

TEST(WeaklyLinked, FixturePassesAndCircuitVanishes) {
  auto p = fixture_nonsemisimple();
  auto r = check_weakly_linked(p);
  EXPECT_TRUE(r.passed);
  RMatrix circuit = RMatrix::identity(2);
  Vertex cur = kCenter;
  for (int t = 0; t <= 2; ++t) {
    circuit = *p.arrow(cur, ArrowType{t}) * circuit;
    cur = arrow_target(cur, ArrowType{t});
  }
  EXPECT_TRUE(circuit.is_zero());
  for (const auto& g : r.coverage) EXPECT_NE(g.vertices.front(), kCenter);
}

TEST(WeaklyLinked, MutatedSquareFails) {
  auto p = fixture_nonsemisimple();
  p.set_arrow(ArrowRef{V({1, 0, 0}), {2}}, RMatrix::identity(2));
  auto r = check_weakly_linked(p);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].condition, "square");
  EXPECT_EQ(r.witnesses[0].vertices[0], kCenter);
  EXPECT_EQ(r.witnesses[0].type_sets[0], (TypeSet{0, 2}));
  EXPECT_TRUE(recheck_witness(p, r.witnesses[0]));
  EXPECT_FALSE(recheck_witness(fixture_nonsemisimple(), r.witnesses[0]));
}

TEST(WeaklyLinked, AllZeroPasses) {
  auto p = fixture_nonsemisimple();
  const auto original = p.arrows();
  for (const auto& [ref, m] : original) p.set_arrow(ref, RMatrix::zero(2, 2));
  EXPECT_TRUE(check_weakly_linked(p).passed);
}

TEST(Linked, FixturePasses) { EXPECT_TRUE(check_linked(fixture_nonsemisimple()).passed); }

TEST(Linked, MutationFailsWithVector) {
  auto p = fixture_nonsemisimple();
  p.set_arrow(ArrowRef{kCenter, {0}}, RMatrix::zero(2, 2));
  auto r = check_linked(p);
  EXPECT_FALSE(r.passed);
  const Witness& w = r.witnesses.front();
  EXPECT_EQ(w.vertices, std::vector<Vertex>{kCenter});
  EXPECT_EQ(w.type_sets, (std::vector<TypeSet>{TypeSet{0}, TypeSet{1, 2}}));
  EXPECT_EQ(w.vectors.front(), (RVector{1, 0}));
  EXPECT_TRUE(recheck_witness(p, w));
}

TEST(Linked, DirectSumOfSimplesPasses) {
  auto [net, k] = random_semisimple_net(make_spec(3, 2, 2, false));
  EXPECT_TRUE(check_linked(net).passed);
}

TEST(Exact, FixturePair) {
  auto p = fixture_nonsemisimple();
  EXPECT_EQ(kernel(path_map(p, kCenter, V({1, 0, 1}))), image(path_map(p, V({1, 0, 1}), kCenter)));
  auto r = check_exact(p);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.coverage.empty());
}

TEST(Exact, MutationFailsAtPair) {
  auto p = fixture_nonsemisimple();
  p.set_arrow(ArrowRef{V({1, 0, 1}), {1}}, RMatrix::zero(2, 2));
  auto r = check_exact(p);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(has_witness(r, "exact", {kCenter, V({1, 0, 1})}));
  for (const auto& w : r.witnesses) EXPECT_TRUE(recheck_witness(p, w));
}

TEST(Exact, OneDirectionZero) {
  // n = 1, two vertices: iso one way, zero back; circuit vanishes.
  std::map<ArrowRef, RMatrix> arrows{{{V({0, 0}), {0}}, RMatrix{{1}}}, {{V({1, 0}), {1}}, RMatrix{{0}}}};
  NetPresentation p(1, {V({0, 0}), V({1, 0})}, {1, 1}, arrows, {V({0, 0})});
  EXPECT_TRUE(check_exact(p).passed);
}

TEST(PureGenerated, Fixture) {
  auto r = check_pure_and_generated(fixture_nonsemisimple());
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.minimal_generators,
            (std::vector<Vertex>{V({0, 0, 0}), V({0, 1, 1}), V({1, 0, 1}), V({1, 1, 0})}));
}

TEST(PureGenerated, SimpleNetSingleton) {
  auto [net, k] = random_semisimple_net(make_spec(9, 2, 1, false));
  auto r = check_pure_and_generated(net);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.minimal_generators.size(), 1u);
}

TEST(PureGenerated, MixedDimsFail) {
  std::map<ArrowRef, RMatrix> arrows{{{V({0, 0}), {0}}, RMatrix{{1}, {0}}}, {{V({1, 0}), {1}}, RMatrix{{0, 0}}}};
  NetPresentation p(1, {V({0, 0}), V({1, 0})}, {1, 2}, arrows, {V({0, 0})});
  auto r = check_pure_and_generated(p);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witnesses.front().condition, "purity");
}

TEST(Subnet, Examples) {
  auto p = fixture_nonsemisimple();
  std::vector<Seed> all;
  for (const auto& g : p.generators()) all.push_back(Seed{g, Subspace::full(2)});
  EXPECT_EQ(subnet_generated(p, all).net.dims(), p.dims());
  auto from_center = subnet_generated(p, {Seed{kCenter, Subspace::full(2)}});
  EXPECT_EQ(from_center.net.dim(kCenter), 2u);
  EXPECT_LT(from_center.net.dim(V({0, 1, 1})), 2u);
  auto none = subnet_generated(p, {Seed{kCenter, Subspace::zero(2)}});
  EXPECT_EQ(none.net.max_dim(), 0u);

  auto line = subnet_generated(p, {Seed{V({0, 1, 1}), Subspace::span(2, {{1, 0}})}});
  for (std::size_t d : line.net.dims()) EXPECT_EQ(d, 1u);
  EXPECT_EQ(line.spaces[*p.index_of(kCenter)], Subspace::span(2, {{1, 0}}));
  for (const auto& [ref, m] : p.arrows()) {
    const auto& src = line.spaces[*p.index_of(ref.source)];
    const auto& dst = line.spaces[*p.index_of(ref.target())];
    EXPECT_TRUE(contains(dst, push_forward(m, src)));
  }
}

TEST(Subnet, NotASubnetNamesArrow) {
  auto p = fixture_nonsemisimple();
  std::vector<Subspace> spaces(p.window().size(), Subspace::zero(2));
  spaces[*p.index_of(kCenter)] = Subspace::full(2);
  try {
    subnet_from_spaces(p, spaces);
    FAIL();
  } catch (const PreconditionFailed& e) {
    EXPECT_NE(std::string(e.what()).find("(0,0,0)"), std::string::npos);
  }
}

TEST(Quotient, Examples) {
  auto p = fixture_nonsemisimple();
  std::vector<Subspace> zero(p.window().size(), Subspace::zero(2));
  EXPECT_EQ(quotient(p, subnet_from_spaces(p, zero)), p);
  std::vector<Subspace> full(p.window().size(), Subspace::full(2));
  EXPECT_EQ(quotient(p, subnet_from_spaces(p, full)).max_dim(), 0u);

  auto spec = make_spec(4, 2, 2, false);
  auto window = spec_window(spec);
  auto a = random_simple_net(2, spec.seeds[0], window, 1);
  auto b = random_simple_net(2, spec.seeds[1], window, 2);
  auto sum = direct_sum({a, b});
  std::vector<Subspace> first;
  first.assign(sum.window().size(), Subspace::span(2, {{1, 0}}));
  auto q = quotient(sum, subnet_from_spaces(sum, first));
  for (const auto& [ref, m] : b.arrows()) EXPECT_EQ(*q.arrow(ref.source, ref.type), m);
}

TEST(DirectSum, CopiesAndBlocks) {
  auto p = fixture_nonsemisimple();
  auto s = direct_sum({p, p, p});
  for (std::size_t d : s.dims()) EXPECT_EQ(d, 6u);
  EXPECT_EQ(verdicts(s), verdicts(p));
  EXPECT_THROW(direct_sum({}), InvalidInput);
}

TEST(Conjugate, IdentityAndInvariance) {
  auto p = fixture_nonsemisimple();
  std::map<Vertex, RMatrix> id;
  for (const auto& v : p.window()) id.emplace(v, RMatrix::identity(2));
  EXPECT_EQ(conjugate(p, id), p);

  std::map<Vertex, RMatrix> basis;
  std::uint64_t seed = 11;
  for (const auto& v : p.window()) basis.emplace(v, random_invertible(2, seed++));
  auto q = conjugate(p, basis);
  EXPECT_EQ(verdicts(q), verdicts(p));
  for (const auto& u : p.window())
    for (const auto& w : p.window()) {
      auto a = p_try(p, u, w);
      if (!a) continue;
      EXPECT_EQ(rank(*a), rank(path_map(q, u, w)));
    }
  auto m = p;
  m.set_arrow(ArrowRef{kCenter, {0}}, RMatrix::zero(2, 2));
  EXPECT_EQ(verdicts(conjugate(m, basis)), verdicts(m));
}

TEST(Invariants, NonAdmissibleCompositionsVanish) {
  // Along any path whose type vector is everywhere positive the map is zero.
  for (std::uint64_t s = 0; s < 12; ++s) {
    auto [net, k] = random_semisimple_net(make_spec(s, 1 + static_cast<int>(s % 3), 2, s % 2 == 1));
    for (const auto& u : net.window()) {
      Vertex cur = u;
      RMatrix m = RMatrix::identity(net.dim(u));
      bool ok = true;
      for (int t = 0; t <= net.n() && ok; ++t) {
        const RMatrix* a = net.arrow(cur, ArrowType{t});
        if (!a) ok = false;
        else {
          m = *a * m;
          cur = arrow_target(cur, ArrowType{t});
        }
      }
      if (ok) EXPECT_TRUE(m.is_zero());
    }
  }
}

TEST(Invariants, PathMapsCompose) {
  auto [net, k] = random_semisimple_net(make_spec(5, 2, 3, true));
  int checked = 0;
  for (const auto& u : net.window())
    for (const auto& v : net.window()) {
      auto uv = p_try(net, u, v);
      if (!uv) continue;
      for (const auto& w : net.window()) {
        if (distance(u, w) != distance(u, v) + distance(v, w)) continue;
        auto vw = p_try(net, v, w);
        auto uw = p_try(net, u, w);
        if (!vw || !uw) continue;
        EXPECT_EQ(*vw * *uv, *uw);
        ++checked;
      }
    }
  EXPECT_GT(checked, 50);
}
