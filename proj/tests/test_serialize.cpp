#include <gtest/gtest.h>

#include "helpers.hpp"
#include "linkednets/analysis.hpp"
#include "linkednets/errors.hpp"
#include "linkednets/gen.hpp"
#include "linkednets/serialize.hpp"

using namespace linkednets;
using testing_helpers::make_spec;

namespace {

const char* kTiny = R"({"n": 1, "window": [[0,0],[1,0]], "dims": [1,1], "generators": [[0,0]],
  "arrows": [{"from": [0,0], "type": 0, "matrix": [[1]]}, {"from": [1,0], "type": 1, "matrix": [["0"]]}]})";

}  // namespace

TEST(Json, Rationals) {
  EXPECT_EQ(rational_to_json(Rational(3)), Json(3));
  EXPECT_EQ(rational_to_json(Rational(-1, 2)), Json("-1/2"));
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json(-5)), Rational(-5));
  Rational big = parse_rational("98765432109876543210987654321/12345678901");
  EXPECT_EQ(rational_from_json(rational_to_json(big)), big);
  EXPECT_THROW(rational_from_json(Json(1.5)), InvalidInput);
  EXPECT_THROW(rational_from_json(Json("x")), InvalidInput);
}

TEST(Json, MatricesAndSubspaces) {
  RMatrix m{{1, Rational(-2, 3)}, {0, 5}};
  EXPECT_EQ(matrix_from_json(matrix_to_json(m), 2), m);
  EXPECT_EQ(matrix_from_json(Json::array(), 3), RMatrix(0, 3));
  EXPECT_THROW(matrix_from_json(Json::parse("[[1,2],[3]]"), 2), InvalidInput);
  Subspace s = Subspace::span(3, {{1, 2, 3}});
  EXPECT_EQ(subspace_from_json(subspace_to_json(s)), s);
  EXPECT_TRUE(subspace_from_json(subspace_to_json(Subspace::zero(2))).is_zero());
}

TEST(Json, VerticesAndTypeSets) {
  Vertex v = Vertex::from_twists({0, 2, 1});
  EXPECT_EQ(vertex_from_json(vertex_to_json(v), 2), v);
  EXPECT_THROW(vertex_from_json(Json::parse("[3,5,4]"), 2), InvalidInput);
  EXPECT_THROW(vertex_from_json(Json::parse("[0,1]"), 2), InvalidInput);
  EXPECT_EQ(type_set_from_json(type_set_to_json(TypeSet{0, 2}), 2), (TypeSet{0, 2}));
  EXPECT_THROW(type_set_from_json(Json::parse("[3]"), 2), InvalidInput);
}

TEST(NetFile, ParsesTinyNet) {
  auto p = parse_net(kTiny);
  EXPECT_EQ(p.n(), 1);
  EXPECT_EQ(p.window().size(), 2u);
  EXPECT_TRUE(validate(p).passed);
  EXPECT_TRUE(p.arrow(Vertex::from_twists({1, 0}), ArrowType{1})->is_zero());
}

TEST(NetFile, RoundTripIsBitExact) {
  auto fixture = fixture_nonsemisimple();
  std::string text = dump_net(fixture);
  EXPECT_EQ(parse_net(text), fixture);
  EXPECT_EQ(dump_net(parse_net(text)), text);
  EXPECT_EQ(dump_net(parse_net(dump_net(fixture, true)), true), dump_net(fixture, true));
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto net = random_semisimple_net(make_spec(s, 1 + static_cast<int>(s % 3), 2, true)).first;
    std::string t = dump_net(net);
    EXPECT_EQ(parse_net(t), net);
    EXPECT_EQ(dump_net(parse_net(t)), t);
  }
}

TEST(NetFile, FixtureMetadataSurvives) {
  auto back = parse_net(dump_net(fixture_nonsemisimple()));
  EXPECT_TRUE(back.frame());
  EXPECT_EQ(back.boundary_zero_arrows().size(), 3u);
  EXPECT_EQ(back.labels().size(), 7u);
}

TEST(NetFile, RejectsMalformedInput) {
  Json j = Json::parse(kTiny);
  Json extra = j;
  extra["colour"] = "red";
  EXPECT_THROW(net_from_json(extra), InvalidInput);
  Json missing = j;
  missing.erase("dims");
  EXPECT_THROW(net_from_json(missing), InvalidInput);
  Json dup = j;
  dup["arrows"].push_back(dup["arrows"][0]);
  EXPECT_THROW(net_from_json(dup), InvalidInput);
  Json bad_type = j;
  bad_type["arrows"][0]["type"] = 7;
  EXPECT_THROW(net_from_json(bad_type), InvalidInput);
  EXPECT_THROW(parse_net("{not json"), InvalidInput);
  EXPECT_THROW(parse_net("[]"), InvalidInput);
}

TEST(NetFile, BigRationalEntries) {
  Json j = Json::parse(kTiny);
  j["arrows"][0]["matrix"] = Json::parse(R"([["123456789012345678901234567891/7"]])");
  auto p = net_from_json(j);
  EXPECT_EQ((*p.arrow(Vertex::from_twists({0, 0}), ArrowType{0}))(0, 0),
            parse_rational("123456789012345678901234567891/7"));
  EXPECT_NE(dump_net(p).find("\"123456789012345678901234567891/7\""), std::string::npos);
}

TEST(Certificate, RoundTrip) {
  auto p = fixture_nonsemisimple();
  auto c = intersection_property_at(p, Vertex::origin(2));
  ASSERT_TRUE(c);
  Json j = certificate_to_json(*c);
  EXPECT_EQ(j.at("I0"), Json::parse("[1,2]"));
  EXPECT_EQ(j.at("summands"), Json::parse("[[0,2],[0,1]]"));
  auto back = certificate_from_json(j, 2);
  EXPECT_EQ(back.vertex, c->vertex);
  EXPECT_EQ(back.i0, c->i0);
  EXPECT_EQ(back.summands, c->summands);
  EXPECT_EQ(back.lhs, c->lhs);
  EXPECT_EQ(back.rhs, c->rhs);
  EXPECT_TRUE(recheck_certificate(p, back));
}

TEST(Decomposition, SummandsSerialized) {
  auto spec = make_spec(21, 2, 2, false);
  auto net = random_semisimple_net(spec).first;
  auto d = decompose(net);
  Json j = decomposition_to_json(net, d);
  ASSERT_EQ(j.at("summands").size(), 2u);
  for (const auto& s : j.at("summands")) {
    EXPECT_TRUE(s.contains("generator_vertex"));
    EXPECT_TRUE(s.contains("generator_vector"));
  }
  Json net_only = j;
  net_only.erase("summands");
  EXPECT_EQ(net_from_json(net_only), net);
}

TEST(GenSpecFile, RoundTripAndDefaults) {
  auto spec = make_spec(5, 3, 2, true);
  EXPECT_EQ(gen_spec_from_json(gen_spec_to_json(spec)), spec);
  auto d = gen_spec_from_json(Json::parse(R"({"n": 2, "seeds": [[0,0,0]], "seed_rng": 4})"));
  EXPECT_EQ(d.window_radius, 3);
  EXPECT_FALSE(d.conjugate);
  EXPECT_THROW(gen_spec_from_json(Json::parse(R"({"n": 2, "seeds": [[0,0]]})")), InvalidInput);
}
