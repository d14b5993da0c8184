#include "linkhom/io.hpp"
#include "linkhom/parse.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace linkhom;
using namespace linkhom::testing;

namespace {

const ParseContext kH4 = ParseContext::hlink(4);

std::size_t error_offset(const std::string& s, const ParseContext& ctx) {
  try {
    parse(s, ctx);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

/// Random parser-shaped tree.
GroupExpr random_tree(Rng& rng, const ParseContext& ctx, int depth) {
  int kind = depth <= 0 ? 0 : uniform(rng, 0, 3);
  auto gen = [&] {
    Gen g;
    if (ctx.kind == ParseContext::Kind::RF) {
      g.i = uniform(rng, 1, ctx.rank);
    } else {
      g.i = uniform(rng, 1, ctx.rank - 1);
      g.j = uniform(rng, g.i + 1, ctx.rank);
    }
    return GroupExpr::generator(g, uniform(rng, -3, 3));
  };
  switch (kind) {
    case 0:
      return gen();
    case 1: {
      std::vector<GroupExpr> xs;
      for (int c = uniform(rng, 2, 4); c > 0; --c) xs.push_back(random_tree(rng, ctx, depth - 1));
      return GroupExpr::product(std::move(xs));
    }
    case 2:
      return GroupExpr::comm(random_tree(rng, ctx, depth - 1), random_tree(rng, ctx, depth - 1));
    default: {
      GroupExpr base = random_tree(rng, ctx, depth - 1);
      return GroupExpr::power(std::move(base), uniform(rng, -4, 4));
    }
  }
}

}  // namespace

TEST(Parse, ProductOfGeneratorPowers) {
  GroupExpr e = parse("x12 x13^-1", kH4);
  ASSERT_EQ(e.kind, GroupExpr::Kind::Product);
  ASSERT_EQ(e.children.size(), 2u);
  EXPECT_EQ(e.children[0], GroupExpr::generator({1, 2}));
  EXPECT_EQ(e.children[1], GroupExpr::generator({1, 3}, -1));
}

TEST(Parse, CommutatorPower) {
  GroupExpr e = parse("[x13,x12]^3", kH4);
  EXPECT_EQ(e, GroupExpr::power(h_triple(1, 2, 3), 3));
  EXPECT_TRUE(sl_equal(sl_evaluate(e, 4), h4_realize(h4_power(h4_basis(A123), 3))));
}

TEST(Parse, WhitespaceAndParentheses) {
  EXPECT_EQ(parse("  ( x12  x13 ) ^ 2 ", kH4), parse("(x12 x13)^2", kH4));
  EXPECT_EQ(parse("(x12)", kH4), GroupExpr::generator({1, 2}));
  EXPECT_EQ(parse("x12^+2", kH4), GroupExpr::generator({1, 2}, 2));
  EXPECT_EQ(parse("()", kH4), GroupExpr::identity());
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("x12^", kH4), 4u);
  EXPECT_EQ(error_offset("[x12 x13]", kH4), 8u);
  EXPECT_EQ(error_offset("x12 )", kH4), 4u);
  EXPECT_EQ(error_offset("", kH4), 0u);
  EXPECT_EQ(error_offset("y12", kH4), 0u);
}

TEST(Parse, GeneratorRules) {
  EXPECT_EQ(error_offset("x123", kH4), 1u);
  EXPECT_EQ(error_offset("x15", kH4), 0u);
  EXPECT_EQ(error_offset("x21", kH4), 0u);
  EXPECT_EQ(parse("x{1,3}", kH4), GroupExpr::generator({1, 3}));
  ParseContext h12 = ParseContext::hlink(12);
  EXPECT_EQ(parse("x{10,12}", h12), GroupExpr::generator({10, 12}));
  EXPECT_NE(error_offset("x12", h12), std::string::npos);
  EXPECT_EQ(parse("x3 x1^-2", ParseContext::rf(3)),
            GroupExpr::product({GroupExpr::generator({3, 0}), GroupExpr::generator({1, 0}, -2)}));
  EXPECT_EQ(error_offset("x4", ParseContext::rf(3)), 0u);
  EXPECT_EQ(error_offset("x0", ParseContext::rf(3)), 0u);
}

TEST(Parse, BigExponents) {
  GroupExpr e = parse("x12^123456789012345678901234567890", kH4);
  EXPECT_EQ(e.exponent, Int("123456789012345678901234567890"));
}

TEST(Print, RoundTripOnRandomTrees) {
  Rng rng(91);
  for (int it = 0; it < 500; ++it) {
    ParseContext ctx = it % 3 == 0 ? ParseContext::rf(uniform(rng, 1, 6))
                                   : ParseContext::hlink(it % 3 == 1 ? uniform(rng, 2, 9) : uniform(rng, 10, 12));
    GroupExpr t = random_tree(rng, ctx, uniform(rng, 0, 4));
    std::string s = print(t, ctx);
    EXPECT_EQ(parse(s, ctx), t) << s;
    EXPECT_EQ(print(parse(s, ctx), ctx), s);
  }
}

TEST(Print, ParenthesizesNestedProductsAndPowerBases) {
  GroupExpr inner = GroupExpr::product({GroupExpr::generator({1, 2}), GroupExpr::generator({1, 3})});
  EXPECT_EQ(print(GroupExpr::product({inner, GroupExpr::generator({1, 4})}), kH4), "(x12 x13) x14");
  EXPECT_EQ(print(GroupExpr::power(inner, -2), kH4), "(x12 x13)^-2");
  EXPECT_EQ(print(GroupExpr::power(GroupExpr::generator({1, 2}, 2), 3), kH4), "(x12^2)^3");
  EXPECT_EQ(print(h_triple(1, 2, 3), kH4), "[x13,x12]");
}

TEST(Json, IntegersAreExact) {
  EXPECT_TRUE(int_to_json(Int(42)).is_number_integer());
  Int big("-98765432109876543210");
  EXPECT_TRUE(int_to_json(big).is_string());
  EXPECT_EQ(int_from_json(int_to_json(big)), big);
  EXPECT_EQ(int_from_json(Json(-7)), -7);
  EXPECT_THROW(int_from_json(Json("12a")), DomainError);
  EXPECT_THROW(int_from_json(Json(1.5)), DomainError);
}

TEST(Json, NormalFormRoundTrip) {
  Rng rng(92);
  for (int it = 0; it < 20; ++it) {
    H4NormalForm nf = random_nf(rng, 5);
    Json j = to_json(nf);
    EXPECT_EQ(j.size(), 12u);
    EXPECT_TRUE(j.contains("1324"));
    EXPECT_EQ(nf_from_json(j), nf);
  }
  EXPECT_THROW(nf_from_json(Json{{"21", 1}}), DomainError);
}

TEST(Json, MilnorAndBounds) {
  Json m = to_json(milnor(sl_generator(1, 2, 2)));
  EXPECT_EQ(m["n"], 2);
  EXPECT_EQ(m["mu"]["1,2"], 1);
  BoundReport r;
  r.lower = 2;
  Json b = to_json(r);
  EXPECT_EQ(b["upper"], "infinity");
  EXPECT_TRUE(b["exact"].is_null());
}

TEST(Json, MoveSequenceRoundTrip) {
  Rng rng(93);
  for (int it = 0; it < 20; ++it) {
    LongitudeTuple t = sl_evaluate(random_h_expr(rng, 4, 8), 4);
    MoveSequence s = synthesize_crossings(t);
    MoveSequence back = moves_from_json(Json::parse(to_json(s).dump()), 4);
    EXPECT_EQ(back.moves, s.moves);
    EXPECT_TRUE(verify_moves(t, back));
  }
  LongitudeTuple d = sl_evaluate(GroupExpr::comm(h_triple(1, 2, 3), h_generator(1, 4)), 4);
  MoveSequence ds = synthesize_delta(d);
  EXPECT_EQ(moves_from_json(to_json(ds), 4).moves, ds.moves);
  EXPECT_THROW(moves_from_json(Json::parse(R"([{"kind":"crossing","pair":[2,1],"sign":1}])"), 4), DomainError);
  EXPECT_THROW(moves_from_json(Json::parse(R"([{"kind":"crossing","pair":[1,2],"sign":2}])"), 4), DomainError);
}

TEST(Json, GraphRoundTrip) {
  WeightedGraph g = phi4_witness(8);
  Json j = to_json(g);
  EXPECT_EQ(j["edges"]["1-2"], 2);
  EXPECT_FALSE(j["edges"].contains("1-4"));
  EXPECT_EQ(graph_from_json(j), g);
}
