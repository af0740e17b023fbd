#include "ladder/serialize.hpp"
#include "ladder/text.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ladder;
using ladder::testing::Gen;

TEST(Parse, Fixtures) {
  EXPECT_EQ(parse_lie("Z[1,0] - Z[0,1]"), LieElement::generator(1, 0) - LieElement::generator(0, 1));
  EXPECT_EQ(parse_gl("3/2*E[2,1]"), Scalar(3, 2) * GlElement::unit(2, 1));
  EXPECT_EQ(parse_lie("-Y + 2*Z[0,0]"), Scalar(2) * LieElement::generator(0, 0) - LieElement::derivation_y());
  EXPECT_EQ(parse_c("C[-2] + C[3]"), CElement::generator(-2) + CElement::generator(3));
  EXPECT_EQ(parse_poly("t[1]^2*t[0] + 3"), multiply(multiply(ladder::ladder(1), ladder::ladder(1)), ladder::ladder(0)) + Scalar(3) * LadderPoly::unit(Monomial{}));
  EXPECT_TRUE(parse_lie("0").is_zero());
  EXPECT_TRUE(std::holds_alternative<GlElement>(parse_element("E[0,0]")));
  EXPECT_TRUE(std::holds_alternative<LadderPoly>(parse_element("t[3]")));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_element("Z[-1,0]");
    FAIL() << "negative index accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  for (const char* bad : {"Z[1,0] + E[0,0]", "Z[1", "Z[1,0] +", "2**Z[0,0]", "Q[1,1]", "Z[1,0] t[1]", "", "E[0,0] + 1"})
    EXPECT_THROW(parse_element(bad), ParseError) << bad;
}

TEST(Print, Canonical) {
  EXPECT_EQ(to_text(LieElement::generator(1, 1) - LieElement::generator(0, 0)), "-Z[0,0] + Z[1,1]");
  EXPECT_EQ(to_text(Scalar(3, 2) * GlElement::unit(2, 1)), "3/2*E[2,1]");
  EXPECT_EQ(to_text(LieElement{}), "0");
}

TEST(RoundTrip, RandomElementsOfEachKind) {
  Gen g(61);
  for (int i = 0; i < 1000; ++i) {
    const auto lie = g.lie(9, 6);
    ASSERT_EQ(parse_lie(to_text(lie)), lie) << to_text(lie);
    const auto gl = g.gl(9, 6);
    ASSERT_EQ(parse_gl(to_text(gl)), gl) << to_text(gl);
    const auto c = g.c(9, 5);
    ASSERT_EQ(parse_c(to_text(c)), c) << to_text(c);
    const auto poly = g.poly(6, 5);
    ASSERT_EQ(parse_poly(to_text(poly)), poly) << to_text(poly);
  }
}

TEST(RoundTrip, RandomWordElements) {
  Gen g(62);
  const Alphabet alphabet({{"a", 1, 1}, {"bb", 2, 3}});
  auto word = [&] {
    Word w;
    for (auto len = g.integer(0, 3); len > 0; --len) w.letters.push_back(g.index(1));
    return w;
  };
  for (int i = 0; i < 1000; ++i) {
    WordLieElement e;
    for (auto terms = g.integer(1, 4); terms > 0; --terms) e.add({word(), word()}, g.scalar());
    ASSERT_EQ(parse_word_lie(to_text(e, alphabet), alphabet), e) << to_text(e, alphabet);
    ASSERT_EQ(word_lie_from_json(to_json(e, alphabet), alphabet), e);
  }
}

TEST(Json, RoundTrip) {
  Gen g(63);
  for (int i = 0; i < 300; ++i) {
    const auto lie = g.lie(7, 5);
    ASSERT_EQ(lie_from_json(Json::parse(to_json(lie).dump())), lie);
    const auto gl = g.gl(7, 5);
    ASSERT_EQ(gl_from_json(to_json(gl)), gl);
    const auto c = g.c(7);
    ASSERT_EQ(c_from_json(to_json(c)), c);
    const auto poly = g.poly(5);
    ASSERT_EQ(poly_from_json(to_json(poly)), poly);
  }
  const auto j = to_json(LieElement::generator(1, 0));
  EXPECT_EQ(j.dump(), R"({"y":"0","z":[{"n":1,"m":0,"c":"1"}]})");
}

TEST(Json, SchemaViolations) {
  EXPECT_THROW(lie_from_json(Json::parse(R"({"z":[{"n":-1,"m":0,"c":"1"}]})")), std::invalid_argument);
  EXPECT_THROW(lie_from_json(Json::parse(R"({"z":[{"n":1,"m":0,"c":"x"}]})")), std::invalid_argument);
  EXPECT_THROW(gl_from_json(Json::parse(R"({"z":[]})")), std::invalid_argument);
  EXPECT_THROW(alphabet_from_json(Json::parse(R"({"letters":[{"name":"a","degree":0}]})")), std::invalid_argument);
}

TEST(Json, AlgebraImportMatchesBuiltin) {
  const auto gl2 = truncate_gl(2);
  const auto again = algebra_from_json(to_json(gl2));
  EXPECT_EQ(again.labels(), gl2.labels());
  EXPECT_EQ(again.structure(), gl2.structure());
  const auto swapped = algebra_from_json(Json::parse(
      R"({"labels":["x","y","z"],"brackets":[{"left":1,"right":0,"terms":[{"index":2,"c":"-1"}]}]})"));
  EXPECT_EQ(swapped.bracket(0, 1), SparseVector<std::size_t>::unit(2));
}
