#include "ladder/lie.hpp"
#include "ladder/text.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ladder;
using ladder::testing::Gen;

namespace {

LieElement Z(std::uint32_t n, std::uint32_t m) { return LieElement::generator(n, m); }

std::vector<Scalar> basis_vector(std::size_t k, std::size_t size) {
  std::vector<Scalar> v(size);
  v[k] = 1;
  return v;
}

}  // namespace

TEST(LieBracket, Fixtures) {
  EXPECT_EQ(bracket(Z(1, 0), Z(0, 1)), Z(1, 1) - Z(0, 0));
  EXPECT_EQ(bracket(Z(2, 0), Z(0, 1)), Z(2, 1) - Z(1, 0));
  EXPECT_TRUE(bracket(Z(1, 0), Z(2, 0)).is_zero());
  EXPECT_EQ(bracket(LieElement::derivation_y(), Z(3, 1)), Scalar(2) * Z(3, 1));
  EXPECT_EQ(bracket(LieElement::derivation_y(), Z(0, 2)), Scalar(-2) * Z(0, 2));
  EXPECT_TRUE(bracket(LieElement::derivation_y(), LieElement::derivation_y()).is_zero());
}

// The bracket agrees with the commutator of shift operators on the ladders.
TEST(LieBracket, MatchesShiftOperatorModel) {
  Gen g(21);
  constexpr std::size_t size = 64;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = g.lie(6), b = g.lie(6);
    const auto ab = bracket(a, b);
    for (std::size_t k = 0; k <= 20; ++k) {
      const auto v = basis_vector(k, size);
      const auto lhs = ladder::testing::apply_model(ab, v, size);
      const auto ba = ladder::testing::apply_model(a, ladder::testing::apply_model(b, v, size), size);
      const auto bb = ladder::testing::apply_model(b, ladder::testing::apply_model(a, v, size), size);
      for (std::size_t i = 0; i < size; ++i) ASSERT_EQ(lhs[i], ba[i] - bb[i]) << to_text(a) << " ; " << to_text(b);
    }
  }
}

TEST(LieBracket, AntisymmetryAndJacobiOnRandomTriples) {
  Gen g(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = g.lie(8), b = g.lie(8), c = g.lie(8);
    ASSERT_TRUE((bracket(a, b) + bracket(b, a)).is_zero());
    const auto jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
    ASSERT_TRUE(jac.is_zero()) << to_text(a) << " ; " << to_text(b) << " ; " << to_text(c);
  }
}

TEST(LieBracket, Bilinear) {
  Gen g(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = g.lie(5), b = g.lie(5), c = g.lie(5);
    const Scalar s = g.scalar();
    EXPECT_EQ(bracket(s * a + b, c), s * bracket(a, c) + bracket(b, c));
  }
}

TEST(LieBracket, EachMutationChangesSomeBracket) {
  std::vector<BracketRules> mutants;
  mutants.push_back(BracketRules{false, -1});
  for (int t = 0; t < 6; ++t) mutants.push_back(BracketRules{true, t});
  for (const auto& rules : mutants) {
    bool differs = false;
    for (auto a : generator_window(3))
      for (auto b : generator_window(3)) differs |= generator_bracket(a, b, rules) != generator_bracket(a, b);
    EXPECT_TRUE(differs) << rules.dropped_term;
  }
}

TEST(Grading, DegreeOfBracketsAdds) {
  for (auto a : generator_window(4))
    for (auto b : generator_window(4)) {
      const auto br = bracket(Z(a.n, a.m), Z(b.n, b.m));
      if (br.is_zero()) continue;
      ASSERT_EQ(degree(br), a.degree() + b.degree());
    }
  EXPECT_EQ(degree(Z(2, 0) + Z(3, 1)), 2);
  EXPECT_EQ(degree(Z(2, 0) + Z(0, 1)), std::nullopt);
  EXPECT_EQ(degree(LieElement{}), std::nullopt);
  EXPECT_EQ(degree(LieElement::derivation_y()), 0);
}

TEST(Grading, TriangularSplitReassembles) {
  Gen g(24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = g.lie(6, 6, false);
    const auto parts = triangular_split(e);
    EXPECT_EQ(parts.plus + parts.zero + parts.minus, e);
    for (const auto& [idx, c] : parts.plus.z) EXPECT_GT(idx.degree(), 0);
    for (const auto& [idx, c] : parts.zero.z) EXPECT_EQ(idx.degree(), 0);
    for (const auto& [idx, c] : parts.minus.z) EXPECT_LT(idx.degree(), 0);
  }
  EXPECT_THROW(triangular_split(LieElement::derivation_y()), std::domain_error);
}

TEST(Decomposition, ReproducesEveryGenerator) {
  for (std::uint32_t n = 0; n <= 10; ++n)
    for (std::uint32_t m = 0; m <= 10; ++m) EXPECT_EQ(decompose_generator(n, m).evaluate(), Z(n, m)) << n << "," << m;
  const auto d = decompose_generator(3, 1);
  EXPECT_EQ(d.formal(), "[Z[3,0],Z[0,1]] + Z[2,0]");
  EXPECT_EQ(decompose_generator(2, 2).correction, Z(0, 0));
  EXPECT_EQ(decompose_generator(1, 3).correction, Z(0, 2));
}

TEST(Center, OnlyTheUnitGenerator) {
  const std::uint32_t B = 4;
  std::vector<LieElement> tests;
  for (std::uint32_t i = 1; i <= B + 2; ++i) {
    tests.push_back(Z(i, i));
    tests.push_back(Z(i, 0));
    tests.push_back(Z(0, i));
  }
  const auto basis = centralizer_basis(tests, generator_window(B));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], Z(0, 0));
}

TEST(MaximalAbelian, DiagonalIsItsOwnCentralizer) {
  const std::uint32_t B = 4;
  std::vector<LieElement> tests;
  for (std::uint32_t k = 0; k <= B + 2; ++k) tests.push_back(Z(k, k));
  std::vector<ZIndex> diagonal;
  for (std::uint32_t k = 0; k <= B; ++k) diagonal.push_back({k, k});
  EXPECT_EQ(centralizer_basis(tests, diagonal).size(), B + 1);
  const auto wide = centralizer_basis(tests, generator_window(B));
  EXPECT_EQ(wide.size(), B + 1);
  for (const auto& x : wide) EXPECT_EQ(degree(x), 0);
}
