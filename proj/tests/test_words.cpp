#include "ladder/text.hpp"
#include "ladder/words.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace ladder;
using ladder::testing::Gen;

namespace {

Alphabet one_letter() { return Alphabet({{"a", 1, 1}}); }
Alphabet two_letters() { return Alphabet({{"a", 1, 1}, {"b", 2, 1}}); }

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= length; ++len)
    for (auto& w : words_of_length(alphabet, len)) out.push_back(w);
  return out;
}

// Every sequence of letters whose degrees sum to `order`.
void compositions(const Alphabet& alphabet, std::uint64_t order, Word prefix, std::vector<Word>& out) {
  if (order == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t p = 0; p < alphabet.size(); ++p) {
    if (alphabet.letter(p).degree > order) continue;
    Word next = prefix;
    next.letters.push_back(p);
    compositions(alphabet, order - alphabet.letter(p).degree, next, out);
  }
}

}  // namespace

TEST(Alphabet, Validation) {
  EXPECT_THROW(Alphabet({}), std::invalid_argument);
  EXPECT_THROW(Alphabet({{"a", 1, 1}, {"a", 2, 1}}), std::invalid_argument);
  EXPECT_THROW(Alphabet({{"a", 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Alphabet({{"a", 1, 0}}), std::invalid_argument);
  EXPECT_THROW(Alphabet({{"", 1, 1}}), std::invalid_argument);
  EXPECT_EQ(two_letters().find("b"), 1u);
  EXPECT_EQ(two_letters().find("c"), std::nullopt);
}

TEST(Words, OrderAndAlphaOrder) {
  const auto alphabet = two_letters();
  const auto w = parse_word("b.a.b", alphabet);
  EXPECT_EQ(alpha_order(alphabet, w), 5u);
  EXPECT_LT(parse_word("b", alphabet), parse_word("a.a", alphabet));
  EXPECT_LT(parse_word("a.b", alphabet), parse_word("b.a", alphabet));
  EXPECT_EQ(words_of_length(alphabet, 3).size(), 8u);
}

TEST(WordAction, ReplacesPrefix) {
  const auto alphabet = two_letters();
  const WordPair g{parse_word("a", alphabet), parse_word("b", alphabet)};
  EXPECT_EQ(act_word(g, parse_word("b.a", alphabet)), parse_word("a.a", alphabet));
  EXPECT_EQ(act_word(g, parse_word("a.b", alphabet)), std::nullopt);
  const WordPair unit{Word{}, Word{}};
  EXPECT_EQ(act_word(unit, parse_word("a.b", alphabet)), parse_word("a.b", alphabet));
}

// The word bracket is the commutator of the prefix-replacement operators.
TEST(WordBracket, MatchesOperatorCommutator) {
  const auto alphabet = two_letters();
  const auto words = words_up_to(alphabet, 2);
  const auto targets = words_up_to(alphabet, 4);
  for (const auto& u1 : words)
    for (const auto& v1 : words)
      for (const auto& u2 : words)
        for (const auto& v2 : words) {
          const auto x = WordLieElement::unit({u1, v1}), y = WordLieElement::unit({u2, v2});
          const auto xy = bracket_words(x, y);
          for (const auto& w : targets) {
            const auto c = WordCombination::unit(w);
            ASSERT_EQ(act_word(xy, c), act_word(x, act_word(y, c)) - act_word(y, act_word(x, c)))
                << to_text(x, alphabet) << " ; " << to_text(y, alphabet) << " on " << to_text(w, alphabet);
          }
        }
}

TEST(WordBracket, JacobiOnShortWords) {
  const auto alphabet = two_letters();
  const auto words = words_up_to(alphabet, 2);
  std::vector<WordLieElement> gens;
  for (const auto& u : words)
    for (const auto& v : words) gens.push_back(WordLieElement::unit({u, v}));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const auto jac = bracket_words(bracket_words(gens[i], gens[j]), gens[k]) +
                         bracket_words(bracket_words(gens[j], gens[k]), gens[i]) +
                         bracket_words(bracket_words(gens[k], gens[i]), gens[j]);
        ASSERT_TRUE(jac.empty());
      }
}

TEST(Iota, Normalization) {
  const auto alphabet = two_letters();
  const auto image = iota_l(alphabet, 1, 1);
  EXPECT_EQ(image.size(), 4u);
  for (const auto& [pair, c] : image) EXPECT_EQ(c, Scalar(1, 2));
  EXPECT_EQ(iota_h(alphabet, 2).size(), 4u);
  EXPECT_EQ(iota_h(alphabet, ladder::ladder(2) + ladder::ladder(1)), iota_h(alphabet, 2) + iota_h(alphabet, 1));
  EXPECT_THROW(iota_h(alphabet, multiply(ladder::ladder(1), ladder::ladder(1))), std::invalid_argument);
}

TEST(Iota, CompatibleWithActionAndBracket) {
  for (const auto& alphabet : {one_letter(), two_letters()}) {
    for (std::uint32_t n = 0; n <= 3; ++n)
      for (std::uint32_t m = 0; m <= 3; ++m)
        for (std::uint32_t k = 0; k <= 3; ++k) {
          const auto rep = check_iota_compat(alphabet, n, m, k);
          ASSERT_TRUE(rep.passed) << n << "," << m << "," << k;
        }
    for (auto a : generator_window(3))
      for (auto b : generator_window(3))
        for (std::uint32_t k = 0; k <= 3; ++k) ASSERT_TRUE(check_iota_bracket_compat(alphabet, a, b, k).passed);
  }
}

TEST(Iota, BracketFormSeesBrokenBrackets) {
  bool caught = false;
  for (auto a : generator_window(2))
    for (auto b : generator_window(2))
      for (std::uint32_t k = 0; k <= 2; ++k)
        caught |= !check_iota_bracket_compat(two_letters(), a, b, k, BracketRules{false, -1}).passed;
  EXPECT_TRUE(caught);
}

TEST(WordCoproduct, Deconcatenation) {
  const auto alphabet = two_letters();
  const auto w = parse_word("a.b", alphabet);
  WordTensor expected;
  expected.add({Word{}, w}, 1);
  expected.add({parse_word("a", alphabet), parse_word("b", alphabet)}, 1);
  expected.add({w, Word{}}, 1);
  EXPECT_EQ(word_coproduct(w), expected);
  for (const auto& v : words_up_to(alphabet, 3)) EXPECT_EQ(word_coproduct(v).size(), v.length() + 1);
}

TEST(Dse, SingleLetterGivesPowers) {
  const auto alphabet = one_letter();
  const auto x = dse_expand(alphabet, 8);
  for (std::uint32_t j = 0; j <= 8; ++j) {
    ASSERT_EQ(x.c[j].size(), 1u);
    EXPECT_EQ(x.c[j].coeff(Word{std::vector<std::uint32_t>(j, 0)}), 1);
  }
}

TEST(Dse, TwoDegreesGiveCompositionCounts) {
  const auto alphabet = two_letters();
  const auto x = dse_expand(alphabet, 6);
  const std::vector<std::size_t> fibonacci{1, 1, 2, 3, 5, 8, 13};
  for (std::uint32_t j = 0; j <= 6; ++j) {
    std::vector<Word> brute;
    compositions(alphabet, j, Word{}, brute);
    EXPECT_EQ(x.c[j].size(), brute.size());
    EXPECT_EQ(x.c[j].size(), fibonacci[j]);
    for (const auto& w : brute) EXPECT_EQ(x.c[j].coeff(w), 1);
  }
}

TEST(Dse, SymmetryFactorScalesEachLetter) {
  const Alphabet alphabet({{"a", 1, 2}, {"b", 2, 1}});
  const auto x = dse_expand(alphabet, 5);
  for (const auto& c : x.c)
    for (const auto& [w, coeff] : c) {
      Scalar expected = 1;
      for (auto l : w.letters) expected /= alphabet.letter(l).sym;
      EXPECT_EQ(coeff, expected);
    }
  EXPECT_EQ(x.c[3].coeff(parse_word("a.a.a", alphabet)), Scalar(1, 8));
}

TEST(Dse, LetterCountView) {
  const auto x = dse_expand(two_letters(), 4);
  std::size_t total_c = 0, total_d = 0;
  for (const auto& c : x.c) total_c += c.size();
  for (const auto& d : x.d) total_d += d.size();
  EXPECT_EQ(total_c, total_d);
  for (std::size_t j = 0; j < x.d.size(); ++j)
    for (const auto& [w, c] : x.d[j]) EXPECT_EQ(w.length(), j);
}
