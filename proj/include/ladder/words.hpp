#pragma once

#include "ladder/lie.hpp"
#include "ladder/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ladder {

/// A primitive p of the word Hopf algebra: loop degree |p| and symmetry
/// factor Sym(p).
struct Letter {
  std::string name;
  std::uint32_t degree = 1;
  Scalar sym = 1;
};

/// Finite ordered alphabet. Immutable once built; letters are referred to by
/// position.
class Alphabet {
 public:
  /// Throws std::invalid_argument on empty/duplicate/ill-formed names,
  /// degree 0, or a non-positive symmetry factor.
  explicit Alphabet(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  const Letter& letter(std::uint32_t i) const { return letters_.at(i); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::optional<std::uint32_t> find(std::string_view name) const;

 private:
  std::vector<Letter> letters_;
  std::map<std::string, std::uint32_t, std::less<>> by_name_;
};

/// Sequence of letter positions. Ordered by length, then lexicographically.
struct Word {
  std::vector<std::uint32_t> letters;

  std::size_t length() const { return letters.size(); }  ///< augmentation degree
  bool empty() const { return letters.empty(); }
  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

using WordPair = std::pair<Word, Word>;
using WordCombination = SparseVector<Word>;
using WordLieElement = SparseVector<WordPair>;
using WordTensor = SparseVector<WordPair>;

/// |w|, the sum of the letters' loop degrees (the α-order of w).
std::uint64_t alpha_order(const Alphabet& alphabet, const Word& w);

/// Every word with exactly `length` letters, in order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length);

/// Z_{w1,w2}(w) = w1 v if w = w2 v, nothing otherwise.
std::optional<Word> act_word(const WordPair& generator, const Word& w);
WordCombination act_word(const WordLieElement& g, const WordCombination& c);

WordLieElement word_generator_bracket(const WordPair& a, const WordPair& b);
WordLieElement bracket_words(const WordLieElement& a, const WordLieElement& b);

/// d_k: every word with k letters, coefficient 1 (its α-order is |w|).
WordCombination iota_h(const Alphabet& alphabet, std::uint32_t k);

/// ι_H on a linear combination of single ladders t_k. Throws
/// std::invalid_argument on products of ladders.
WordCombination iota_h(const Alphabet& alphabet, const LadderPoly& p);

/// ι_L(Z_{n,m}) = Σ_{|w1|=n, |w2|=m} Z_{w1,w2} / #(m), #(m) = |alphabet|^m.
WordLieElement iota_l(const Alphabet& alphabet, std::uint32_t n, std::uint32_t m);

struct IotaCompatReport {
  bool passed = true;
  WordCombination lhs;  ///< ι_H(x(t_k))
  WordCombination rhs;  ///< ι_L-side evaluated on ι_H(t_k)
};

/// ι_H(Z_{n,m}(t_k)) == ι_L(Z_{n,m})(ι_H(t_k)).
IotaCompatReport check_iota_compat(const Alphabet& alphabet, std::uint32_t n, std::uint32_t m, std::uint32_t k);

/// [ι_L(Z_{n1,m1}), ι_L(Z_{n2,m2})](ι_H(t_k)) == ι_H([Z_{n1,m1}, Z_{n2,m2}](t_k)).
IotaCompatReport check_iota_bracket_compat(const Alphabet& alphabet, ZIndex first, ZIndex second, std::uint32_t k,
                                           const BracketRules& rules = {});

/// Deconcatenation: Σ over splits w = u v of u ⊗ v.
WordTensor word_coproduct(const Word& w);
WordTensor word_coproduct(const WordCombination& c);

/// Solution of Γ = 1 + Σ_p (α^{|p|}/Sym(p)) B_+^p(Γ) through α-order N.
/// c[j] holds the words of α-order j; d[j] the words with j letters (among
/// those of α-order <= N). Coefficients are Π 1/Sym over the letters.
struct DseExpansion {
  std::uint32_t order = 0;
  std::vector<WordCombination> c;
  std::vector<WordCombination> d;
};

DseExpansion dse_expand(const Alphabet& alphabet, std::uint32_t order);

}  // namespace ladder
