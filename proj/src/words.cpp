#include "ladder/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ladder {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
  for (std::uint32_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (!valid_name(l.name)) throw std::invalid_argument("invalid letter name '" + l.name + "'");
    if (l.degree < 1) throw std::invalid_argument("letter '" + l.name + "' must have degree >= 1");
    if (l.sym <= 0) throw std::invalid_argument("letter '" + l.name + "' must have a positive symmetry factor");
    if (!by_name_.emplace(l.name, i).second) throw std::invalid_argument("duplicate letter '" + l.name + "'");
  }
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
  return a.letters <=> b.letters;
}

std::uint64_t alpha_order(const Alphabet& alphabet, const Word& w) {
  std::uint64_t total = 0;
  for (auto l : w.letters) total += alphabet.letter(l).degree;
  return total;
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out)
      for (std::uint32_t l = 0; l < alphabet.size(); ++l) {
        Word e = w;
        e.letters.push_back(l);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::optional<Word> act_word(const WordPair& generator, const Word& w) {
  const auto& [w1, w2] = generator;
  if (w2.length() > w.length() || !std::equal(w2.letters.begin(), w2.letters.end(), w.letters.begin()))
    return std::nullopt;
  Word out = w1;
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(w2.length()),
                     w.letters.end());
  return out;
}

WordCombination act_word(const WordLieElement& g, const WordCombination& c) {
  WordCombination out;
  for (const auto& [gen, cg] : g)
    for (const auto& [w, cw] : c)
      if (auto image = act_word(gen, w)) out.add(*image, cg * cw);
  return out;
}

WordLieElement word_generator_bracket(const WordPair& a, const WordPair& b) {
  const auto& [w1, w2] = a;
  const auto& [w3, w4] = b;
  WordLieElement out;
  // A term whose inner action vanishes drops out entirely.
  if (auto x = act_word({w1, w2}, w3)) out.add({*x, w4}, 1);
  if (auto x = act_word({w2, w1}, w4)) out.add({w3, *x}, -1);
  if (auto x = act_word({w3, w4}, w1)) out.add({*x, w2}, -1);
  if (auto x = act_word({w4, w3}, w2)) out.add({w1, *x}, 1);
  if (w2 == w3) out.add({w1, w4}, -1);
  if (w1 == w4) out.add({w3, w2}, 1);
  return out;
}

WordLieElement bracket_words(const WordLieElement& a, const WordLieElement& b) {
  WordLieElement out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) out.add_scaled(word_generator_bracket(ga, gb), ca * cb);
  return out;
}

WordCombination iota_h(const Alphabet& alphabet, std::uint32_t k) {
  WordCombination out;
  for (auto& w : words_of_length(alphabet, k)) out.add(w, 1);
  return out;
}

WordCombination iota_h(const Alphabet& alphabet, const LadderPoly& p) {
  WordCombination out;
  for (const auto& [mono, c] : p) {
    if (mono.factors.size() != 1) throw std::invalid_argument("iota_h: only single ladders t_k are mapped");
    out.add_scaled(iota_h(alphabet, mono.factors.front()), c);
  }
  return out;
}

WordLieElement iota_l(const Alphabet& alphabet, std::uint32_t n, std::uint32_t m) {
  const auto left = words_of_length(alphabet, n);
  const auto right = words_of_length(alphabet, m);
  const Scalar weight(mpz_class(1), mpz_class(right.size()));
  WordLieElement out;
  for (const auto& w1 : left)
    for (const auto& w2 : right) out.add({w1, w2}, weight);
  return out;
}

IotaCompatReport check_iota_compat(const Alphabet& alphabet, std::uint32_t n, std::uint32_t m, std::uint32_t k) {
  IotaCompatReport report;
  report.lhs = iota_h(alphabet, act(LieElement::generator(n, m), ladder(k)));
  report.rhs = act_word(iota_l(alphabet, n, m), iota_h(alphabet, k));
  report.passed = report.lhs == report.rhs;
  return report;
}

IotaCompatReport check_iota_bracket_compat(const Alphabet& alphabet, ZIndex first, ZIndex second, std::uint32_t k,
                                           const BracketRules& rules) {
  IotaCompatReport report;
  const LieElement commutator =
      bracket(LieElement::generator(first.n, first.m), LieElement::generator(second.n, second.m), rules);
  report.lhs = iota_h(alphabet, act(commutator, ladder(k)));
  const WordLieElement lifted =
      bracket_words(iota_l(alphabet, first.n, first.m), iota_l(alphabet, second.n, second.m));
  report.rhs = act_word(lifted, iota_h(alphabet, k));
  report.passed = report.lhs == report.rhs;
  return report;
}

WordTensor word_coproduct(const Word& w) {
  WordTensor out;
  for (std::size_t cut = 0; cut <= w.length(); ++cut) {
    Word prefix, suffix;
    prefix.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(cut));
    suffix.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(cut), w.letters.end());
    out.add({std::move(prefix), std::move(suffix)}, 1);
  }
  return out;
}

WordTensor word_coproduct(const WordCombination& c) {
  WordTensor out;
  for (const auto& [w, coeff] : c) out.add_scaled(word_coproduct(w), coeff);
  return out;
}

DseExpansion dse_expand(const Alphabet& alphabet, std::uint32_t order) {
  // Fixpoint iteration of Γ = 1 + Σ_p B_+^p(Γ)/Sym(p) with B_+^p prepending
  // p, truncated at α-order N. Every letter raises the α-order by at least
  // one, so N + 1 rounds reach the fixpoint.
  WordCombination gamma;
  gamma.add(Word{}, 1);
  for (std::uint32_t round = 0; round <= order; ++round) {
    WordCombination next;
    next.add(Word{}, 1);
    for (std::uint32_t p = 0; p < alphabet.size(); ++p) {
      const Letter& letter = alphabet.letter(p);
      const Scalar weight = 1 / letter.sym;
      for (const auto& [w, c] : gamma) {
        if (alpha_order(alphabet, w) + letter.degree > order) continue;
        Word grafted{{p}};
        grafted = grafted + w;
        next.add(grafted, c * weight);
      }
    }
    if (next == gamma) break;
    gamma = std::move(next);
  }
  DseExpansion out;
  out.order = order;
  out.c.resize(order + 1);
  out.d.resize(order + 1);
  for (const auto& [w, coeff] : gamma) {
    out.c[alpha_order(alphabet, w)].add(w, coeff);
    out.d[w.length()].add(w, coeff);
  }
  return out;
}

}  // namespace ladder
