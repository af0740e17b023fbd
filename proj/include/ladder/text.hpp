#pragma once

#include "ladder/extension.hpp"
#include "ladder/gl.hpp"
#include "ladder/lie.hpp"
#include "ladder/module.hpp"
#include "ladder/words.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ladder {

/// Syntax error with the 0-based character offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: expr = ["-"] term (("+"|"-") term)* | "0"
///          term = [coeff "*"] atom | coeff
///          atom = "Z[" n "," m "]" | "Y" | "E[" i "," j "]" | "C[" d "]"
///                 | "t[" k "]" ["^" e] ("*" "t[" k "]" ["^" e])*
/// All atoms in one expression must be of one kind. A bare coefficient is a
/// constant ladder polynomial; "0" alone parses as the zero LieElement.
using ParsedElement = std::variant<LieElement, GlElement, CElement, LadderPoly>;

ParsedElement parse_element(std::string_view text);
LieElement parse_lie(std::string_view text);
GlElement parse_gl(std::string_view text);
CElement parse_c(std::string_view text);
LadderPoly parse_poly(std::string_view text);

/// Word-Lie generators are written Z{w1|w2} with words as dot-separated
/// letter names (the empty word is empty), e.g. "Z{a.b|} - 1/2*Z{|a}".
WordLieElement parse_word_lie(std::string_view text, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);

std::string to_text(const LieElement& e);
std::string to_text(const GlElement& g);
std::string to_text(const CElement& c);
std::string to_text(const LadderPoly& p);
std::string to_text(const Monomial& m);
std::string to_text(const TensorPoly& t);
std::string to_text(const ParsedElement& e);
std::string to_text(const Word& w, const Alphabet& alphabet);
std::string to_text(const WordLieElement& e, const Alphabet& alphabet);
std::string to_text(const WordCombination& c, const Alphabet& alphabet);

}  // namespace ladder
