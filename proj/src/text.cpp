#include "ladder/text.hpp"

#include <cctype>
#include <limits>

namespace ladder {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

enum class Kind { none, lie, gl, c, poly, word };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::lie: return "Z/Y";
    case Kind::gl: return "E";
    case Kind::c: return "C";
    case Kind::poly: return "t";
    case Kind::word: return "word";
    case Kind::none: break;
  }
  return "constant";
}

class Parser {
 public:
  Parser(std::string_view src, const Alphabet* alphabet) : src_(src), alphabet_(alphabet) {}

  ParsedElement parse_any() {
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(Scalar(sign));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return finish();
  }

  WordLieElement parse_words() {
    ParsedElement ignored = parse_any();
    (void)ignored;
    if (kind_ != Kind::word && !(kind_ == Kind::none && constant_.empty()))
      fail_at(0, std::string("expected word generators Z{..|..}, got ") + kind_name(kind_));
    return words_;
  }

  Kind kind() const { return kind_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const { throw ParseError(p, msg); }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void set_kind(Kind k, std::size_t where) {
    if (kind_ == Kind::none) kind_ = k;
    else if (kind_ != k)
      fail_at(where, std::string("cannot mix ") + kind_name(kind_) + " and " + kind_name(k) + " terms");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::int64_t signed_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.empty()) fail_at(start, "expected an integer");
    if (d.size() > 18) fail_at(start, "integer too large");
    std::int64_t v = std::stoll(d);
    return neg ? -v : v;
  }

  std::uint32_t index() {
    skip_ws();
    std::size_t start = pos_;
    std::int64_t v = signed_int();
    if (v < 0) fail_at(start, "negative index");
    if (v > std::numeric_limits<std::uint32_t>::max() / 2) fail_at(start, "index too large");
    return static_cast<std::uint32_t>(v);
  }

  // Rational literal without sign.
  Scalar coefficient() {
    std::size_t start = pos_;
    std::string num = digits();
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      den = digits();
      if (den.empty()) fail("expected denominator");
    }
    try {
      return parse_scalar(num + "/" + den);
    } catch (const std::invalid_argument& e) {
      fail_at(start, e.what());
    }
  }

  void parse_term(Scalar coeff) {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= coefficient();
      skip_ws();
      if (peek() != '*') {
        constant_.add(Monomial{}, coeff);
        return;
      }
      ++pos_;
      skip_ws();
    }
    std::size_t where = pos_;
    char c = peek();
    if (c == 'Z' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '{') {
      set_kind(Kind::word, where);
      pos_ += 2;
      Word w1 = word_until('|');
      ++pos_;
      Word w2 = word_until('}');
      ++pos_;
      words_.add({std::move(w1), std::move(w2)}, coeff);
    } else if (c == 'Z') {
      set_kind(Kind::lie, where);
      ++pos_;
      expect('[');
      std::uint32_t n = index();
      expect(',');
      std::uint32_t m = index();
      expect(']');
      lie_.z.add({n, m}, coeff);
    } else if (c == 'Y') {
      set_kind(Kind::lie, where);
      ++pos_;
      lie_.y += coeff;
    } else if (c == 'E') {
      set_kind(Kind::gl, where);
      ++pos_;
      expect('[');
      std::uint32_t i = index();
      expect(',');
      std::uint32_t j = index();
      expect(']');
      gl_.e.add({i, j}, coeff);
    } else if (c == 'C') {
      set_kind(Kind::c, where);
      ++pos_;
      expect('[');
      std::int64_t d = signed_int();
      expect(']');
      c_.terms.add(d, coeff);
    } else if (c == 't') {
      set_kind(Kind::poly, where);
      std::vector<std::uint32_t> factors;
      while (true) {
        skip_ws();
        if (peek() != 't') fail("expected t[k]");
        ++pos_;
        expect('[');
        std::uint32_t k = index();
        expect(']');
        std::uint32_t power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          power = index();
          if (power == 0) fail("exponent must be positive");
        }
        factors.insert(factors.end(), power, k);
        skip_ws();
        if (peek() != '*') break;
        ++pos_;
      }
      poly_.add(Monomial(std::move(factors)), coeff);
    } else {
      fail("expected a term");
    }
  }

  Word word_until(char stop) {
    if (!alphabet_) fail("word generators need an alphabet");
    Word w;
    skip_ws();
    if (peek() == stop) return w;
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      if (name.empty()) fail("expected a letter name");
      auto letter = alphabet_->find(name);
      if (!letter) fail_at(start, "unknown letter '" + std::string(name) + "'");
      w.letters.push_back(*letter);
      skip_ws();
      if (peek() == stop) return w;
      if (peek() != '.') fail(std::string("expected '.' or '") + stop + "'");
      ++pos_;
    }
  }

  ParsedElement finish() {
    if (!constant_.empty() && kind_ != Kind::none && kind_ != Kind::poly)
      fail_at(0, std::string("constant term in a ") + kind_name(kind_) + " expression");
    switch (kind_) {
      case Kind::lie: return lie_;
      case Kind::gl: return gl_;
      case Kind::c: return c_;
      case Kind::poly: return poly_ + constant_;
      case Kind::word: return LieElement{};
      case Kind::none: break;
    }
    if (!constant_.empty()) return constant_;
    return LieElement{};
  }

  std::string_view src_;
  const Alphabet* alphabet_;
  std::size_t pos_ = 0;
  Kind kind_ = Kind::none;
  LieElement lie_;
  GlElement gl_;
  CElement c_;
  LadderPoly poly_;
  LadderPoly constant_;
  WordLieElement words_;
};

template <class T>
T expect_kind(std::string_view text, const char* what) {
  ParsedElement parsed = Parser(text, nullptr).parse_any();
  if (auto* v = std::get_if<T>(&parsed)) return *v;
  // "0" and other all-zero inputs parse as an empty LieElement.
  if (auto* lie = std::get_if<LieElement>(&parsed); lie && lie->is_zero()) return T{};
  throw ParseError(0, std::string("expected ") + what + " expression");
}

// Shared printer for "c*atom" sums.
class SumPrinter {
 public:
  void term(const Scalar& c, const std::string& atom) {
    if (c == 0) return;
    Scalar mag = abs(c);
    std::string body;
    if (atom.empty()) body = to_string(mag);
    else if (mag == 1) body = atom;
    else body = to_string(mag) + "*" + atom;
    if (out_.empty()) out_ = (c < 0 ? "-" : "") + body;
    else out_ += (c < 0 ? " - " : " + ") + body;
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string pair_text(char head, std::uint32_t a, std::uint32_t b) {
  return std::string(1, head) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

}  // namespace

ParsedElement parse_element(std::string_view text) { return Parser(text, nullptr).parse_any(); }
LieElement parse_lie(std::string_view text) { return expect_kind<LieElement>(text, "a Z/Y"); }
GlElement parse_gl(std::string_view text) { return expect_kind<GlElement>(text, "an E"); }
CElement parse_c(std::string_view text) { return expect_kind<CElement>(text, "a C"); }

LadderPoly parse_poly(std::string_view text) { return expect_kind<LadderPoly>(text, "a ladder polynomial"); }

WordLieElement parse_word_lie(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, &alphabet).parse_words();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view name = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    auto letter = alphabet.find(name);
    if (!letter) throw ParseError(pos, "unknown letter '" + std::string(name) + "'");
    w.letters.push_back(*letter);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
    if (pos == text.size()) throw ParseError(pos, "trailing '.'");
  }
  return w;
}

std::string to_text(const LieElement& e) {
  SumPrinter p;
  for (const auto& [idx, c] : e.z) p.term(c, pair_text('Z', idx.n, idx.m));
  p.term(e.y, "Y");
  return p.str();
}

std::string to_text(const GlElement& g) {
  SumPrinter p;
  for (const auto& [idx, c] : g.e) p.term(c, pair_text('E', idx.i, idx.j));
  return p.str();
}

std::string to_text(const CElement& c) {
  SumPrinter p;
  for (const auto& [d, coeff] : c.terms) p.term(coeff, "C[" + std::to_string(d) + "]");
  return p.str();
}

std::string to_text(const Monomial& m) {
  if (m.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.factors.size();) {
    std::size_t j = i;
    while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
    if (!out.empty()) out += "*";
    out += "t[" + std::to_string(m.factors[i]) + "]";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_text(const LadderPoly& poly) {
  SumPrinter p;
  for (const auto& [m, c] : poly) p.term(c, m.factors.empty() ? std::string() : to_text(m));
  return p.str();
}

std::string to_text(const TensorPoly& t) {
  SumPrinter p;
  for (const auto& [legs, c] : t) p.term(c, to_text(legs.first) + "(x)" + to_text(legs.second));
  return p.str();
}

std::string to_text(const ParsedElement& e) {
  return std::visit([](const auto& v) { return to_text(v); }, e);
}

std::string to_text(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ".";
    out += alphabet.letter(w.letters[i]).name;
  }
  return out;
}

std::string to_text(const WordLieElement& e, const Alphabet& alphabet) {
  SumPrinter p;
  for (const auto& [pair, c] : e)
    p.term(c, "Z{" + to_text(pair.first, alphabet) + "|" + to_text(pair.second, alphabet) + "}");
  return p.str();
}

std::string to_text(const WordCombination& c, const Alphabet& alphabet) {
  SumPrinter p;
  for (const auto& [w, coeff] : c) p.term(coeff, w.empty() ? std::string("e") : to_text(w, alphabet));
  return p.str();
}

}  // namespace ladder
