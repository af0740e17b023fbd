#include "ladder/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace ladder {

std::string to_string(const Scalar& value) { return value.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar result(n, d);
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

Scalar ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar result(num, den);
  result.canonicalize();
  return result;
}

}  // namespace ladder
