#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ladder {

/// Exact rational number. Every coefficient in the library is one of these.
using Scalar = mpq_class;

/// "p/q", or "p" when q == 1. Always lowest terms.
std::string to_string(const Scalar& value);

/// Parses an integer or "p/q" literal (optional leading '-'). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, so use this instead. Throws std::invalid_argument when den == 0.
Scalar ratio(long num, long den);

inline bool is_integer(const Scalar& value) { return value.get_den() == 1; }

}  // namespace ladder
