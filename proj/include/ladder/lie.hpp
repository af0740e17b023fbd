#pragma once

#include "ladder/scalar.hpp"
#include "ladder/sparse.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ladder {

/// Index (n, m) of the insertion-elimination generator Z_{n,m}.
struct ZIndex {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::int64_t degree() const { return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m); }
  friend auto operator<=>(const ZIndex&, const ZIndex&) = default;
};

/// Element of the ladder algebra, optionally extended by the grading
/// derivation Y. y == 0 means the element lies in the ladder algebra proper.
struct LieElement {
  SparseVector<ZIndex> z;
  Scalar y = 0;

  static LieElement generator(std::uint32_t n, std::uint32_t m) {
    return LieElement{SparseVector<ZIndex>::unit({n, m}), 0};
  }
  static LieElement derivation_y() { return LieElement{{}, 1}; }

  bool is_zero() const { return z.empty() && y == 0; }
  bool has_y() const { return y != 0; }

  LieElement& operator+=(const LieElement& rhs) {
    z += rhs.z;
    y += rhs.y;
    return *this;
  }
  LieElement& operator-=(const LieElement& rhs) {
    z -= rhs.z;
    y -= rhs.y;
    return *this;
  }
  LieElement& operator*=(const Scalar& c) {
    z *= c;
    y *= c;
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.y == b.y && a.z == b.z; }
};

/// Step function with the boundary convention Θ(0) = 1.
constexpr int theta(std::int64_t k) { return k >= 0 ? 1 : 0; }

/// Knobs for deliberately broken brackets, used to show the verification
/// suites are not vacuous. Default-constructed rules are the real bracket.
struct BracketRules {
  bool theta_zero_is_one = true;
  /// 0..5 drops that term of the six-term generator bracket; -1 keeps all.
  int dropped_term = -1;
};

/// [Z_a, Z_b] on generators.
SparseVector<ZIndex> generator_bracket(ZIndex a, ZIndex b, const BracketRules& rules = {});

/// Bilinear bracket, with [Y, Z_{n,m}] = (n-m) Z_{n,m} and [Y, Y] = 0.
LieElement bracket(const LieElement& a, const LieElement& b, const BracketRules& rules = {});

/// n - m shared by every term (Y has degree 0). nullopt when the terms
/// disagree or the element is zero.
std::optional<std::int64_t> degree(const LieElement& e);

struct TriangularSplit {
  LieElement plus;
  LieElement zero;
  LieElement minus;
};

/// Splits into positive, zero and negative degree parts. Throws
/// std::domain_error if e has a Y component.
TriangularSplit triangular_split(const LieElement& e);

/// Z_{n,m} = [Z_{n,0}, Z_{0,m}] + correction, where
/// correction = Θ(n-m) Z_{n-m,0} + Θ(m-n) Z_{0,m-n} - δ_{n,m} Z_{0,0}.
struct GeneratorDecomposition {
  ZIndex left;
  ZIndex right;
  LieElement correction;

  LieElement evaluate(const BracketRules& rules = {}) const;
  /// Formal expression, e.g. "[Z[2,0],Z[0,1]] + Z[1,0]".
  std::string formal() const;
};

GeneratorDecomposition decompose_generator(std::uint32_t n, std::uint32_t m);

/// All Z_{n,m} with n, m <= bound, in index order.
std::vector<ZIndex> generator_window(std::uint32_t bound);

/// Basis of {x in span(ansatz) : [x, t] = 0 for every t in tests}. Bracket
/// results are kept in full even when they leave the ansatz window. The
/// basis is returned in reduced form (unit coefficient on one ansatz
/// generator not used by the others).
std::vector<LieElement> centralizer_basis(const std::vector<LieElement>& tests,
                                          const std::vector<ZIndex>& ansatz,
                                          const BracketRules& rules = {});

}  // namespace ladder
