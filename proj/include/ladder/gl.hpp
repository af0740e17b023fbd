#pragma once

#include "ladder/lie.hpp"

#include <optional>

namespace ladder {

/// Matrix unit E_{i,j}, realized in the ladder algebra as Z_{i,j} - Z_{i+1,j+1}.
struct EIndex {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::int64_t degree() const { return static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j); }
  friend auto operator<=>(const EIndex&, const EIndex&) = default;
};

struct GlElement {
  SparseVector<EIndex> e;

  static GlElement unit(std::uint32_t i, std::uint32_t j) { return GlElement{SparseVector<EIndex>::unit({i, j})}; }

  bool is_zero() const { return e.empty(); }
  GlElement& operator+=(const GlElement& rhs) {
    e += rhs.e;
    return *this;
  }
  GlElement& operator-=(const GlElement& rhs) {
    e -= rhs.e;
    return *this;
  }
  GlElement& operator*=(const Scalar& c) {
    e *= c;
    return *this;
  }
  friend GlElement operator+(GlElement a, const GlElement& b) { return a += b; }
  friend GlElement operator-(GlElement a, const GlElement& b) { return a -= b; }
  friend GlElement operator-(GlElement a) { return a *= Scalar(-1); }
  friend GlElement operator*(const Scalar& c, GlElement a) { return a *= c; }
  friend bool operator==(const GlElement&, const GlElement&) = default;
};

/// [E_{i,j}, E_{r,k}] = δ_{j,r} E_{i,k} - δ_{k,i} E_{r,j}, extended bilinearly.
GlElement bracket_ee(const GlElement& a, const GlElement& b);

LieElement embed_to_z(const GlElement& g);

/// Telescoping inverse of embed_to_z. Returns nullopt when e is not a finite
/// combination of matrix units (some degree class has nonzero coefficient
/// sum). Throws std::domain_error if e has a Y component.
std::optional<GlElement> express_in_e(const LieElement& e);

/// Sum of diagonal coefficients; its kernel is sl_+(∞).
Scalar trace_functional(const GlElement& g);

/// All E_{i,j} with i, j <= bound.
std::vector<EIndex> e_window(std::uint32_t bound);

/// Centralizer of `tests` inside span(ansatz), computed with bracket_ee.
std::vector<GlElement> gl_centralizer_basis(const std::vector<GlElement>& tests, const std::vector<EIndex>& ansatz);

}  // namespace ladder
