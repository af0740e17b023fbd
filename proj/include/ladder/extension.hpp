#pragma once

#include "ladder/gl.hpp"
#include "ladder/lie.hpp"
#include "ladder/matrix.hpp"

#include <optional>
#include <string>

namespace ladder {

/// Element of the abelian quotient C = ladder algebra / gl_+(∞), written in
/// the basis Z_d (d ∈ ℤ) indexed by degree.
struct CElement {
  SparseVector<std::int64_t> terms;

  static CElement generator(std::int64_t d) { return CElement{SparseVector<std::int64_t>::unit(d)}; }
  bool is_zero() const { return terms.empty(); }
  friend CElement operator+(CElement a, const CElement& b) {
    a.terms += b.terms;
    return a;
  }
  friend CElement operator*(const Scalar& c, CElement a) {
    a.terms *= c;
    return a;
  }
  friend bool operator==(const CElement&, const CElement&) = default;
};

/// Pair (ξ, x) in gl_+(∞) ⊕ C.
struct ExtElement {
  GlElement xi;
  CElement x;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Knobs for a deliberately wrong extension datum.
struct ExtensionRules {
  /// Drops the first term of ρ(Z_1, Z_{-2}) (and of its antisymmetric twin).
  bool perturb_rho = false;
};

/// π: Z_{n,m} -> Z_{n-m}. Throws std::domain_error on a Y component.
CElement project_to_c(const LieElement& e);

/// s(Z_d) = Z_{d,0} for d > 0, Z_{0,-d} for d < 0, Z_{0,0} for d = 0.
LieElement section_s(const CElement& c);

/// α(x).g, the derivation of gl_+(∞) induced by the section.
GlElement alpha(const CElement& x, const GlElement& g);

/// ρ(Z_a, Z_b) on generators; zero on same-sign pairs, antisymmetric.
GlElement rho_generators(std::int64_t a, std::int64_t b, const ExtensionRules& rules = {});

/// Bilinear extension of rho_generators.
GlElement rho(const CElement& x, const CElement& y, const ExtensionRules& rules = {});

/// ([ξ1,ξ2] + α(x1).ξ2 - α(x2).ξ1 + ρ(x1,x2), 0); C is abelian.
ExtElement ext_bracket(const ExtElement& a, const ExtElement& b, const ExtensionRules& rules = {});

/// (ξ, π(e)) with e = embed(ξ) + s(π(e)).
ExtElement split_element(const LieElement& e);
LieElement assemble(const ExtElement& v);

struct CheckOutcome {
  bool passed = true;
  std::size_t cases = 0;
  /// Human-readable description of the first failing case.
  std::string counterexample;
};

/// Both compatibility conditions of the datum (α, ρ): the derivation
/// condition [α(x),α(y)].ξ - α([x,y]).ξ = [ρ(x,y), ξ] and the cyclic
/// condition, for generators |d| <= bound and E indices <= bound.
CheckOutcome verify_cocycle_conditions(std::uint32_t bound, const ExtensionRules& rules = {});

/// α(x, g) == express_in_e([s(x), embed(g)]) for generators in the window.
CheckOutcome verify_alpha_agreement(std::uint32_t bound, const BracketRules& bracket_rules = {});

/// The bracket rebuilt from (α, ρ) reproduces the generator bracket for all
/// Z_{a,b}, Z_{c,d} with indices <= bound.
CheckOutcome verify_reconstruction(std::uint32_t bound, const BracketRules& bracket_rules = {},
                                   const ExtensionRules& rules = {});

/// [(s+b)(Z_1), (s+b)(Z_{-1})] with b(Z_1) = b_plus, b(Z_{-1}) = b_minus.
/// b_plus must be supported on E_{h+1,h}, b_minus on E_{k,k+1}; throws
/// std::invalid_argument otherwise.
LieElement nonsplit_obstruction(const GlElement& b_plus, const GlElement& b_minus, const BracketRules& rules = {});

/// The system E_{0,0} = Σ_{j=0}^{L} φ_j (E_{j+1,j+1} - E_{j,j}) in the
/// unknowns φ_j, rows indexed by E_{0,0} .. E_{L+1,L+1}.
struct InfeasibilitySystem {
  ExactMatrix matrix;
  std::vector<Scalar> rhs;
};
InfeasibilitySystem nonsplit_system(std::uint32_t top);

/// Certificate that nonsplit_system(top) has no solution; nullopt would mean
/// a splitting exists (it never does).
std::optional<Infeasibility> nonsplit_infeasibility(std::uint32_t top);

/// Exhaustive grid of graded b with support indices h, k <= support_bound and
/// integer coefficients in [-coeff_bound, coeff_bound]. Counts cases where
/// the obstruction vanishes (0 means no splitting map in the grid).
struct ObstructionGridResult {
  std::size_t cases = 0;
  std::size_t vanishing = 0;
  std::string first_vanishing;
};
ObstructionGridResult obstruction_grid(std::uint32_t support_bound, int coeff_bound, const BracketRules& rules = {});

}  // namespace ladder
