#pragma once

#include "ladder/lie.hpp"

#include <array>
#include <utility>
#include <vector>

namespace ladder {

/// Product of ladders t_{k_1} ... t_{k_r}, stored as the sorted list of
/// ladder indices with repetition. The empty monomial is the unit 1.
struct Monomial {
  std::vector<std::uint32_t> factors;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> f);
  static Monomial ladder(std::uint32_t k) { return Monomial({k}); }

  std::uint64_t weight() const;  ///< Σ k_i, the grading of S.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using LadderPoly = SparseVector<Monomial>;
using TensorPoly = SparseVector<std::pair<Monomial, Monomial>>;
using TripleTensor = SparseVector<std::array<Monomial, 3>>;

LadderPoly ladder(std::uint32_t k);
LadderPoly multiply(const LadderPoly& a, const LadderPoly& b);

struct ActionRules {
  /// When false, Z_{n,m} t_k = t_{k-m+n} is applied even for m > k whenever
  /// the result index is non-negative (the "missing Θ guard" mutation).
  bool theta_guard = true;
};

/// Z_{n,m} t_k = Θ(k-m) t_{k-m+n}, Y t_k = k t_k, extended to products as a
/// derivation and linearly in both arguments.
LadderPoly act(const LieElement& e, const LadderPoly& p, const ActionRules& rules = {});

/// Δ(t_n) = Σ_j t_j ⊗ t_{n-j}, multiplicative; Δ(1) = 1 ⊗ 1.
TensorPoly coproduct(const LadderPoly& p);

/// (Δ ⊗ id)Δ and (id ⊗ Δ)Δ.
TripleTensor coproduct_left_iterated(const LadderPoly& p);
TripleTensor coproduct_right_iterated(const LadderPoly& p);

TensorPoly swap_legs(const TensorPoly& t);

struct RepresentationReport {
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

/// [x,y]·t_k = x·(y·t_k) - y·(x·t_k) for all generators Z with indices
/// <= generator_bound, together with Y, and k <= ladder_bound.
RepresentationReport verify_action_is_representation(std::uint32_t generator_bound, std::uint32_t ladder_bound,
                                                     const BracketRules& bracket_rules = {},
                                                     const ActionRules& action_rules = {});

/// Coassociativity and cocommutativity of Δ on t_k, k <= bound.
RepresentationReport verify_coproduct_laws(std::uint32_t bound);

}  // namespace ladder
