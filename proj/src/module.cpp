#include "ladder/module.hpp"

#include "ladder/text.hpp"

#include <algorithm>

namespace ladder {

Monomial::Monomial(std::vector<std::uint32_t> f) : factors(std::move(f)) { std::sort(factors.begin(), factors.end()); }

std::uint64_t Monomial::weight() const {
  std::uint64_t w = 0;
  for (auto k : factors) w += k;
  return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> merged;
  merged.reserve(a.factors.size() + b.factors.size());
  std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(), std::back_inserter(merged));
  Monomial out;
  out.factors = std::move(merged);
  return out;
}

LadderPoly ladder(std::uint32_t k) { return LadderPoly::unit(Monomial::ladder(k)); }

LadderPoly multiply(const LadderPoly& a, const LadderPoly& b) {
  LadderPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add(ma * mb, ca * cb);
  return out;
}

namespace {

// Image of the single ladder t_k under e, as (coefficient, new index) pairs.
template <class Sink>
void act_on_ladder(const LieElement& e, std::uint32_t k, const ActionRules& rules, Sink&& sink) {
  const auto kk = static_cast<std::int64_t>(k);
  for (const auto& [idx, c] : e.z) {
    const std::int64_t target = kk - idx.m + idx.n;
    const bool fires = rules.theta_guard ? theta(kk - idx.m) == 1 : target >= 0;
    if (fires) sink(c, static_cast<std::uint32_t>(target));
  }
  if (e.y != 0 && k != 0) sink(e.y * k, k);
}

}  // namespace

LadderPoly act(const LieElement& e, const LadderPoly& p, const ActionRules& rules) {
  LadderPoly out;
  for (const auto& [mono, coeff] : p) {
    const auto& f = mono.factors;
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      // Leibniz: replace one factor occurrence at a time.
      std::vector<std::uint32_t> rest(f.begin(), f.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      act_on_ladder(e, f[pos], rules, [&](const Scalar& c, std::uint32_t target) {
        std::vector<std::uint32_t> replaced = rest;
        replaced.push_back(target);
        out.add(Monomial(std::move(replaced)), c * coeff);
      });
    }
  }
  return out;
}

namespace {

TensorPoly coproduct_monomial(const Monomial& m) {
  TensorPoly acc;
  acc.add({Monomial{}, Monomial{}}, 1);
  for (auto k : m.factors) {
    TensorPoly next;
    for (const auto& [legs, c] : acc)
      for (std::uint32_t j = 0; j <= k; ++j)
        next.add({legs.first * Monomial::ladder(j), legs.second * Monomial::ladder(k - j)}, c);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TensorPoly coproduct(const LadderPoly& p) {
  TensorPoly out;
  for (const auto& [m, c] : p) out.add_scaled(coproduct_monomial(m), c);
  return out;
}

TripleTensor coproduct_left_iterated(const LadderPoly& p) {
  TripleTensor out;
  for (const auto& [legs, c] : coproduct(p))
    for (const auto& [inner, ci] : coproduct_monomial(legs.first))
      out.add({inner.first, inner.second, legs.second}, c * ci);
  return out;
}

TripleTensor coproduct_right_iterated(const LadderPoly& p) {
  TripleTensor out;
  for (const auto& [legs, c] : coproduct(p))
    for (const auto& [inner, ci] : coproduct_monomial(legs.second))
      out.add({legs.first, inner.first, inner.second}, c * ci);
  return out;
}

TensorPoly swap_legs(const TensorPoly& t) {
  TensorPoly out;
  for (const auto& [legs, c] : t) out.add({legs.second, legs.first}, c);
  return out;
}

RepresentationReport verify_action_is_representation(std::uint32_t generator_bound, std::uint32_t ladder_bound,
                                                     const BracketRules& bracket_rules,
                                                     const ActionRules& action_rules) {
  RepresentationReport report;
  std::vector<LieElement> gens;
  for (const auto& idx : generator_window(generator_bound)) gens.push_back(LieElement::generator(idx.n, idx.m));
  gens.push_back(LieElement::derivation_y());
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const LieElement xy = bracket(x, y, bracket_rules);
      for (std::uint32_t k = 0; k <= ladder_bound; ++k) {
        ++report.cases;
        const LadderPoly t = ladder(k);
        LadderPoly lhs = act(xy, t, action_rules);
        LadderPoly rhs = act(x, act(y, t, action_rules), action_rules) - act(y, act(x, t, action_rules), action_rules);
        if (lhs != rhs && report.passed) {
          report.passed = false;
          report.counterexample = "[" + to_text(x) + ", " + to_text(y) + "] on t[" + std::to_string(k) +
                                  "]: " + to_text(lhs) + " != " + to_text(rhs);
        }
      }
    }
  return report;
}

RepresentationReport verify_coproduct_laws(std::uint32_t bound) {
  RepresentationReport report;
  for (std::uint32_t k = 0; k <= bound; ++k) {
    ++report.cases;
    const LadderPoly t = ladder(k);
    if (coproduct_left_iterated(t) != coproduct_right_iterated(t) && report.passed) {
      report.passed = false;
      report.counterexample = "coassociativity fails on t[" + std::to_string(k) + "]";
    }
    const TensorPoly d = coproduct(t);
    if (swap_legs(d) != d && report.passed) {
      report.passed = false;
      report.counterexample = "cocommutativity fails on t[" + std::to_string(k) + "]";
    }
  }
  return report;
}

}  // namespace ladder
