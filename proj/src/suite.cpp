#include "ladder/suite.hpp"

#include "ladder/cohomology.hpp"
#include "ladder/gl.hpp"
#include "ladder/text.hpp"
#include "ladder/words.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

namespace ladder {

std::vector<Mutation> known_mutations() {
  std::vector<Mutation> out;
  out.push_back(Mutation{});
  Mutation theta;
  theta.name = "theta-zero";
  theta.bracket.theta_zero_is_one = false;
  out.push_back(theta);
  for (int t = 0; t < 6; ++t) {
    Mutation drop;
    drop.name = "drop-term-" + std::to_string(t);
    drop.bracket.dropped_term = t;
    out.push_back(drop);
  }
  Mutation guard;
  guard.name = "action-guard";
  guard.action.theta_guard = false;
  out.push_back(guard);
  Mutation rho;
  rho.name = "rho";
  rho.extension.perturb_rho = true;
  out.push_back(rho);
  return out;
}

std::optional<Mutation> find_mutation(std::string_view name) {
  for (auto& m : known_mutations())
    if (m.name == name) return m;
  return std::nullopt;
}

bool SuiteReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const SuiteItem& i) { return !i.passed; }));
}

namespace {

struct Tally {
  explicit Tally(std::string name) { item.name = std::move(name); }
  SuiteItem item;
  void check(bool ok, const std::function<std::string()>& describe) {
    ++item.cases;
    if (!ok && item.passed) {
      item.passed = false;
      item.counterexample = describe();
    }
  }
};

std::string z_name(ZIndex z) { return "Z[" + std::to_string(z.n) + "," + std::to_string(z.m) + "]"; }

std::vector<LieElement> window_with_y(std::uint32_t bound) {
  std::vector<LieElement> out;
  for (auto z : generator_window(bound)) out.push_back(LieElement::generator(z.n, z.m));
  out.push_back(LieElement::derivation_y());
  return out;
}

SuiteItem from_outcome(std::string name, bool passed, std::size_t cases, std::string counterexample) {
  return SuiteItem{std::move(name), passed, cases, std::move(counterexample)};
}

SuiteItem lie_antisymmetry(std::uint32_t B, const BracketRules& r) {
  Tally t("lie.antisymmetry");
  const auto gens = window_with_y(B);
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const auto sum = bracket(a, b, r) + bracket(b, a, r);
      t.check(sum.is_zero(), [&] { return "[" + to_text(a) + ", " + to_text(b) + "] + [b, a] = " + to_text(sum); });
    }
  return t.item;
}

SuiteItem lie_jacobi(std::uint32_t B, const BracketRules& r) {
  Tally t("lie.jacobi");
  const auto gens = window_with_y(B);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto ab = bracket(gens[i], gens[j], r);
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const auto& a = gens[i];
        const auto& b = gens[j];
        const auto& c = gens[k];
        const auto sum = bracket(ab, c, r) + bracket(bracket(b, c, r), a, r) + bracket(bracket(c, a, r), b, r);
        t.check(sum.is_zero(), [&] {
          return "Jacobi(" + to_text(a) + ", " + to_text(b) + ", " + to_text(c) + ") = " + to_text(sum);
        });
      }
    }
  return t.item;
}

SuiteItem lie_grading(std::uint32_t B, const BracketRules& r) {
  Tally t("lie.grading");
  for (auto a : generator_window(B))
    for (auto b : generator_window(B)) {
      const auto br = bracket(LieElement::generator(a.n, a.m), LieElement::generator(b.n, b.m), r);
      if (br.is_zero()) continue;
      const auto d = degree(br);
      t.check(d && *d == a.degree() + b.degree(),
              [&] { return "[" + z_name(a) + ", " + z_name(b) + "] = " + to_text(br) + " has the wrong degree"; });
    }
  return t.item;
}

SuiteItem lie_y_derivation(std::uint32_t B, const BracketRules& r) {
  Tally t("lie.y_derivation");
  for (auto z : generator_window(B)) {
    const auto gen = LieElement::generator(z.n, z.m);
    const auto br = bracket(LieElement::derivation_y(), gen, r);
    t.check(br == Scalar(z.degree()) * gen, [&] { return "[Y, " + z_name(z) + "] = " + to_text(br); });
  }
  return t.item;
}

SuiteItem lie_center(std::uint32_t B, const BracketRules& r) {
  Tally t("lie.center");
  const auto z00 = LieElement::generator(0, 0);
  for (const auto& g : window_with_y(B)) {
    const auto br = bracket(z00, g, r);
    t.check(br.is_zero(), [&] { return "[Z[0,0], " + to_text(g) + "] = " + to_text(br); });
  }
  return t.item;
}

SuiteItem lie_decomposition(std::uint32_t B, const BracketRules& r) {
  Tally t("lie.decomposition");
  for (std::uint32_t n = 0; n <= 2 * B; ++n)
    for (std::uint32_t m = 0; m <= 2 * B; ++m) {
      const auto dec = decompose_generator(n, m);
      const auto value = dec.evaluate(r);
      t.check(value == LieElement::generator(n, m),
              [&] { return dec.formal() + " evaluates to " + to_text(value) + ", expected " + z_name({n, m}); });
    }
  return t.item;
}

SuiteItem gl_derived(std::uint32_t B, const BracketRules& r) {
  Tally t("gl.derived_subalgebra");
  for (auto a : generator_window(B))
    for (auto b : generator_window(B)) {
      const auto br = bracket(LieElement::generator(a.n, a.m), LieElement::generator(b.n, b.m), r);
      t.check(express_in_e(br).has_value(),
              [&] { return "[" + z_name(a) + ", " + z_name(b) + "] = " + to_text(br) + " is outside gl_+"; });
    }
  return t.item;
}

SuiteItem gl_ideal(std::uint32_t B, const BracketRules& r) {
  Tally t("gl.ideal");
  for (const auto& x : window_with_y(B))
    for (auto e : e_window(B)) {
      const auto g = GlElement::unit(e.i, e.j);
      const auto br = bracket(x, embed_to_z(g), r);
      const auto back = express_in_e(br);
      t.check(back && trace_functional(*back) == 0,
              [&] { return "[" + to_text(x) + ", " + to_text(g) + "] = " + to_text(br) + " is not traceless in gl_+"; });
    }
  return t.item;
}

SuiteItem gl_embedding(std::uint32_t B, const BracketRules& r) {
  Tally t("gl.embedding");
  for (auto a : e_window(B))
    for (auto b : e_window(B)) {
      const auto ga = GlElement::unit(a.i, a.j);
      const auto gb = GlElement::unit(b.i, b.j);
      const auto lhs = bracket(embed_to_z(ga), embed_to_z(gb), r);
      const auto rhs = embed_to_z(bracket_ee(ga, gb));
      t.check(lhs == rhs, [&] {
        return "[" + to_text(ga) + ", " + to_text(gb) + "] embeds as " + to_text(rhs) + " but brackets to " + to_text(lhs);
      });
    }
  return t.item;
}

SuiteItem gl_boundary(std::uint32_t B) {
  Tally t("gl.membership_boundary");
  for (auto z : generator_window(B))
    t.check(!express_in_e(LieElement::generator(z.n, z.m)).has_value(),
            [&] { return z_name(z) + " was expressed in matrix units"; });
  return t.item;
}

SuiteItem extension_cocycle(std::uint32_t B, const ExtensionRules& e) {
  auto o = verify_cocycle_conditions(B, e);
  return from_outcome("extension.cocycle", o.passed, o.cases, o.counterexample);
}

SuiteItem extension_alpha(std::uint32_t B, const BracketRules& r) {
  auto o = verify_alpha_agreement(B, r);
  return from_outcome("extension.alpha_agreement", o.passed, o.cases, o.counterexample);
}

SuiteItem extension_reconstruction(std::uint32_t B, const BracketRules& r, const ExtensionRules& e) {
  auto o = verify_reconstruction(B, r, e);
  return from_outcome("extension.reconstruction", o.passed, o.cases, o.counterexample);
}

SuiteItem extension_grid(std::uint32_t B, const BracketRules& r) {
  const auto g = obstruction_grid(std::min<std::uint32_t>(B, 3), 2, r);
  return from_outcome("extension.obstruction_grid", g.vanishing == 0, g.cases,
                      g.vanishing == 0 ? "" : "obstruction vanishes for " + g.first_vanishing);
}

SuiteItem extension_infeasible(std::uint32_t B) {
  Tally t("extension.infeasibility");
  for (std::uint32_t top = 0; top <= 5 * B; ++top) {
    const auto sys = nonsplit_system(top);
    const auto cert = nonsplit_infeasibility(top);
    t.check(cert && certifies_infeasible(sys.matrix, sys.rhs, cert->certificate),
            [&] { return "no infeasibility certificate for L = " + std::to_string(top); });
  }
  return t.item;
}

SuiteItem action_representation(std::uint32_t B, const BracketRules& r, const ActionRules& a) {
  auto o = verify_action_is_representation(B, 2 * B, r, a);
  return from_outcome("action.representation", o.passed, o.cases, o.counterexample);
}

SuiteItem action_coproduct(std::uint32_t B) {
  auto o = verify_coproduct_laws(2 * B);
  return from_outcome("action.coproduct", o.passed, o.cases, o.counterexample);
}

Alphabet two_letters() { return Alphabet({{"a", 1, 1}, {"b", 2, 1}}); }

SuiteItem words_jacobi(std::uint32_t B) {
  Tally t("words.jacobi");
  const auto alphabet = two_letters();
  std::vector<Word> words;
  for (std::size_t len = 0; len <= std::min<std::uint32_t>(B, 2); ++len)
    for (auto& w : words_of_length(alphabet, len)) words.push_back(w);
  std::vector<WordLieElement> gens;
  for (const auto& u : words)
    for (const auto& v : words) gens.push_back(WordLieElement::unit({u, v}));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto ab = bracket_words(gens[i], gens[j]);
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const auto sum = bracket_words(ab, gens[k]) + bracket_words(bracket_words(gens[j], gens[k]), gens[i]) +
                         bracket_words(bracket_words(gens[k], gens[i]), gens[j]);
        t.check(sum.empty(), [&] {
          return "Jacobi(" + to_text(gens[i], alphabet) + ", " + to_text(gens[j], alphabet) + ", " +
                 to_text(gens[k], alphabet) + ") = " + to_text(sum, alphabet);
        });
      }
    }
  return t.item;
}

std::vector<Alphabet> iota_alphabets() { return {Alphabet({{"a", 1, 1}}), two_letters()}; }

SuiteItem words_iota_action(std::uint32_t B) {
  Tally t("words.iota_action");
  const std::uint32_t top = std::min<std::uint32_t>(B, 3);
  for (const auto& alphabet : iota_alphabets())
    for (std::uint32_t n = 0; n <= top; ++n)
      for (std::uint32_t m = 0; m <= top; ++m)
        for (std::uint32_t k = 0; k <= top; ++k) {
          const auto rep = check_iota_compat(alphabet, n, m, k);
          t.check(rep.passed, [&] {
            return "iota mismatch for " + z_name({n, m}) + " on t_" + std::to_string(k) + ": " +
                   to_text(rep.lhs, alphabet) + " vs " + to_text(rep.rhs, alphabet);
          });
        }
  return t.item;
}

SuiteItem words_iota_bracket(std::uint32_t B, const BracketRules& r) {
  Tally t("words.iota_bracket");
  const std::uint32_t top = std::min<std::uint32_t>(B, 3);
  for (const auto& alphabet : iota_alphabets()) {
    const auto window = generator_window(top);
    for (auto a : window)
      for (auto b : window)
        for (std::uint32_t k = 0; k <= top; ++k) {
          const auto rep = check_iota_bracket_compat(alphabet, a, b, k, r);
          t.check(rep.passed, [&] {
            return "iota bracket mismatch for [" + z_name(a) + ", " + z_name(b) + "] on t_" + std::to_string(k) +
                   ": " + to_text(rep.lhs, alphabet) + " vs " + to_text(rep.rhs, alphabet);
          });
        }
  }
  return t.item;
}

SuiteItem dse_fixtures(std::uint32_t B) {
  Tally t("dse.fixtures");
  const std::uint32_t order = 2 * B + 2;
  const Alphabet single({{"a", 1, 1}});
  const auto x = dse_expand(single, order);
  for (std::uint32_t j = 0; j <= order; ++j) {
    Word w{std::vector<std::uint32_t>(j, 0)};
    t.check(x.c[j] == WordCombination::unit(w), [&] { return "c_" + std::to_string(j) + " = " + to_text(x.c[j], single); });
  }
  const auto fib = dse_expand(two_letters(), order);
  std::size_t prev = 1, cur = 1;
  for (std::uint32_t j = 1; j <= order; ++j) {
    t.check(fib.c[j].size() == cur, [&] {
      return "order " + std::to_string(j) + " has " + std::to_string(fib.c[j].size()) + " words, expected " +
             std::to_string(cur);
    });
    const auto next = prev + cur;
    prev = cur;
    cur = next;
  }
  return t.item;
}

SuiteItem cohomology_d_squared(std::uint32_t B) {
  Tally t("cohomology.d_squared");
  for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(B, 3); ++n) {
    const auto algebra = truncate_gl(n);
    for (std::size_t k = 0; k + 2 <= algebra.dim(); ++k) {
      const auto dd = ce_differential(algebra, k + 1) * ce_differential(algebra, k);
      t.check(dd.is_zero(), [&] { return "d o d != 0 on C^" + std::to_string(k) + " of gl(" + std::to_string(n) + ")"; });
    }
  }
  return t.item;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

SuiteItem cohomology_betti(std::uint32_t B) {
  Tally t("cohomology.betti");
  for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(B, 3); ++n) {
    const auto table = betti_numbers(truncate_gl(n));
    const auto expected = exterior_poincare(n);
    t.check(table.betti == expected && table.euler_from_betti() == table.euler_from_cochains(), [&] {
      return "gl(" + std::to_string(n) + ") Betti numbers " + join(table.betti) + ", expected " + join(expected);
    });
  }
  for (std::uint32_t n = 2; n <= std::min<std::uint32_t>(B, 3); ++n)
    for (std::uint32_t p = 0; p < n; ++p) {
      const auto s = stability_check(n, p);
      t.check(s.passed, [&] { return "b_" + std::to_string(p) + " unstable at gl(" + std::to_string(n) + ")"; });
    }
  return t.item;
}

SuiteItem cohomology_h1(std::uint32_t B, const BracketRules& r) {
  Tally t("cohomology.h1");
  for (std::uint32_t b = 1; b <= std::min<std::uint32_t>(B, 6); ++b) {
    const auto with = h1_degree_functional(b, true, r);
    t.check(with.dimension == 1, [&] {
      return "H^1 with Y at bound " + std::to_string(b) + " has dimension " + std::to_string(with.dimension);
    });
    const auto without = h1_degree_functional(b, false, r);
    t.check(without.dimension == 2 * b + 1, [&] {
      return "H^1 without Y at bound " + std::to_string(b) + " has dimension " + std::to_string(without.dimension) +
             ", expected " + std::to_string(2 * b + 1);
    });
  }
  return t.item;
}

SuiteItem guarded(const std::string& name, const std::function<SuiteItem()>& body) {
  try {
    return body();
  } catch (const std::exception& ex) {
    return SuiteItem{name, false, 0, std::string("exception: ") + ex.what()};
  }
}

}  // namespace

SuiteReport run_verify_suite(std::uint32_t bound, const Mutation& mutation, bool parallel) {
  if (bound < 1) throw std::invalid_argument("suite bound must be >= 1");
  const std::uint32_t B = bound;
  const auto& r = mutation.bracket;
  const auto& a = mutation.action;
  const auto& e = mutation.extension;

  const std::vector<std::pair<std::string, std::function<SuiteItem()>>> jobs = {
      {"action.coproduct", [=] { return action_coproduct(B); }},
      {"action.representation", [=] { return action_representation(B, r, a); }},
      {"cohomology.betti", [=] { return cohomology_betti(B); }},
      {"cohomology.d_squared", [=] { return cohomology_d_squared(B); }},
      {"cohomology.h1", [=] { return cohomology_h1(B, r); }},
      {"dse.fixtures", [=] { return dse_fixtures(B); }},
      {"extension.alpha_agreement", [=] { return extension_alpha(B, r); }},
      {"extension.cocycle", [=] { return extension_cocycle(B, e); }},
      {"extension.infeasibility", [=] { return extension_infeasible(B); }},
      {"extension.obstruction_grid", [=] { return extension_grid(B, r); }},
      {"extension.reconstruction", [=] { return extension_reconstruction(B, r, e); }},
      {"gl.derived_subalgebra", [=] { return gl_derived(B, r); }},
      {"gl.embedding", [=] { return gl_embedding(B, r); }},
      {"gl.ideal", [=] { return gl_ideal(B, r); }},
      {"gl.membership_boundary", [=] { return gl_boundary(B); }},
      {"lie.antisymmetry", [=] { return lie_antisymmetry(B, r); }},
      {"lie.center", [=] { return lie_center(B, r); }},
      {"lie.decomposition", [=] { return lie_decomposition(B, r); }},
      {"lie.grading", [=] { return lie_grading(B, r); }},
      {"lie.jacobi", [=] { return lie_jacobi(B, r); }},
      {"lie.y_derivation", [=] { return lie_y_derivation(B, r); }},
      {"words.iota_action", [=] { return words_iota_action(B); }},
      {"words.iota_bracket", [=] { return words_iota_bracket(B, r); }},
      {"words.jacobi", [=] { return words_jacobi(B); }},
  };

  SuiteReport report;
  report.bound = B;
  report.mutation = mutation.name;
  if (parallel) {
    std::vector<std::future<SuiteItem>> running;
    for (const auto& [name, body] : jobs)
      running.push_back(std::async(std::launch::async, [&name, &body] { return guarded(name, body); }));
    for (auto& f : running) report.items.push_back(f.get());
  } else {
    for (const auto& [name, body] : jobs) report.items.push_back(guarded(name, body));
  }
  std::sort(report.items.begin(), report.items.end(),
            [](const SuiteItem& x, const SuiteItem& y) { return x.name < y.name; });
  return report;
}

}  // namespace ladder
