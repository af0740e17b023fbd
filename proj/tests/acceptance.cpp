// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include "ladder/cohomology.hpp"
#include "ladder/extension.hpp"
#include "ladder/gl.hpp"
#include "ladder/lie.hpp"
#include "ladder/module.hpp"
#include "ladder/suite.hpp"
#include "ladder/text.hpp"
#include "ladder/words.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ladder;
using ladder::testing::Gen;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> run;
};

LieElement Z(std::uint32_t n, std::uint32_t m) { return LieElement::generator(n, m); }

Verdict bracket_soundness() {
  Verdict v;
  std::vector<LieElement> gens;
  for (auto z : generator_window(4)) gens.push_back(Z(z.n, z.m));
  gens.push_back(LieElement::derivation_y());
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const auto ab = bracket(a, b);
      v.require((ab + bracket(b, a)).is_zero(), "antisymmetry fails for " + to_text(a) + ", " + to_text(b));
      for (const auto& c : gens) {
        const auto jac = bracket(ab, c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
        if (!jac.is_zero()) v.require(false, "Jacobi fails for " + to_text(a) + ", " + to_text(b) + ", " + to_text(c));
      }
    }
  Gen g(101);
  for (int i = 0; i < 1000; ++i) {
    const auto a = g.lie(8), b = g.lie(8), c = g.lie(8);
    v.require((bracket(a, b) + bracket(b, a)).is_zero(), "random antisymmetry");
    v.require((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero(),
              "random Jacobi fails for " + to_text(a) + ", " + to_text(b) + ", " + to_text(c));
  }
  return v;
}

Verdict decomposition() {
  Verdict v;
  for (std::uint32_t n = 0; n <= 10; ++n)
    for (std::uint32_t m = 0; m <= 10; ++m)
      v.require(decompose_generator(n, m).evaluate() == Z(n, m), decompose_generator(n, m).formal());
  return v;
}

Verdict gl_structure() {
  Verdict v;
  for (auto a : e_window(6))
    for (auto b : e_window(6)) {
      const auto ga = GlElement::unit(a.i, a.j), gb = GlElement::unit(b.i, b.j);
      v.require(bracket(embed_to_z(ga), embed_to_z(gb)) == embed_to_z(bracket_ee(ga, gb)),
                "embedding mismatch at " + to_text(ga) + ", " + to_text(gb));
    }
  for (auto a : generator_window(5))
    for (auto b : generator_window(5)) {
      const auto br = bracket(Z(a.n, a.m), Z(b.n, b.m));
      const auto g = express_in_e(br);
      v.require(g && embed_to_z(*g) == br, "bracket outside gl_+: " + to_text(br));
    }
  for (auto z : generator_window(6))
    v.require(!express_in_e(Z(z.n, z.m)).has_value(), to_text(Z(z.n, z.m)) + " accepted into gl_+");
  return v;
}

Verdict center() {
  Verdict v;
  for (std::uint32_t B : {4u, 5u, 6u}) {
    std::vector<LieElement> tests;
    for (std::uint32_t i = 1; i <= B + 2; ++i) {
      tests.push_back(Z(i, i));
      tests.push_back(Z(i, 0));
      tests.push_back(Z(0, i));
    }
    const auto basis = centralizer_basis(tests, generator_window(B));
    v.require(basis.size() == 1 && basis[0] == Z(0, 0), "center at B = " + std::to_string(B) + " has dimension " +
                                                             std::to_string(basis.size()));
  }
  return v;
}

Verdict maximal_abelian() {
  Verdict v;
  const std::uint32_t B = 4;
  std::vector<LieElement> tests;
  for (std::uint32_t k = 0; k <= B + 2; ++k) tests.push_back(Z(k, k));
  std::vector<ZIndex> diagonal;
  for (std::uint32_t k = 0; k <= B; ++k) diagonal.push_back({k, k});
  const auto narrow = centralizer_basis(tests, diagonal);
  v.require(narrow.size() == B + 1, "degree-0 centralizer has dimension " + std::to_string(narrow.size()));
  const auto wide = centralizer_basis(tests, generator_window(B));
  v.require(wide.size() == B + 1, "full-window centralizer has dimension " + std::to_string(wide.size()));
  for (const auto& x : wide) v.require(degree(x) == 0, "centralizer element " + to_text(x) + " is not diagonal");
  return v;
}

Verdict extension() {
  Verdict v;
  const auto cocycle = verify_cocycle_conditions(3);
  v.require(cocycle.passed, "cocycle: " + cocycle.counterexample);
  const auto rebuilt = verify_reconstruction(4);
  v.require(rebuilt.passed, "reconstruction: " + rebuilt.counterexample);
  return v;
}

Verdict non_splitting() {
  Verdict v;
  const auto grid = obstruction_grid(3, 2);
  v.require(grid.cases == 390625, "grid has " + std::to_string(grid.cases) + " cases");
  v.require(grid.vanishing == 0, "obstruction vanishes for " + grid.first_vanishing);
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t top = 0; top <= 20; ++top) {
    const auto sys = nonsplit_system(top);
    const auto cert = nonsplit_infeasibility(top);
    v.require(cert && certifies_infeasible(sys.matrix, sys.rhs, cert->certificate),
              "no certificate for L = " + std::to_string(top));
  }
  const double certs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(certs < 1.0, "certificates took " + std::to_string(certs) + " s");
  return v;
}

Verdict module_action() {
  Verdict v;
  const auto rep = verify_action_is_representation(6, 10);
  v.require(rep.passed, "representation: " + rep.counterexample);
  Gen g(108);
  for (int i = 0; i < 500; ++i) {
    const auto x = g.lie(6);
    const auto p = LadderPoly::unit(g.monomial(8)), q = LadderPoly::unit(g.monomial(8));
    v.require(act(x, multiply(p, q)) == multiply(act(x, p), q) + multiply(p, act(x, q)),
              "Leibniz fails for " + to_text(x) + " on " + to_text(p) + " * " + to_text(q));
  }
  const auto laws = verify_coproduct_laws(8);
  v.require(laws.passed, "coproduct: " + laws.counterexample);
  return v;
}

Verdict word_layer() {
  Verdict v;
  const Alphabet one({{"a", 1, 1}});
  const Alphabet two({{"a", 1, 1}, {"b", 2, 1}});
  std::vector<WordLieElement> gens;
  std::vector<Word> words;
  for (std::size_t len = 0; len <= 2; ++len)
    for (auto& w : words_of_length(two, len)) words.push_back(w);
  for (const auto& u : words)
    for (const auto& w : words) gens.push_back(WordLieElement::unit({u, w}));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const auto jac = bracket_words(bracket_words(gens[i], gens[j]), gens[k]) +
                         bracket_words(bracket_words(gens[j], gens[k]), gens[i]) +
                         bracket_words(bracket_words(gens[k], gens[i]), gens[j]);
        if (!jac.empty()) v.require(false, "word Jacobi fails at " + to_text(gens[i], two));
      }
  for (const auto* alphabet : {&one, &two}) {
    for (std::uint32_t n = 0; n <= 3; ++n)
      for (std::uint32_t m = 0; m <= 3; ++m)
        for (std::uint32_t k = 0; k <= 3; ++k)
          v.require(check_iota_compat(*alphabet, n, m, k).passed, "iota action form fails");
    for (auto a : generator_window(3))
      for (auto b : generator_window(3))
        for (std::uint32_t k = 0; k <= 3; ++k)
          v.require(check_iota_bracket_compat(*alphabet, a, b, k).passed, "iota bracket form fails");
  }
  return v;
}

// Compositions of `order` into parts 1 and 2, listed one by one.
std::size_t count_compositions(std::uint32_t order) {
  if (order == 0) return 1;
  std::size_t total = count_compositions(order - 1);
  if (order >= 2) total += count_compositions(order - 2);
  return total;
}

Verdict dse() {
  Verdict v;
  const Alphabet one({{"a", 1, 1}});
  const auto single = dse_expand(one, 8);
  for (std::uint32_t j = 0; j <= 8; ++j)
    v.require(single.c[j] == WordCombination::unit(Word{std::vector<std::uint32_t>(j, 0)}),
              "c_" + std::to_string(j) + " = " + to_text(single.c[j], one));
  const Alphabet two({{"a", 1, 1}, {"b", 2, 1}});
  const auto fib = dse_expand(two, 6);
  const std::vector<std::size_t> expected{1, 2, 3, 5, 8, 13};
  for (std::uint32_t j = 1; j <= 6; ++j) {
    v.require(fib.c[j].size() == expected[j - 1], "order " + std::to_string(j) + " word count");
    v.require(fib.c[j].size() == count_compositions(j), "composition oracle disagrees at " + std::to_string(j));
  }
  const Alphabet halved({{"a", 1, 2}});
  const auto h = dse_expand(halved, 6);
  for (std::uint32_t j = 0; j <= 6; ++j)
    v.require(h.c[j].coeff(Word{std::vector<std::uint32_t>(j, 0)}) == ratio(1, 1L << j), "Sym = 2 scaling");
  return v;
}

Verdict cohomology() {
  Verdict v;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto algebra = truncate_gl(n);
    for (std::size_t k = 0; k + 2 <= algebra.dim(); ++k)
      v.require((ce_differential(algebra, k + 1) * ce_differential(algebra, k)).is_zero(),
                "d o d != 0 for gl(" + std::to_string(n) + ")");
    v.require(betti_numbers(algebra).betti == exterior_poincare(n), "Betti table of gl(" + std::to_string(n) + ")");
  }
  for (std::uint32_t n = 2; n <= 3; ++n)
    for (std::uint32_t p = 0; p < n; ++p) v.require(stability_check(n, p).passed, "stability");
  return v;
}

Verdict h1() {
  Verdict v;
  for (std::uint32_t B = 1; B <= 6; ++B) {
    const auto with = h1_degree_functional(B, true).dimension;
    const auto without = h1_degree_functional(B, false).dimension;
    v.require(with == 1, "with Y at B = " + std::to_string(B) + ": " + std::to_string(with));
    v.require(without == 2 * B + 1, "without Y at B = " + std::to_string(B) + ": " + std::to_string(without));
  }
  return v;
}

Verdict mutation_sensitivity() {
  Verdict v;
  const auto clean = run_verify_suite(3);
  v.require(clean.passed(), "unmutated suite fails");
  for (const auto& m : known_mutations()) {
    if (m.name == "none") continue;
    const auto report = run_verify_suite(3, m);
    v.require(report.failures() > 0, "mutation " + m.name + " went unnoticed");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "bracket soundness", 60, bracket_soundness},
      {2, "generator decomposition", 1, decomposition},
      {3, "gl_+ structure", 10, gl_structure},
      {4, "center fixture", 30, center},
      {5, "maximal abelian fixture", 30, maximal_abelian},
      {6, "extension verification", 60, extension},
      {7, "non-splitting", 300, non_splitting},
      {8, "module action", 30, module_action},
      {9, "word layer", 60, word_layer},
      {10, "DSE fixtures", 5, dse},
      {11, "cohomology tables", 120, cohomology},
      {12, "H1 fixtures", 10, h1},
      {13, "mutation sensitivity", 120, mutation_sensitivity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && seconds > c.limit_seconds) {
      v.ok = false;
      v.detail = "exceeded the time limit";
    }
    std::printf("[%s] criterion %2d: %-26s %8.3f s (limit %g s)%s%s\n", v.ok ? "PASS" : "FAIL", c.number, c.title,
                seconds, c.limit_seconds, v.ok ? "" : "  ", v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
