#include "ladder/cohomology.hpp"

#include "ladder/gl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ladder {

FiniteLieAlgebra::FiniteLieAlgebra(std::vector<std::string> labels, Structure structure)
    : labels_(std::move(labels)), structure_(std::move(structure)) {
  const std::size_t n = labels_.size();
  for (auto it = structure_.begin(); it != structure_.end();) {
    const auto [i, j] = it->first;
    if (i >= j) throw std::invalid_argument("structure constants must be keyed with i < j");
    if (j >= n) throw std::invalid_argument("structure constant index out of range");
    for (const auto& [k, c] : it->second)
      if (k >= n) throw std::invalid_argument("structure constant result index out of range");
    it = it->second.empty() ? structure_.erase(it) : std::next(it);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        auto unit = [](std::size_t i) { return SparseVector<std::size_t>::unit(i); };
        auto jac = bracket(bracket(unit(a), unit(b)), unit(c)) + bracket(bracket(unit(b), unit(c)), unit(a)) +
                   bracket(bracket(unit(c), unit(a)), unit(b));
        if (!jac.empty())
          throw std::invalid_argument("Jacobi identity fails on (" + labels_[a] + ", " + labels_[b] + ", " +
                                      labels_[c] + ")");
      }
}

SparseVector<std::size_t> FiniteLieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = structure_.find({i, j});
    return it == structure_.end() ? SparseVector<std::size_t>{} : it->second;
  }
  return -bracket(j, i);
}

SparseVector<std::size_t> FiniteLieAlgebra::bracket(const SparseVector<std::size_t>& a,
                                                    const SparseVector<std::size_t>& b) const {
  SparseVector<std::size_t> out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) out.add_scaled(bracket(i, j), ci * cj);
  return out;
}

FiniteLieAlgebra truncate_gl(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("truncate_gl: n must be >= 1");
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) labels.push_back("E[" + std::to_string(i) + "," + std::to_string(j) + "]");
  auto index = [n](EIndex e) { return static_cast<std::size_t>(e.i) * n + e.j; };
  FiniteLieAlgebra::Structure structure;
  for (std::uint32_t a = 0; a < n * n; ++a)
    for (std::uint32_t b = a + 1; b < n * n; ++b) {
      GlElement r = bracket_ee(GlElement::unit(a / n, a % n), GlElement::unit(b / n, b % n));
      if (r.is_zero()) continue;
      structure[{a, b}] = r.e.reindex<std::size_t>(index);
    }
  return FiniteLieAlgebra(std::move(labels), std::move(structure));
}

FiniteLieAlgebra abelian_algebra(std::uint32_t w) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < w; ++i) labels.push_back("x" + std::to_string(i));
  return FiniteLieAlgebra(std::move(labels), {});
}

std::vector<std::vector<std::size_t>> exterior_basis(std::size_t dim, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > dim) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == dim - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t i = pos; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

ExactMatrix ce_differential(const FiniteLieAlgebra& algebra, std::size_t k) {
  const std::size_t dim = algebra.dim();
  const auto source = exterior_basis(dim, k);
  const auto target = exterior_basis(dim, k + 1);
  std::map<std::vector<std::size_t>, std::size_t> column;
  for (std::size_t c = 0; c < source.size(); ++c) column.emplace(source[c], c);
  ExactMatrix d(target.size(), source.size());
  for (std::size_t row = 0; row < target.size(); ++row) {
    const auto& J = target[row];
    for (std::size_t a = 0; a < J.size(); ++a)
      for (std::size_t b = a + 1; b < J.size(); ++b) {
        const auto br = algebra.bracket(J[a], J[b]);
        if (br.empty()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < J.size(); ++t)
          if (t != a && t != b) rest.push_back(J[t]);
        const int base_sign = ((a + b) % 2 == 0) ? 1 : -1;
        for (const auto& [c, coeff] : br) {
          auto pos = std::lower_bound(rest.begin(), rest.end(), c);
          if (pos != rest.end() && *pos == c) continue;
          // Moving x_c from the front to its sorted slot costs one sign per
          // index it passes.
          const auto passed = static_cast<std::size_t>(pos - rest.begin());
          std::vector<std::size_t> I = rest;
          I.insert(I.begin() + static_cast<std::ptrdiff_t>(passed), c);
          const int sign = base_sign * (passed % 2 == 0 ? 1 : -1);
          d.add(row, column.at(I), coeff * sign);
        }
      }
  }
  return d;
}

long BettiTable::euler_from_cochains() const {
  long total = 0;
  for (std::size_t k = 0; k < cochain_dims.size(); ++k)
    total += (k % 2 == 0 ? 1 : -1) * static_cast<long>(cochain_dims[k]);
  return total;
}

long BettiTable::euler_from_betti() const {
  long total = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) total += (k % 2 == 0 ? 1 : -1) * static_cast<long>(betti[k]);
  return total;
}

BettiTable betti_numbers(const FiniteLieAlgebra& algebra) {
  const std::size_t dim = algebra.dim();
  BettiTable table;
  for (std::size_t k = 0; k <= dim; ++k) {
    table.cochain_dims.push_back(exterior_basis(dim, k).size());
    table.ranks.push_back(k == dim ? 0 : rank(ce_differential(algebra, k)));
  }
  for (std::size_t k = 0; k <= dim; ++k) {
    const std::size_t incoming = k == 0 ? 0 : table.ranks[k - 1];
    table.betti.push_back(table.cochain_dims[k] - table.ranks[k] - incoming);
  }
  return table;
}

std::vector<std::size_t> exterior_poincare(std::uint32_t n) {
  std::vector<std::size_t> poly{1};
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::size_t shift = 2 * i - 1;
    std::vector<std::size_t> next(poly.size() + shift, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + shift] += poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

StabilityReport stability_check(std::uint32_t n, std::uint32_t p) {
  if (n < 2) throw std::invalid_argument("stability_check: n must be >= 2");
  StabilityReport report;
  if (p >= n) return report;
  report.applicable = true;
  auto at = [](const BettiTable& t, std::size_t k) { return k < t.betti.size() ? t.betti[k] : std::size_t{0}; };
  report.betti_n = at(betti_numbers(truncate_gl(n)), p);
  report.betti_n_minus_1 = at(betti_numbers(truncate_gl(n - 1)), p);
  report.passed = report.betti_n == report.betti_n_minus_1;
  return report;
}

H1Report h1_degree_functional(std::uint32_t bound, bool with_y, const BracketRules& rules) {
  const auto window = generator_window(bound);
  std::map<ZIndex, std::size_t> column;
  for (std::size_t c = 0; c < window.size(); ++c) column.emplace(window[c], c);
  auto inside = [&](const LieElement& e) {
    return std::all_of(e.z.begin(), e.z.end(), [&](const auto& term) { return column.count(term.first) != 0; });
  };
  ExactMatrix system(0, window.size());
  auto add_constraint = [&](const LieElement& e) {
    if (e.is_zero() || !inside(e)) return;
    SparseRow row;
    for (const auto& [idx, c] : e.z) row.add(column.at(idx), c);
    system.push_row(std::move(row));
  };
  for (const auto& a : window)
    for (const auto& b : window)
      add_constraint(bracket(LieElement::generator(a.n, a.m), LieElement::generator(b.n, b.m), rules));
  if (with_y)
    for (const auto& a : window) add_constraint(bracket(LieElement::derivation_y(), LieElement::generator(a.n, a.m), rules));

  H1Report report;
  report.bound = bound;
  report.with_y = with_y;
  const auto kernel = kernel_basis(system);
  report.dimension = kernel.size();
  for (const auto& v : kernel) {
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) {
        report.free_degrees.push_back(window[c].degree());
        break;
      }
  }
  std::sort(report.free_degrees.begin(), report.free_degrees.end());
  return report;
}

}  // namespace ladder
