#include "ladder/lie.hpp"

#include "ladder/matrix.hpp"

#include <map>
#include <stdexcept>

namespace ladder {

namespace {

int step(std::int64_t k, const BracketRules& rules) {
  if (k == 0) return rules.theta_zero_is_one ? 1 : 0;
  return theta(k);
}

ZIndex make_index(std::int64_t n, std::int64_t m) {
  return ZIndex{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)};
}

}  // namespace

SparseVector<ZIndex> generator_bracket(ZIndex a, ZIndex b, const BracketRules& rules) {
  const std::int64_t n = a.n, m = a.m, l = b.n, s = b.m;
  SparseVector<ZIndex> out;
  auto term = [&](int which, int sign, bool fires, std::int64_t i, std::int64_t j) {
    if (!fires || which == rules.dropped_term) return;
    out.add(make_index(i, j), Scalar(sign));
  };
  term(0, +1, step(l - m, rules) == 1, l - m + n, s);
  term(1, -1, step(s - n, rules) == 1, l, s - n + m);
  term(2, -1, step(n - s, rules) == 1, n - s + l, m);
  term(3, +1, step(m - l, rules) == 1, n, m - l + s);
  term(4, -1, m == l, n, s);
  term(5, +1, n == s, l, m);
  return out;
}

LieElement bracket(const LieElement& a, const LieElement& b, const BracketRules& rules) {
  LieElement out;
  for (const auto& [ia, ca] : a.z)
    for (const auto& [ib, cb] : b.z) out.z.add_scaled(generator_bracket(ia, ib, rules), ca * cb);
  if (a.y != 0)
    for (const auto& [ib, cb] : b.z) out.z.add(ib, a.y * cb * ib.degree());
  if (b.y != 0)
    for (const auto& [ia, ca] : a.z) out.z.add(ia, -b.y * ca * ia.degree());
  return out;
}

std::optional<std::int64_t> degree(const LieElement& e) {
  if (e.is_zero()) return std::nullopt;
  std::optional<std::int64_t> deg;
  if (e.y != 0) deg = 0;
  for (const auto& [idx, c] : e.z) {
    if (deg && *deg != idx.degree()) return std::nullopt;
    deg = idx.degree();
  }
  return deg;
}

TriangularSplit triangular_split(const LieElement& e) {
  if (e.has_y()) throw std::domain_error("triangular_split: element has a Y component");
  TriangularSplit split;
  for (const auto& [idx, c] : e.z) {
    auto d = idx.degree();
    auto& part = d > 0 ? split.plus : (d == 0 ? split.zero : split.minus);
    part.z.add(idx, c);
  }
  return split;
}

LieElement GeneratorDecomposition::evaluate(const BracketRules& rules) const {
  LieElement out;
  out.z = generator_bracket(left, right, rules);
  out += correction;
  return out;
}

std::string GeneratorDecomposition::formal() const {
  auto z = [](ZIndex i) { return "Z[" + std::to_string(i.n) + "," + std::to_string(i.m) + "]"; };
  std::string out = "[" + z(left) + "," + z(right) + "]";
  const std::int64_t n = left.n, m = right.m;
  // Printed term by term so the n = m case shows all four summands.
  if (theta(n - m)) out += " + " + z(make_index(n - m, 0));
  if (theta(m - n)) out += " + " + z(make_index(0, m - n));
  if (n == m) out += " - " + z({0, 0});
  return out;
}

GeneratorDecomposition decompose_generator(std::uint32_t n, std::uint32_t m) {
  GeneratorDecomposition d{{n, 0}, {0, m}, {}};
  const std::int64_t dn = n, dm = m;
  if (theta(dn - dm)) d.correction.z.add(make_index(dn - dm, 0), 1);
  if (theta(dm - dn)) d.correction.z.add(make_index(0, dm - dn), 1);
  if (n == m) d.correction.z.add({0, 0}, -1);
  return d;
}

std::vector<ZIndex> generator_window(std::uint32_t bound) {
  std::vector<ZIndex> out;
  for (std::uint32_t n = 0; n <= bound; ++n)
    for (std::uint32_t m = 0; m <= bound; ++m) out.push_back({n, m});
  return out;
}

std::vector<LieElement> centralizer_basis(const std::vector<LieElement>& tests,
                                          const std::vector<ZIndex>& ansatz,
                                          const BracketRules& rules) {
  // One equation per (test element, output generator); one unknown per
  // ansatz generator.
  std::map<std::pair<std::size_t, ZIndex>, SparseRow> equations;
  for (std::size_t col = 0; col < ansatz.size(); ++col) {
    LieElement x = LieElement::generator(ansatz[col].n, ansatz[col].m);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      LieElement r = bracket(x, tests[t], rules);
      for (const auto& [idx, c] : r.z) equations[{t, idx}].add(col, c);
      if (r.y != 0) equations[{t, ZIndex{UINT32_MAX, UINT32_MAX}}].add(col, r.y);
    }
  }
  ExactMatrix system(0, ansatz.size());
  for (auto& [key, row] : equations) system.push_row(std::move(row));
  std::vector<LieElement> basis;
  for (const auto& v : kernel_basis(system)) {
    LieElement e;
    for (std::size_t col = 0; col < v.size(); ++col) e.z.add(ansatz[col], v[col]);
    basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace ladder
