#include "ladder/gl.hpp"

#include "ladder/matrix.hpp"

#include <map>
#include <stdexcept>

namespace ladder {

GlElement bracket_ee(const GlElement& a, const GlElement& b) {
  GlElement out;
  for (const auto& [x, cx] : a.e)
    for (const auto& [y, cy] : b.e) {
      Scalar c = cx * cy;
      if (x.j == y.i) out.e.add({x.i, y.j}, c);
      if (y.j == x.i) out.e.add({y.i, x.j}, -c);
    }
  return out;
}

LieElement embed_to_z(const GlElement& g) {
  LieElement out;
  for (const auto& [idx, c] : g.e) {
    out.z.add({idx.i, idx.j}, c);
    out.z.add({idx.i + 1, idx.j + 1}, -c);
  }
  return out;
}

std::optional<GlElement> express_in_e(const LieElement& e) {
  if (e.has_y()) throw std::domain_error("express_in_e: element has a Y component");
  // Within degree class d the generators form a chain Z_{base+k}, where
  // base is (d,0) or (0,-d); write c_k for the coefficient of the k-th link.
  std::map<std::int64_t, std::map<std::uint32_t, Scalar>> classes;
  for (const auto& [idx, c] : e.z) classes[idx.degree()][std::min(idx.n, idx.m)] = c;
  GlElement out;
  for (const auto& [d, chain] : classes) {
    const std::uint32_t top = chain.rbegin()->first;
    Scalar partial = 0;
    auto it = chain.begin();
    for (std::uint32_t k = chain.begin()->first; k <= top; ++k) {
      if (it != chain.end() && it->first == k) partial += (it++)->second;
      if (k == top) break;
      std::uint32_t i = d >= 0 ? static_cast<std::uint32_t>(d) + k : k;
      std::uint32_t j = d >= 0 ? k : static_cast<std::uint32_t>(-d) + k;
      out.e.add({i, j}, partial);
    }
    if (partial != 0) return std::nullopt;
  }
  return out;
}

Scalar trace_functional(const GlElement& g) {
  Scalar total = 0;
  for (const auto& [idx, c] : g.e)
    if (idx.i == idx.j) total += c;
  return total;
}

std::vector<EIndex> e_window(std::uint32_t bound) {
  std::vector<EIndex> out;
  for (std::uint32_t i = 0; i <= bound; ++i)
    for (std::uint32_t j = 0; j <= bound; ++j) out.push_back({i, j});
  return out;
}

std::vector<GlElement> gl_centralizer_basis(const std::vector<GlElement>& tests, const std::vector<EIndex>& ansatz) {
  std::map<std::pair<std::size_t, EIndex>, SparseRow> equations;
  for (std::size_t col = 0; col < ansatz.size(); ++col) {
    GlElement x = GlElement::unit(ansatz[col].i, ansatz[col].j);
    for (std::size_t t = 0; t < tests.size(); ++t)
      for (const auto& [idx, c] : bracket_ee(x, tests[t]).e) equations[{t, idx}].add(col, c);
  }
  ExactMatrix system(0, ansatz.size());
  for (auto& [key, row] : equations) system.push_row(std::move(row));
  std::vector<GlElement> basis;
  for (const auto& v : kernel_basis(system)) {
    GlElement g;
    for (std::size_t col = 0; col < v.size(); ++col) g.e.add(ansatz[col], v[col]);
    basis.push_back(std::move(g));
  }
  return basis;
}

}  // namespace ladder
