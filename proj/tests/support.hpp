// Seeded generators and small independent oracles shared by the unit tests.
#pragma once

#include "ladder/extension.hpp"
#include "ladder/gl.hpp"
#include "ladder/lie.hpp"
#include "ladder/module.hpp"
#include "ladder/text.hpp"

#include <ostream>

#include <random>
#include <vector>

namespace ladder {

// Readable gtest failure output.
inline void PrintTo(const LieElement& e, std::ostream* os) { *os << to_text(e); }
inline void PrintTo(const GlElement& g, std::ostream* os) { *os << to_text(g); }
inline void PrintTo(const CElement& c, std::ostream* os) { *os << to_text(c); }
inline void PrintTo(const LadderPoly& p, std::ostream* os) { *os << to_text(p); }

}  // namespace ladder

namespace ladder::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
  std::uint32_t index(std::uint32_t hi) { return static_cast<std::uint32_t>(integer(0, hi)); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar scalar() {
    std::int64_t num = 0;
    while (num == 0) num = integer(-9, 9);
    return ratio(num, integer(1, 6));
  }

  LieElement lie(std::uint32_t bound, std::size_t max_terms = 4, bool with_y = true) {
    LieElement e;
    const auto terms = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) e.z.add({index(bound), index(bound)}, scalar());
    if (with_y && integer(0, 3) == 0) e.y = scalar();
    return e;
  }

  GlElement gl(std::uint32_t bound, std::size_t max_terms = 4) {
    GlElement g;
    const auto terms = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) g.e.add({index(bound), index(bound)}, scalar());
    return g;
  }

  CElement c(std::int64_t bound, std::size_t max_terms = 3) {
    CElement x;
    const auto terms = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) x.terms.add(integer(-bound, bound), scalar());
    return x;
  }

  Monomial monomial(std::uint32_t bound, std::size_t max_factors = 3) {
    std::vector<std::uint32_t> f(static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_factors))));
    for (auto& k : f) k = index(bound);
    return Monomial(f);
  }

  LadderPoly poly(std::uint32_t bound, std::size_t max_terms = 3) {
    LadderPoly p;
    const auto terms = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) p.add(monomial(bound), scalar());
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Shift-operator model: Z_{n,m} sends the coordinate vector of t_k to that
/// of t_{k-m+n} when k >= m, Y scales t_k by k. Vectors are truncated at
/// `size` coordinates; inputs are chosen so nothing is lost.
inline std::vector<Scalar> apply_model(const LieElement& e, const std::vector<Scalar>& v, std::size_t size) {
  std::vector<Scalar> out(size);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (const auto& [idx, c] : e.z)
      if (k >= idx.m) {
        const std::size_t target = k - idx.m + idx.n;
        if (target < size) out[target] += c * v[k];
      }
    out[k] += e.y * static_cast<long>(k) * v[k];
  }
  return out;
}

/// Dense N x N matrix for a gl element; entries outside the box are dropped.
inline std::vector<std::vector<Scalar>> dense(const GlElement& g, std::size_t n) {
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (const auto& [idx, c] : g.e)
    if (idx.i < n && idx.j < n) m[idx.i][idx.j] += c;
  return m;
}

inline std::vector<std::vector<Scalar>> commutator(const std::vector<std::vector<Scalar>>& a,
                                                   const std::vector<std::vector<Scalar>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return out;
}

/// Plain dense Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Scalar>> to_dense(const ExactMatrix& m) {
  std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out[r][c] = v;
  return out;
}

}  // namespace ladder::testing
