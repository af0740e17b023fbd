#pragma once

#include "ladder/lie.hpp"
#include "ladder/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ladder {

/// Finite-dimensional Lie algebra given by structure constants on a labeled
/// basis. Only [x_i, x_j] for i < j is stored; antisymmetry is implied.
class FiniteLieAlgebra {
 public:
  using Structure = std::map<std::pair<std::size_t, std::size_t>, SparseVector<std::size_t>>;

  /// Throws std::invalid_argument if a bracket is keyed with i >= j, refers
  /// to an index out of range, or the Jacobi identity fails.
  FiniteLieAlgebra(std::vector<std::string> labels, Structure structure);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Structure& structure() const { return structure_; }

  /// [x_i, x_j] for any i, j.
  SparseVector<std::size_t> bracket(std::size_t i, std::size_t j) const;
  SparseVector<std::size_t> bracket(const SparseVector<std::size_t>& a, const SparseVector<std::size_t>& b) const;

 private:
  std::vector<std::string> labels_;
  Structure structure_;
};

/// gl(n) on E_{i,j}, 0 <= i,j < n, basis index i*n + j.
FiniteLieAlgebra truncate_gl(std::uint32_t n);

/// Abelian algebra of dimension w (a window of the quotient C).
FiniteLieAlgebra abelian_algebra(std::uint32_t w);

/// Increasing multi-indices of size k from {0..dim-1}, lexicographic.
std::vector<std::vector<std::size_t>> exterior_basis(std::size_t dim, std::size_t k);

/// Matrix of d: Λ^k L* -> Λ^{k+1} L* (trivial coefficients) in the
/// exterior bases. (dφ)(x_0..x_k) = Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], x_0..x̂_i..x̂_j..x_k).
ExactMatrix ce_differential(const FiniteLieAlgebra& algebra, std::size_t k);

struct BettiTable {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> cochain_dims;
  /// ranks[k] = rank of d: C^k -> C^{k+1}.
  std::vector<std::size_t> ranks;

  long euler_from_cochains() const;
  long euler_from_betti() const;
};

BettiTable betti_numbers(const FiniteLieAlgebra& algebra);

/// Coefficients of Π_{i=1}^{n} (1 + t^{2i-1}).
std::vector<std::size_t> exterior_poincare(std::uint32_t n);

struct StabilityReport {
  bool applicable = false;  ///< false when p >= n
  bool passed = false;
  std::size_t betti_n = 0;
  std::size_t betti_n_minus_1 = 0;
};

/// b_p(gl(n)) == b_p(gl(n-1)) for p < n. Throws std::invalid_argument for n < 2.
StabilityReport stability_check(std::uint32_t n, std::uint32_t p);

struct H1Report {
  std::size_t dimension = 0;
  std::uint32_t bound = 0;
  bool with_y = false;
  /// Degree classes carrying a free functional value.
  std::vector<std::int64_t> free_degrees;
};

/// Dimension of {φ on span(Z_{n,m} : n,m <= bound) : φ([x,y]) = 0} where
/// x, y range over generator pairs in the window whose bracket stays inside
/// the window, plus φ([Y, Z]) = 0 when with_y. φ(Y) itself is not an
/// unknown.
H1Report h1_degree_functional(std::uint32_t bound, bool with_y, const BracketRules& rules = {});

}  // namespace ladder
