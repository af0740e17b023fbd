#pragma once

#include "ladder/scalar.hpp"
#include "ladder/sparse.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace ladder {

using SparseRow = SparseVector<std::size_t>;

/// Sparse rational matrix stored by rows. No stored zeros.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void add(std::size_t row, std::size_t col, const Scalar& value);
  void set(std::size_t row, std::size_t col, const Scalar& value);
  Scalar at(std::size_t row, std::size_t col) const;
  const SparseRow& row(std::size_t r) const { return rows_.at(r); }

  /// Appends a row; returns its index. Column indices must be < cols().
  std::size_t push_row(SparseRow row);

  bool is_zero() const;
  std::size_t nonzeros() const;
  ExactMatrix transpose() const;
  std::vector<Scalar> apply(std::span<const Scalar> x) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  static ExactMatrix from_dense(const std::vector<std::vector<Scalar>>& dense);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x = 0} in reduced form: one vector per free column f,
/// with x_f = 1 and zeros on every other free column.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

struct Solution {
  std::vector<Scalar> x;
};

/// A row combination y with yᵀm = 0 and y·rhs = 1, proving m x = rhs has no
/// solution.
struct Infeasibility {
  std::vector<Scalar> certificate;
};

using SolveResult = std::variant<Solution, Infeasibility>;

SolveResult solve_or_refute(const ExactMatrix& m, std::span<const Scalar> rhs);

/// Checks a certificate independently of how it was produced.
bool certifies_infeasible(const ExactMatrix& m, std::span<const Scalar> rhs,
                          std::span<const Scalar> certificate);

}  // namespace ladder
