#include "ladder/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace ladder {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

void ExactMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (col >= cols_) throw std::out_of_range("ExactMatrix column out of range");
  rows_.at(row).add(col, value);
}

void ExactMatrix::set(std::size_t row, std::size_t col, const Scalar& value) {
  add(row, col, value - at(row, col));
}

Scalar ExactMatrix::at(std::size_t row, std::size_t col) const { return rows_.at(row).coeff(col); }

std::size_t ExactMatrix::push_row(SparseRow row) {
  if (!row.empty() && std::prev(row.end())->first >= cols_)
    throw std::out_of_range("ExactMatrix row has a column out of range");
  rows_.push_back(std::move(row));
  return rows_.size() - 1;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.empty(); });
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += r.size();
  return count;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].add(r, v);
  return t;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: dimension mismatch");
  std::vector<Scalar> y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) y[r] += v * x[c];
  return y;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("ExactMatrix product: dimension mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, v] : a.rows_[r]) out.rows_[r].add_scaled(b.rows_[k], v);
  return out;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Scalar>>& dense) {
  std::size_t cols = dense.empty() ? 0 : dense.front().size();
  ExactMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.add(r, c, dense[r][c]);
  }
  return m;
}

namespace {

// Row echelon form built one row at a time. Every stored pivot row has
// leading coefficient 1 at its pivot column. When tracking is on, each row
// carries the combination of input rows that produced it.
class Echelon {
 public:
  explicit Echelon(bool track) : track_(track) {}

  struct Reduced {
    SparseRow row;
    SparseRow origin;
  };

  // Reduces `row` against the current pivots. If it survives, it becomes a
  // new pivot and nullopt is returned; otherwise the zero-or-stuck remainder
  // is returned (stuck means its leading column is >= stop_col).
  std::optional<Reduced> insert(SparseRow row, SparseRow origin, std::size_t stop_col) {
    while (!row.empty()) {
      auto lead = row.begin();
      std::size_t col = lead->first;
      if (col >= stop_col) return Reduced{std::move(row), std::move(origin)};
      auto piv = pivots_.find(col);
      if (piv == pivots_.end()) {
        Scalar inv = 1 / lead->second;
        row *= inv;
        if (track_) origin *= inv;
        pivots_.emplace(col, Reduced{std::move(row), std::move(origin)});
        return std::nullopt;
      }
      Scalar factor = -lead->second;
      row.add_scaled(piv->second.row, factor);
      if (track_) origin.add_scaled(piv->second.origin, factor);
    }
    return Reduced{std::move(row), std::move(origin)};
  }

  // Back-substitution to reduced row echelon form.
  void reduce_fully() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      std::size_t col = it->first;
      for (auto& [other_col, other] : pivots_) {
        if (other_col >= col) break;
        Scalar c = other.row.coeff(col);
        if (c == 0) continue;
        other.row.add_scaled(it->second.row, -c);
        if (track_) other.origin.add_scaled(it->second.origin, -c);
      }
    }
  }

  const std::map<std::size_t, Reduced>& pivots() const { return pivots_; }

 private:
  bool track_;
  std::map<std::size_t, Reduced> pivots_;
};

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  Echelon ech(false);
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r), {}, m.cols());
  return ech.pivots().size();
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  Echelon ech(false);
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r), {}, m.cols());
  ech.reduce_fully();
  const auto& pivots = ech.pivots();
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (pivots.count(free)) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (const auto& [col, piv] : pivots) v[col] = -piv.row.coeff(free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve_or_refute(const ExactMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_or_refute: rhs has wrong length");
  const std::size_t aug = m.cols();
  Echelon ech(true);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    row.add(aug, rhs[r]);
    auto stuck = ech.insert(std::move(row), SparseRow::unit(r), aug);
    if (stuck && !stuck->row.empty()) {
      // 0 = c with c != 0: the tracked combination is the certificate.
      Scalar scale = 1 / stuck->row.coeff(aug);
      std::vector<Scalar> y(m.rows());
      for (const auto& [idx, v] : stuck->origin) y[idx] = v * scale;
      return Infeasibility{std::move(y)};
    }
  }
  ech.reduce_fully();
  std::vector<Scalar> x(m.cols());
  for (const auto& [col, piv] : ech.pivots()) x[col] = piv.row.coeff(aug);
  return Solution{std::move(x)};
}

bool certifies_infeasible(const ExactMatrix& m, std::span<const Scalar> rhs,
                          std::span<const Scalar> certificate) {
  if (certificate.size() != m.rows() || rhs.size() != m.rows()) return false;
  std::vector<Scalar> combo(m.cols());
  Scalar value = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (certificate[r] == 0) continue;
    for (const auto& [c, v] : m.row(r)) combo[c] += certificate[r] * v;
    value += certificate[r] * rhs[r];
  }
  return value != 0 && std::all_of(combo.begin(), combo.end(), [](const Scalar& s) { return s == 0; });
}

}  // namespace ladder
