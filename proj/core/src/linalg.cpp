#include "supersplit/linalg.hpp"

#include <algorithm>

#include "supersplit/error.hpp"

namespace supersplit::linalg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(Error::Kind::Internal, "matrix product shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Vec mul(const Matrix& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    fail(Error::Kind::Internal, "matrix-vector shape mismatch");
  Vec r(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero() && !x[j].is_zero()) r[i] += a.at(i, j) * x[j];
  return r;
}

std::vector<int> column_order(int cols, PivotRule rule) {
  std::vector<int> order(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c)
    order[c] = rule == PivotRule::FirstNonzero ? c : cols - 1 - c;
  return order;
}

RrefResult rref(Matrix m, PivotRule rule) {
  RrefResult out;
  int row = 0;
  for (int col : column_order(m.cols(), rule)) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Rational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < m.cols(); ++c)
        if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
    }
    out.pivot_cols.push_back(col);
    if (++row == m.rows()) break;
  }
  out.rank = row;
  out.r = std::move(m);
  return out;
}

std::vector<Vec> kernel_basis(const Matrix& m, PivotRule rule) {
  RrefResult rr = rref(m, rule);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> out;
  for (int free_col : column_order(m.cols(), rule)) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free_col)] = Rational(1);
    for (std::size_t prow = 0; prow < rr.pivot_cols.size(); ++prow) {
      int pc = rr.pivot_cols[prow];
      v[static_cast<std::size_t>(pc)] = -rr.r.at(static_cast<int>(prow), free_col);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b, PivotRule rule) {
  if (static_cast<int>(b.size()) != m.rows())
    fail(Error::Kind::Internal, "solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[static_cast<std::size_t>(r)];
  }
  // Eliminate over the coefficient columns only.
  int row = 0;
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  for (int col : column_order(m.cols(), rule)) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!aug.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c <= m.cols(); ++c) std::swap(aug.at(pivot, c), aug.at(row, c));
    Rational inv = Rational(1) / aug.at(row, col);
    for (int c = 0; c <= m.cols(); ++c)
      if (!aug.at(row, c).is_zero()) aug.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Rational f = aug.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c <= m.cols(); ++c)
        if (!aug.at(row, c).is_zero()) aug.at(r, c) -= f * aug.at(row, c);
    }
    pivots.emplace_back(row, col);
    if (++row == m.rows()) break;
  }
  for (int r = row; r < m.rows(); ++r)
    if (!aug.at(r, m.cols()).is_zero()) return std::nullopt;
  Vec x(static_cast<std::size_t>(m.cols()));
  for (auto [r, c] : pivots) x[static_cast<std::size_t>(c)] = aug.at(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Error::Kind::Internal, "inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Rational(1);
  }
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (!aug.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(Error::Kind::Internal, "singular matrix");
    if (pivot != row)
      for (int c = 0; c < 2 * n; ++c) std::swap(aug.at(pivot, c), aug.at(row, c));
    Rational inv = Rational(1) / aug.at(row, col);
    for (int c = 0; c < 2 * n; ++c)
      if (!aug.at(row, c).is_zero()) aug.at(row, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      Rational f = aug.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < 2 * n; ++c)
        if (!aug.at(row, c).is_zero()) aug.at(r, c) -= f * aug.at(row, c);
    }
    ++row;
  }
  Matrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

std::vector<int> extend_basis(std::vector<Vec>& have, const std::vector<Vec>& candidates) {
  std::vector<int> taken;
  if (candidates.empty()) return taken;
  const int dim = static_cast<int>(candidates.front().size());
  // Incremental elimination: keep `have` in echelon form as we go.
  Matrix m(static_cast<int>(have.size()), dim);
  for (std::size_t r = 0; r < have.size(); ++r)
    for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = have[r][static_cast<std::size_t>(c)];
  RrefResult rr = rref(std::move(m), PivotRule::FirstNonzero);
  std::vector<Vec> rows;
  for (int r = 0; r < rr.rank; ++r) {
    Vec v(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) v[static_cast<std::size_t>(c)] = rr.r.at(r, c);
    rows.push_back(std::move(v));
  }
  auto reduce = [&](Vec v) {
    for (const Vec& row : rows) {
      int lead = -1;
      for (int c = 0; c < dim; ++c)
        if (!row[static_cast<std::size_t>(c)].is_zero()) {
          lead = c;
          break;
        }
      if (lead < 0) continue;
      Rational f = v[static_cast<std::size_t>(lead)] / row[static_cast<std::size_t>(lead)];
      if (f.is_zero()) continue;
      for (int c = 0; c < dim; ++c)
        v[static_cast<std::size_t>(c)] -= f * row[static_cast<std::size_t>(c)];
    }
    return v;
  };
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    Vec red = reduce(candidates[k]);
    bool zero = true;
    for (const auto& x : red)
      if (!x.is_zero()) {
        zero = false;
        break;
      }
    if (zero) continue;
    rows.push_back(red);
    have.push_back(candidates[k]);
    taken.push_back(static_cast<int>(k));
  }
  return taken;
}

}  // namespace supersplit::linalg
