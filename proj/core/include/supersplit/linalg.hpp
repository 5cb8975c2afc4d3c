#pragma once

#include <optional>
#include <vector>

#include "supersplit/rational.hpp"

namespace supersplit::linalg {

using Vec = std::vector<Rational>;

/// Dense rational matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  Matrix transposed() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Vec mul(const Matrix& a, const Vec& x);

/// Column scan order used for pivot selection and complement extension.
enum class PivotRule { FirstNonzero, LastNonzero };

std::vector<int> column_order(int cols, PivotRule rule);

struct RrefResult {
  Matrix r;
  std::vector<int> pivot_cols;  // in elimination order
  int rank = 0;
};

/// Reduced row echelon form; pivots are the first usable row in the column
/// scan order prescribed by the rule. Exact over the rationals.
RrefResult rref(Matrix m, PivotRule rule);

/// Basis of the null space, one vector per free column, in scan order.
std::vector<Vec> kernel_basis(const Matrix& m, PivotRule rule);

/// Any solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b, PivotRule rule);

/// Inverse of a square invertible matrix. Throws Error::Internal if singular.
Matrix inverse(const Matrix& m);

/// Greedy extension: appends those candidate vectors that are independent of
/// the span of `have` (and of previously appended ones); returns the indices
/// of the appended candidates.
std::vector<int> extend_basis(std::vector<Vec>& have, const std::vector<Vec>& candidates);

}  // namespace supersplit::linalg
