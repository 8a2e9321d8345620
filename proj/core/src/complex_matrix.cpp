// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "polsar/errors.hpp"
#include "polsar/tolerances.hpp"

namespace polsar {

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
  if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(int dim, std::span<const cx> row_major)
    : ComplexMatrix(dim) {
  if (row_major.size() != data_.size()) {
    throw DimensionMismatch("element count does not match dimension");
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cx>> rows) {
  const int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionMismatch("ragged row in matrix literal");
    }
    int j = 0;
    for (cx v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cx ComplexMatrix::trace() const {
  cx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::norm1() const {
  double best = 0.0;
  for (int j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (int i = 0; i < dim_; ++i) col += std::abs((*this)(i, j));
    best = std::max(best, col);
  }
  return best;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const cx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const cx& v : data_) best = std::max(best, std::abs(v));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matmul sizes differ");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cx aik = a(i, k);
      if (aik == cx{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

LuDecomposition LuDecomposition::compute(const ComplexMatrix& m) {
  const int n = m.dim();
  LuDecomposition lu;
  lu.factors = m;
  lu.pivots.resize(static_cast<std::size_t>(n));
  lu.min_abs_pivot = std::numeric_limits<double>::infinity();
  lu.max_abs_pivot = 0.0;

  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double pivot_mag = std::abs(lu.factors(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(lu.factors(r, col));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    lu.pivots[static_cast<std::size_t>(col)] = pivot_row;
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j)
        std::swap(lu.factors(col, j), lu.factors(pivot_row, j));
      lu.permutation_sign = -lu.permutation_sign;
    }
    lu.min_abs_pivot = std::min(lu.min_abs_pivot, pivot_mag);
    lu.max_abs_pivot = std::max(lu.max_abs_pivot, pivot_mag);
    if (pivot_mag == 0.0) continue;  // singular; leave the zero column

    const cx pivot = lu.factors(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cx mult = lu.factors(r, col) / pivot;
      lu.factors(r, col) = mult;
      if (mult == cx{}) continue;
      for (int j = col + 1; j < n; ++j) {
        lu.factors(r, j) -= mult * lu.factors(col, j);
      }
    }
  }
  return lu;
}

bool LuDecomposition::singular(double scale_hint) const {
  return min_abs_pivot == 0.0 ||
         min_abs_pivot < tol::kPivotRatioFloor * std::max(max_abs_pivot, scale_hint);
}

cx LuDecomposition::det() const {
  cx d = static_cast<double>(permutation_sign);
  for (int i = 0; i < factors.dim(); ++i) d *= factors(i, i);
  return d;
}

ComplexMatrix LuDecomposition::inverse() const {
  if (singular()) throw SingularMatrix("matrix is singular to working precision");
  const int n = factors.dim();
  ComplexMatrix out = ComplexMatrix::identity(n);
  // Solve A X = I column by column: apply P, forward- then back-substitute.
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      const int p = pivots[static_cast<std::size_t>(i)];
      if (p != i) std::swap(out(i, c), out(p, c));
      cx sum = out(i, c);
      for (int j = 0; j < i; ++j) sum -= factors(i, j) * out(j, c);
      out(i, c) = sum;
    }
    for (int i = n - 1; i >= 0; --i) {
      cx sum = out(i, c);
      for (int j = i + 1; j < n; ++j) sum -= factors(i, j) * out(j, c);
      out(i, c) = sum / factors(i, i);
    }
  }
  return out;
}

cx det(const ComplexMatrix& m) { return LuDecomposition::compute(m).det(); }

ComplexMatrix inverse(const ComplexMatrix& m) {
  const auto lu = LuDecomposition::compute(m);
  ComplexMatrix inv = lu.inverse();
  const double rcond = 1.0 / (m.norm1() * inv.norm1());
  if (!(rcond >= tol::kRcondFloor)) {
    throw SingularMatrix("reciprocal condition number below floor");
  }
  return inv;
}

}  // namespace polsar
