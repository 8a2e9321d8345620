// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace polsar {

using cx = std::complex<double>;

/// Dense square complex matrix. General (not necessarily Hermitian) values
/// show up as products of Hermitian matrices and as the possibly indefinite
/// differences inside the chi-square statistic.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::span<const cx> row_major);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cx>> rows);

  int dim() const { return dim_; }

  cx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  cx operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

  std::span<const cx> data() const { return data_; }
  std::span<cx> data() { return data_; }

  ComplexMatrix adjoint() const;
  cx trace() const;
  double norm1() const;       // max absolute column sum
  double frobenius() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cx scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cx s, ComplexMatrix a) { return a *= s; }

 private:
  int dim_ = 0;
  std::vector<cx> data_;
};

/// Standard matrix product; throws DimensionMismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// LU factorization with partial pivoting.
struct LuDecomposition {
  ComplexMatrix factors;      // unit-lower L below the diagonal, U on and above
  std::vector<int> pivots;
  int permutation_sign = 1;
  double min_abs_pivot = 0.0;
  double max_abs_pivot = 0.0;

  static LuDecomposition compute(const ComplexMatrix& m);

  /// scale_hint anchors the pivot test for matrices that may be legitimately
  /// tiny relative to their operands (near-cancelling differences).
  bool singular(double scale_hint = 0.0) const;
  cx det() const;
  ComplexMatrix inverse() const;  // throws SingularMatrix
};

cx det(const ComplexMatrix& m);

/// Inverse via pivoted LU; rejects matrices whose estimated reciprocal
/// condition number falls below tol::kRcondFloor.
ComplexMatrix inverse(const ComplexMatrix& m);

}  // namespace polsar
