// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "polsar/complex_matrix.hpp"

namespace polsar {

/// q x q complex Hermitian matrix with normalized storage: after
/// construction entries(i,j) == conj(entries(j,i)) holds exactly and the
/// diagonal is real and non-negative. Holds covariance parameters, pixel
/// observations and their estimates.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int dim);  // zero matrix

  static HermitianMatrix identity(int dim);
  static HermitianMatrix diagonal(std::span<const double> values);

  /// Normalizes a full matrix: off-diagonal pairs are averaged as
  /// (a_ij + conj(a_ji))/2, diagonals keep their real part. Rejects
  /// non-finite values, asymmetry beyond tol::kHermitianCheck (relative to
  /// the largest magnitude) and negative diagonals.
  static HermitianMatrix from_full(const ComplexMatrix& m);

  /// Builds from the upper triangle (row-major: (0,0), (0,1), ..., (1,1), ...);
  /// the strict lower triangle is filled with conjugates. Diagonal entries
  /// must have zero imaginary part.
  static HermitianMatrix from_upper(int dim, std::span<const cx> upper);

  int dim() const { return dim_; }

  cx operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }

  std::span<const cx> data() const { return data_; }

  double trace() const;
  ComplexMatrix to_complex() const;

  /// Entrywise linear combination a*A + b*B of Hermitian matrices with real
  /// coefficients (result is Hermitian by construction).
  static HermitianMatrix linear_combination(double a, const HermitianMatrix& A,
                                            double b, const HermitianMatrix& B);

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return linear_combination(1.0, a, 1.0, b);
  }

  double max_abs() const;
  double frobenius() const;

 private:
  static HermitianMatrix trusted(int dim, std::vector<cx> data);

  int dim_ = 0;
  std::vector<cx> data_;

  friend class CovarianceAccumulator;
  friend HermitianMatrix inverse(const HermitianMatrix& m);
};

/// Accumulates a running mean of Hermitian pixels; used by the ML covariance
/// estimator and the raster code. The result is exactly Hermitian.
class CovarianceAccumulator {
 public:
  explicit CovarianceAccumulator(int dim);
  void add(std::span<const cx> pixel_row_major);
  void add(const HermitianMatrix& pixel);
  int count() const { return count_; }
  HermitianMatrix mean() const;  // throws EmptySample when count() == 0

 private:
  int dim_ = 0;
  int count_ = 0;
  std::vector<cx> sum_;
};

cx trace(const HermitianMatrix& m);

/// Determinant through pivoted LU. For Hermitian input the imaginary part is
/// zero up to round-off and is returned as computed; callers take the real
/// part or the absolute value as their formula requires.
cx det(const HermitianMatrix& m);

/// Lower-triangular Cholesky factor L with L L^* = m.
/// Throws NotPositiveDefinite when a pivot is not strictly positive; callers
/// that must handle indefinite matrices fall back to the LU path.
ComplexMatrix cholesky_hpd(const HermitianMatrix& m);

/// Determinant of a Hermitian positive definite matrix via Cholesky:
/// (prod diag L)^2, a real positive number.
double det_hpd(const HermitianMatrix& m);

/// log det of an HPD matrix via Cholesky (2 * sum log diag L).
double logdet_hpd(const HermitianMatrix& m);

/// Inverse of a Hermitian matrix: Cholesky when positive definite, pivoted LU
/// otherwise. Enforces the reciprocal-condition floor and re-Hermitianizes the
/// result as (A + A^*)/2.
HermitianMatrix inverse(const HermitianMatrix& m);

}  // namespace polsar
