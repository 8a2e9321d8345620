// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace polsar {

/// Dense square real matrix. Used for the 2q-dimensional real embedding of a
/// complex covariance and for amplitude-domain Gaussian covariances.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(int dim);

  static RealMatrix identity(int dim);

  int dim() const { return dim_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

  std::span<const double> data() const { return data_; }

  bool symmetric(double rel_tol) const;
  double max_abs() const;

  RealMatrix& operator+=(const RealMatrix& other);
  RealMatrix& operator*=(double s);
  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
  friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }

  void matvec(std::span<const double> x, std::span<double> out) const;

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

/// Lower Cholesky factor of a symmetric positive definite matrix; throws
/// NotPositiveDefinite otherwise.
RealMatrix cholesky_spd(const RealMatrix& m);

double logdet_spd(const RealMatrix& m);

/// det via pivoted LU (works for indefinite matrices; used by tests).
double det_lu(const RealMatrix& m);

/// Solves m x = b for SPD m through its Cholesky factor.
std::vector<double> solve_spd(const RealMatrix& m, std::span<const double> b);

}  // namespace polsar
