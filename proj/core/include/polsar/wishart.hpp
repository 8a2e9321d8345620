// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "polsar/hermitian.hpp"
#include "polsar/real_matrix.hpp"
#include "polsar/rng.hpp"

namespace polsar {

/// Scaled complex Wishart law W(Sigma, L): the distribution of the L-look
/// averaged covariance Z = (1/L) sum_i y_i y_i^* of zero-mean circular
/// complex Gaussian scattering vectors, with E(Z) = Sigma.
struct WishartModel {
  WishartModel(HermitianMatrix sigma_in, double looks_in);

  HermitianMatrix sigma;
  double looks;
};

/// Maximum-likelihood covariance: the sample mean of N pixel matrices,
/// together with the sample size and the (known) number of looks.
struct CovarianceEstimate {
  HermitianMatrix sigma_hat;
  int sample_size = 0;
  double looks = 0.0;
};

/// log of the Wishart density at a positive definite observation z:
///   qL log L + (L-q) log|Z| - L log|Sigma| - log Gamma_q(L) - L tr(Sigma^-1 Z)
/// Throws DomainError when either determinant is not positive.
double log_density(const WishartModel& model, const HermitianMatrix& z);

/// ML estimator: arithmetic mean of the pixels. Throws EmptySample.
CovarianceEstimate estimate_covariance(std::span<const HermitianMatrix> pixels,
                                       double looks);

/// 2q x 2q real embedding of a circular complex covariance:
///   (1/2) [ Re(S)  -Im(S) ; Im(S)  Re(S) ]
/// Symmetric positive definite whenever S is Hermitian positive definite.
RealMatrix embed_real(const HermitianMatrix& sigma);

/// Draws y ~ CN_q(0, Sigma) through the real embedding: x = L_real g with
/// g ~ N(0, I_2q); the first q components of x are the real parts of y, the
/// last q the imaginary parts. The Cholesky factor is precomputed once.
class GaussianPixelSampler {
 public:
  explicit GaussianPixelSampler(const HermitianMatrix& sigma);

  int dim() const { return dim_; }

  /// One draw; out must have size q.
  void sample(Stream& stream, std::span<cx> out) const;
  std::vector<cx> sample(Stream& stream) const;

 private:
  int dim_ = 0;
  RealMatrix factor_;  // lower Cholesky of embed_real(sigma)
};

/// Draws L-look covariance pixels Z = (1/L) sum y_i y_i^*. Simulation
/// requires an integer number of looks (NonIntegerLooks otherwise).
class MultilookSampler {
 public:
  MultilookSampler(const HermitianMatrix& sigma, double looks);

  int dim() const { return pixel_sampler_.dim(); }
  int looks() const { return looks_; }

  HermitianMatrix sample(Stream& stream) const;

  /// Writes the q*q row-major pixel directly (raster fast path).
  void sample_into(Stream& stream, std::span<cx> out_row_major) const;

 private:
  GaussianPixelSampler pixel_sampler_;
  int looks_ = 0;
};

}  // namespace polsar
