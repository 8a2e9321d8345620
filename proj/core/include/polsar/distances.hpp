// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "polsar/real_matrix.hpp"
#include "polsar/wishart.hpp"

namespace polsar {

enum class StatisticKind {
  KullbackLeibler,
  Bhattacharyya,
  Hellinger,
  Renyi,
  ChiSquare,
  GaussianBhattacharyya,
};

inline constexpr StatisticKind kAllKinds[] = {
    StatisticKind::KullbackLeibler,   StatisticKind::Bhattacharyya,
    StatisticKind::Hellinger,         StatisticKind::Renyi,
    StatisticKind::ChiSquare,         StatisticKind::GaussianBhattacharyya,
};

inline constexpr StatisticKind kWishartKinds[] = {
    StatisticKind::KullbackLeibler, StatisticKind::Bhattacharyya,
    StatisticKind::Hellinger,       StatisticKind::Renyi,
    StatisticKind::ChiSquare,
};

const char* to_string(StatisticKind kind);
std::optional<StatisticKind> parse_statistic(std::string_view token);
bool is_wishart(StatisticKind kind);

/// Degrees of freedom of the limiting chi-square: the parameter count of the
/// model, q^2 for the complex Wishart with known L and q(q+3)/2 for the
/// q-variate Gaussian.
int dof_for(StatisticKind kind, int q);

/// Default Renyi order.
inline constexpr double kDefaultRenyiBeta = 0.9;

struct TestResult {
  StatisticKind kind = StatisticKind::KullbackLeibler;
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  double log10_p = 0.0;
  // Sample sizes behind the statistic, recorded so callers can audit how
  // balanced the asymptotics' m/(m+n) ratio is.
  int m = 0;
  int n = 0;
};

/// ML estimates of a q-variate Gaussian: mean vector and (biased, 1/N)
/// covariance of amplitude observations.
struct GaussianEstimate {
  std::vector<double> mean;
  RealMatrix covariance;
  int sample_size = 0;
};

GaussianEstimate estimate_gaussian(std::span<const double> samples_row_major,
                                   int q, int count);

// Test statistics between scaled complex Wishart models sharing a known L.
// All are non-negative, zero iff the two estimates coincide, and
// asymptotically chi-square with q^2 degrees of freedom under equality.
TestResult stat_kl(const CovarianceEstimate& a, const CovarianceEstimate& b);
TestResult stat_bhattacharyya(const CovarianceEstimate& a, const CovarianceEstimate& b);
TestResult stat_hellinger(const CovarianceEstimate& a, const CovarianceEstimate& b);
TestResult stat_renyi(const CovarianceEstimate& a, const CovarianceEstimate& b,
                      double beta = kDefaultRenyiBeta);
TestResult stat_chisquare(const CovarianceEstimate& a, const CovarianceEstimate& b);

/// Bhattacharyya test statistic between q-variate Gaussian estimates
/// (amplitude data), chi-square with q(q+3)/2 degrees of freedom.
TestResult stat_gaussian_bhattacharyya(const GaussianEstimate& a,
                                       const GaussianEstimate& b);

/// Dispatcher over the Wishart kinds.
TestResult compute_statistic(StatisticKind kind, const CovarianceEstimate& a,
                             const CovarianceEstimate& b,
                             double beta = kDefaultRenyiBeta);

/// The per-kind h'(0) * phi''(1) scale of the divergence family:
///
///   kind                    h(y)                      phi(x)                      h'(0) phi''(1)
///   Kullback-Leibler        y                         x log x                     1
///   Renyi (order b)         log((b-1)y+1)/(b-1)       (x^b - b(x-1) - 1)/(b-1)    b
///   Hellinger               y/2                       (sqrt(x) - 1)^2             1/4
///   Bhattacharyya           -log(1-y)                 -sqrt(x) + (x+1)/2          1/4
///   chi-square              y/4                       (x-1)^2 (x+1)/x             1
///   Gaussian Bhattacharyya  (same h, phi as Bhattacharyya)                        1/4
double statistic_scale_constant(StatisticKind kind, double beta = kDefaultRenyiBeta);

/// Inverts S = (2mn/(m+n)) d / (h'(0) phi''(1)) back to the symmetrized
/// distance d; zero iff the statistic is zero. beta must match the order the
/// statistic was computed with (only relevant for Renyi).
double distance_from_statistic(const TestResult& result, int m, int n,
                               double beta = kDefaultRenyiBeta);

/// Precomputed inverse and log-determinant of an estimate, for repeated
/// comparisons of one segment against many prototypes.
struct PreparedWishart {
  CovarianceEstimate estimate;
  HermitianMatrix inv;
  double log_det = 0.0;

  static PreparedWishart prepare(const CovarianceEstimate& e);
};

TestResult stat_between(StatisticKind kind, const PreparedWishart& a,
                        const PreparedWishart& b, double beta = kDefaultRenyiBeta);

}  // namespace polsar
