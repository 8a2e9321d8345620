// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/distances.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "polsar/errors.hpp"
#include "polsar/special.hpp"
#include "polsar/tolerances.hpp"

namespace polsar {

namespace {

void require_same_looks(const CovarianceEstimate& a, const CovarianceEstimate& b) {
  if (a.looks != b.looks) {
    throw LooksMismatch("test statistics require equal known looks");
  }
}

void require_valid_pair(const CovarianceEstimate& a, const CovarianceEstimate& b) {
  if (a.sigma_hat.dim() != b.sigma_hat.dim()) {
    throw DimensionMismatch("estimates have different dimensions");
  }
  if (a.sample_size < 1 || b.sample_size < 1) {
    throw ValidationError("sample sizes must be positive");
  }
  require_same_looks(a, b);
}

/// Clamps tiny negative round-off, attaches the chi-square p-value.
TestResult finalize(StatisticKind kind, double raw, int dof, int m, int n) {
  if (raw < 0.0) {
    if (raw >= -tol::kStatisticSlack) {
      raw = 0.0;
    } else {
      throw NumericalError("statistic " + std::string(to_string(kind)) +
                           " below negative tolerance: " + std::to_string(raw));
    }
  }
  TestResult r;
  r.kind = kind;
  r.statistic = raw;
  r.dof = dof;
  if (std::isinf(raw)) {
    r.p_value = 0.0;
    r.log10_p = -std::numeric_limits<double>::infinity();
  } else {
    r.p_value = chi2_sf(raw, dof);
    // Beyond tol::kLogSpaceStatistic the survival value underflows double
    // precision, so the log report switches to the log-space evaluation.
    r.log10_p = raw > tol::kLogSpaceStatistic ? chi2_log10_sf(raw, dof)
                                              : std::log10(r.p_value);
  }
  r.m = m;
  r.n = n;
  return r;
}

double pair_factor(int m, int n) {
  return static_cast<double>(m) * n / (static_cast<double>(m) + n);
}

/// tr(A B) for Hermitian A, B without forming the product.
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  const int q = a.dim();
  double s = 0.0;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      s += (a(i, j) * b(j, i)).real();
    }
  }
  return s;
}

/// log |abs det| of a general complex matrix; throws SingularMatrix when the
/// matrix is singular relative to the scale of its operands.
double log_abs_det(const ComplexMatrix& m, double scale_hint, const char* what) {
  const auto lu = LuDecomposition::compute(m);
  if (lu.singular(scale_hint)) throw SingularMatrix(what);
  return std::log(std::abs(lu.det()));
}

}  // namespace

const char* to_string(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::KullbackLeibler: return "kl";
    case StatisticKind::Bhattacharyya: return "bhattacharyya";
    case StatisticKind::Hellinger: return "hellinger";
    case StatisticKind::Renyi: return "renyi";
    case StatisticKind::ChiSquare: return "chi2";
    case StatisticKind::GaussianBhattacharyya: return "gauss-bhattacharyya";
  }
  return "unknown";
}

std::optional<StatisticKind> parse_statistic(std::string_view token) {
  for (StatisticKind kind : kAllKinds) {
    if (token == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool is_wishart(StatisticKind kind) {
  return kind != StatisticKind::GaussianBhattacharyya;
}

int dof_for(StatisticKind kind, int q) {
  return is_wishart(kind) ? q * q : q * (q + 3) / 2;
}

GaussianEstimate estimate_gaussian(std::span<const double> samples, int q, int count) {
  if (count < 1) throw EmptySample("cannot estimate from an empty sample");
  if (samples.size() != static_cast<std::size_t>(q) * count) {
    throw DimensionMismatch("sample buffer size mismatch");
  }
  GaussianEstimate est;
  est.sample_size = count;
  est.mean.assign(static_cast<std::size_t>(q), 0.0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < q; ++j) {
      est.mean[static_cast<std::size_t>(j)] += samples[static_cast<std::size_t>(i) * q + j];
    }
  }
  for (auto& v : est.mean) v /= count;
  // ML (1/N) covariance.
  est.covariance = RealMatrix(q);
  for (int i = 0; i < count; ++i) {
    for (int a = 0; a < q; ++a) {
      const double da = samples[static_cast<std::size_t>(i) * q + a] - est.mean[static_cast<std::size_t>(a)];
      for (int b = a; b < q; ++b) {
        const double db = samples[static_cast<std::size_t>(i) * q + b] - est.mean[static_cast<std::size_t>(b)];
        est.covariance(a, b) += da * db;
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = a; b < q; ++b) {
      est.covariance(a, b) /= count;
      est.covariance(b, a) = est.covariance(a, b);
    }
  }
  return est;
}

PreparedWishart PreparedWishart::prepare(const CovarianceEstimate& e) {
  if (e.sample_size < 1) throw ValidationError("sample sizes must be positive");
  PreparedWishart p;
  p.estimate = e;
  p.log_det = logdet_hpd(e.sigma_hat);
  p.inv = inverse(e.sigma_hat);
  return p;
}

TestResult stat_between(StatisticKind kind, const PreparedWishart& a,
                        const PreparedWishart& b, double beta) {
  if (!is_wishart(kind)) {
    throw ValidationError("Gaussian statistic requires Gaussian estimates");
  }
  if (a.estimate.sigma_hat.dim() != b.estimate.sigma_hat.dim()) {
    throw DimensionMismatch("estimates have different dimensions");
  }
  require_same_looks(a.estimate, b.estimate);

  const int q = a.estimate.sigma_hat.dim();
  const double L = a.estimate.looks;
  const int m = a.estimate.sample_size;
  const int n = b.estimate.sample_size;
  const double f = pair_factor(m, n);
  const int dof = q * q;

  switch (kind) {
    case StatisticKind::KullbackLeibler: {
      const double tr = trace_product(a.inv, b.estimate.sigma_hat) +
                        trace_product(b.inv, a.estimate.sigma_hat);
      const double s = 2.0 * f * L * (0.5 * tr - q);
      return finalize(kind, s, dof, m, n);
    }
    case StatisticKind::Bhattacharyya: {
      const HermitianMatrix avg_inv =
          HermitianMatrix::linear_combination(0.5, a.inv, 0.5, b.inv);
      const double bracket = 0.5 * (a.log_det + b.log_det) + logdet_hpd(avg_inv);
      const double s = 8.0 * f * L * bracket;
      return finalize(kind, s, dof, m, n);
    }
    case StatisticKind::Hellinger: {
      const HermitianMatrix avg_inv =
          HermitianMatrix::linear_combination(0.5, a.inv, 0.5, b.inv);
      // log of the Bhattacharyya coefficient per look; <= 0 by the
      // log-concavity of the determinant on the positive definite cone.
      const double log_bc = -logdet_hpd(avg_inv) - 0.5 * (a.log_det + b.log_det);
      const double s = 8.0 * f * (-std::expm1(L * log_bc));
      return finalize(kind, s, dof, m, n);
    }
    case StatisticKind::Renyi: {
      if (!(beta > 0.0 && beta < 1.0)) {
        throw BetaOutOfRange("Renyi order must lie in (0, 1)");
      }
      const HermitianMatrix mix_ab =
          HermitianMatrix::linear_combination(beta, a.inv, 1.0 - beta, b.inv);
      const HermitianMatrix mix_ba =
          HermitianMatrix::linear_combination(beta, b.inv, 1.0 - beta, a.inv);
      const double la =
          L * (-beta * a.log_det + (beta - 1.0) * b.log_det - logdet_hpd(mix_ab));
      const double lb =
          L * (-beta * b.log_det + (beta - 1.0) * a.log_det - logdet_hpd(mix_ba));
      // log2/(1-beta) + log(e^la + e^lb)/(beta-1) == -t/(1-beta) with
      // t = log1p((expm1(la) + expm1(lb))/2); this form survives beta -> 1.
      const double t = std::log1p(0.5 * (std::expm1(la) + std::expm1(lb)));
      const double s = (2.0 * f / beta) * (-t / (1.0 - beta));
      return finalize(kind, s, dof, m, n);
    }
    case StatisticKind::ChiSquare: {
      const ComplexMatrix d_ab =
          2.0 * b.inv.to_complex() - a.inv.to_complex();
      const ComplexMatrix d_ba =
          2.0 * a.inv.to_complex() - b.inv.to_complex();
      const double scale = std::max(a.inv.max_abs(), b.inv.max_abs());
      const double log_t1 =
          L * (a.log_det - 2.0 * b.log_det -
               log_abs_det(d_ab, scale, "2 Sigma2^-1 - Sigma1^-1 is singular"));
      const double log_t2 =
          L * (b.log_det - 2.0 * a.log_det -
               log_abs_det(d_ba, scale, "2 Sigma1^-1 - Sigma2^-1 is singular"));
      const double s = 0.5 * f * (std::expm1(log_t1) + std::expm1(log_t2));
      return finalize(kind, s, dof, m, n);
    }
    default:
      throw ValidationError("unsupported statistic kind");
  }
}

namespace {

TestResult wishart_stat(StatisticKind kind, const CovarianceEstimate& a,
                        const CovarianceEstimate& b, double beta) {
  require_valid_pair(a, b);
  return stat_between(kind, PreparedWishart::prepare(a), PreparedWishart::prepare(b),
                      beta);
}

}  // namespace

TestResult stat_kl(const CovarianceEstimate& a, const CovarianceEstimate& b) {
  return wishart_stat(StatisticKind::KullbackLeibler, a, b, kDefaultRenyiBeta);
}

TestResult stat_bhattacharyya(const CovarianceEstimate& a, const CovarianceEstimate& b) {
  return wishart_stat(StatisticKind::Bhattacharyya, a, b, kDefaultRenyiBeta);
}

TestResult stat_hellinger(const CovarianceEstimate& a, const CovarianceEstimate& b) {
  return wishart_stat(StatisticKind::Hellinger, a, b, kDefaultRenyiBeta);
}

TestResult stat_renyi(const CovarianceEstimate& a, const CovarianceEstimate& b,
                      double beta) {
  return wishart_stat(StatisticKind::Renyi, a, b, beta);
}

TestResult stat_chisquare(const CovarianceEstimate& a, const CovarianceEstimate& b) {
  return wishart_stat(StatisticKind::ChiSquare, a, b, kDefaultRenyiBeta);
}

TestResult stat_gaussian_bhattacharyya(const GaussianEstimate& a,
                                       const GaussianEstimate& b) {
  const int q = static_cast<int>(a.mean.size());
  if (static_cast<int>(b.mean.size()) != q || a.covariance.dim() != q ||
      b.covariance.dim() != q) {
    throw DimensionMismatch("estimates have different dimensions");
  }
  if (a.sample_size < 1 || b.sample_size < 1) {
    throw ValidationError("sample sizes must be positive");
  }
  const int m = a.sample_size;
  const int n = b.sample_size;

  RealMatrix pooled = a.covariance;
  pooled += b.covariance;
  pooled *= 0.5;

  std::vector<double> dmu(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    dmu[static_cast<std::size_t>(i)] =
        a.mean[static_cast<std::size_t>(i)] - b.mean[static_cast<std::size_t>(i)];
  }

  double mahal = 0.0;
  double log_term = 0.0;
  try {
    const std::vector<double> x = solve_spd(pooled, dmu);
    for (int i = 0; i < q; ++i) mahal += dmu[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    log_term = logdet_spd(pooled) -
               0.5 * (logdet_spd(a.covariance) + logdet_spd(b.covariance));
  } catch (const NotPositiveDefinite&) {
    throw SingularMatrix("Gaussian covariance (or pooled covariance) is singular");
  }

  // The bracket below equals 8x the Gaussian Bhattacharyya distance
  // (1/8) dmu' P^-1 dmu + (1/2) log(|P| / sqrt(|S1||S2|)), so the chi-square
  // scaling 2mn/(m+n) / (h'(0) phi''(1)) = 8mn/(m+n) folds into a plain
  // mn/(m+n) prefactor.
  const double bracket = mahal + 4.0 * log_term;
  const double s = pair_factor(m, n) * bracket;
  return finalize(StatisticKind::GaussianBhattacharyya, s, dof_for(StatisticKind::GaussianBhattacharyya, q), m, n);
}

TestResult compute_statistic(StatisticKind kind, const CovarianceEstimate& a,
                             const CovarianceEstimate& b, double beta) {
  return wishart_stat(kind, a, b, beta);
}

double statistic_scale_constant(StatisticKind kind, double beta) {
  switch (kind) {
    case StatisticKind::KullbackLeibler: return 1.0;
    case StatisticKind::Renyi:
      if (!(beta > 0.0 && beta < 1.0)) {
        throw BetaOutOfRange("Renyi order must lie in (0, 1)");
      }
      return beta;
    case StatisticKind::Hellinger: return 0.25;
    case StatisticKind::Bhattacharyya: return 0.25;
    case StatisticKind::ChiSquare: return 1.0;
    case StatisticKind::GaussianBhattacharyya: return 0.25;
  }
  throw ValidationError("unsupported statistic kind");
}

double distance_from_statistic(const TestResult& result, int m, int n, double beta) {
  if (m != result.m || n != result.n) {
    throw ValidationError("sample sizes do not match the statistic");
  }
  const double scale = statistic_scale_constant(result.kind, beta);
  return result.statistic * scale / (2.0 * pair_factor(m, n));
}

}  // namespace polsar
