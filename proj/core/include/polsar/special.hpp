// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace polsar {

/// log of the complex multivariate gamma function:
/// log Gamma_q(a) = q(q-1)/2 * log(pi) + sum_{i=0}^{q-1} log Gamma(a - i).
/// Requires a > q - 1.
double log_multigamma(double a, int q);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// log Q(a, x), stable far in the tail where Q underflows double precision.
double log_regularized_gamma_q(double a, double x);

/// Upper-tail probability of a chi-square variable with dof degrees of
/// freedom, Pr(X >= x) = Q(dof/2, x/2). Absolute error <= 1e-12.
double chi2_sf(double x, int dof);

/// log10 of chi2_sf, computed in log space once the plain value underflows.
double chi2_log10_sf(double x, int dof);

/// Standard normal upper tail Pr(Z >= z).
double normal_sf(double z);

}  // namespace polsar
