// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Numeric guard values used across the library. Kept in one place so the
// behaviour of every module can be audited (and tuned) together.

namespace polsar::tol {

/// Inverses are rejected when the estimated reciprocal condition number
/// (1-norm) falls below this floor.
inline constexpr double kRcondFloor = 1e-13;

/// Relative asymmetry accepted when a full matrix is normalized into
/// Hermitian storage (covers file inputs and accumulated round-off).
inline constexpr double kHermitianCheck = 1e-12;

/// Test statistics are non-negative by theory; values in [-kStatisticSlack, 0)
/// are clamped to zero, anything more negative raises NumericalError.
inline constexpr double kStatisticSlack = 1e-9;

/// LU pivot ratio below which a matrix is reported singular.
inline constexpr double kPivotRatioFloor = 1e-14;

/// Termination tolerance of the incomplete-gamma series / continued fraction.
inline constexpr double kIncompleteGammaEps = 1e-16;

/// Statistics above this switch the p-value report to log space
/// (chi-square tails underflow double precision near exp(-709)).
inline constexpr double kLogSpaceStatistic = 1400.0;

}  // namespace polsar::tol
