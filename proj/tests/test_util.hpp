// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <polsar/complex_matrix.hpp>
#include <polsar/hermitian.hpp>
#include <polsar/rng.hpp>

namespace polsar::testutil {

inline ComplexMatrix random_complex(Stream& stream, int q) {
  ComplexMatrix m(q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      m(i, j) = cx(stream.normal(), stream.normal());
    }
  }
  return m;
}

/// Random Hermitian positive definite matrix: G G^* + eps I.
inline HermitianMatrix random_hpd(Stream& stream, int q, double eps = 0.05) {
  const ComplexMatrix g = random_complex(stream, q);
  ComplexMatrix ggh = matmul(g, g.adjoint());
  for (int i = 0; i < q; ++i) ggh(i, i) += eps;
  return HermitianMatrix::from_full(ggh);
}

/// A small positive definite perturbation of the given matrix. Keeps the pair
/// inside the domain where every statistic (notably chi-square, which needs
/// 2 Sigma2^-1 - Sigma1^-1 away from singularity) is well defined.
inline HermitianMatrix perturb_hpd(Stream& stream, const HermitianMatrix& base,
                                   double relative = 0.05) {
  const int q = base.dim();
  const ComplexMatrix g = random_complex(stream, q);
  ComplexMatrix ggh = matmul(g, g.adjoint());
  const double scale = relative * base.trace() / (3.0 * q);
  ComplexMatrix sum = base.to_complex();
  sum += ggh *= cx(scale, 0.0);
  return HermitianMatrix::from_full(sum);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double best = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      best = std::max(best, std::abs(a(i, j) - b(i, j)));
    }
  }
  return best;
}

}  // namespace polsar::testutil
