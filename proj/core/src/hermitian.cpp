// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/hermitian.hpp"

#include <cmath>

#include "polsar/errors.hpp"
#include "polsar/tolerances.hpp"

namespace polsar {

namespace {

bool all_finite(std::span<const cx> values) {
  for (const cx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace

HermitianMatrix::HermitianMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
  if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
}

HermitianMatrix HermitianMatrix::trusted(int dim, std::vector<cx> data) {
  HermitianMatrix m(dim);
  m.data_ = std::move(data);
  return m;
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  HermitianMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.data_[static_cast<std::size_t>(i) * dim + i] = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  HermitianMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim_; ++i) {
    if (!(values[static_cast<std::size_t>(i)] >= 0.0)) {
      throw ValidationError("diagonal entries must be non-negative");
    }
    m.data_[static_cast<std::size_t>(i) * m.dim_ + i] = values[static_cast<std::size_t>(i)];
  }
  return m;
}

HermitianMatrix HermitianMatrix::from_full(const ComplexMatrix& m) {
  const int n = m.dim();
  if (!all_finite(m.data())) throw ValidationError("non-finite matrix entry");
  const double scale = m.max_abs();
  HermitianMatrix out(n);
  for (int i = 0; i < n; ++i) {
    const cx diag = m(i, i);
    if (std::abs(diag.imag()) > tol::kHermitianCheck * std::max(scale, 1.0)) {
      throw ValidationError("diagonal entry has a non-negligible imaginary part");
    }
    if (diag.real() < -tol::kHermitianCheck * std::max(scale, 1.0)) {
      throw ValidationError("negative diagonal entry");
    }
    out.data_[static_cast<std::size_t>(i) * n + i] = std::max(diag.real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cx upper = m(i, j);
      const cx lower = m(j, i);
      if (std::abs(upper - std::conj(lower)) > tol::kHermitianCheck * std::max(scale, 1.0)) {
        throw ValidationError("matrix is not Hermitian within tolerance");
      }
      const cx v = 0.5 * (upper + std::conj(lower));
      out.data_[static_cast<std::size_t>(i) * n + j] = v;
      out.data_[static_cast<std::size_t>(j) * n + i] = std::conj(v);
    }
  }
  return out;
}

HermitianMatrix HermitianMatrix::from_upper(int dim, std::span<const cx> upper) {
  const std::size_t expected = static_cast<std::size_t>(dim) * (dim + 1) / 2;
  if (upper.size() != expected) {
    throw DimensionMismatch("upper triangle has the wrong element count");
  }
  if (!all_finite(upper)) throw ValidationError("non-finite matrix entry");
  HermitianMatrix out(dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j, ++k) {
      const cx v = upper[k];
      if (i == j) {
        if (v.imag() != 0.0) throw ValidationError("diagonal entry must be real");
        if (v.real() < 0.0) throw ValidationError("negative diagonal entry");
        out.data_[static_cast<std::size_t>(i) * dim + i] = v.real();
      } else {
        out.data_[static_cast<std::size_t>(i) * dim + j] = v;
        out.data_[static_cast<std::size_t>(j) * dim + i] = std::conj(v);
      }
    }
  }
  return out;
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += data_[static_cast<std::size_t>(i) * dim_ + i].real();
  return t;
}

ComplexMatrix HermitianMatrix::to_complex() const {
  return ComplexMatrix(dim_, data_);
}

HermitianMatrix HermitianMatrix::linear_combination(double a, const HermitianMatrix& A,
                                                    double b, const HermitianMatrix& B) {
  if (A.dim_ != B.dim_) throw DimensionMismatch("matrix sizes differ");
  const int n = A.dim_;
  std::vector<cx> data(A.data_.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = a * A.data_[i] + b * B.data_[i];
  // Combination of Hermitian storage with real weights keeps conjugate pairs
  // exact; the diagonal can pick up a signed-zero imaginary part only.
  for (int i = 0; i < n; ++i) {
    auto& d = data[static_cast<std::size_t>(i) * n + i];
    d = cx(d.real(), 0.0);
  }
  return trusted(n, std::move(data));
}

double HermitianMatrix::max_abs() const {
  double best = 0.0;
  for (const cx& v : data_) best = std::max(best, std::abs(v));
  return best;
}

double HermitianMatrix::frobenius() const {
  double s = 0.0;
  for (const cx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

CovarianceAccumulator::CovarianceAccumulator(int dim)
    : dim_(dim), sum_(static_cast<std::size_t>(dim) * dim) {
  if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
}

void CovarianceAccumulator::add(std::span<const cx> pixel_row_major) {
  if (pixel_row_major.size() != sum_.size()) {
    throw DimensionMismatch("pixel size does not match accumulator");
  }
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += pixel_row_major[i];
  ++count_;
}

void CovarianceAccumulator::add(const HermitianMatrix& pixel) {
  add(pixel.data());
}

HermitianMatrix CovarianceAccumulator::mean() const {
  if (count_ == 0) throw EmptySample("no pixels accumulated");
  const double inv_n = 1.0 / count_;
  std::vector<cx> data(sum_.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = sum_[i] * inv_n;
  // Force exact Hermitian storage: inputs were Hermitian, so the pairwise
  // averages below only cancel representation noise from the summation order.
  for (int i = 0; i < dim_; ++i) {
    auto& diag = data[static_cast<std::size_t>(i) * dim_ + i];
    diag = cx(std::max(diag.real(), 0.0), 0.0);
    for (int j = i + 1; j < dim_; ++j) {
      auto& upper = data[static_cast<std::size_t>(i) * dim_ + j];
      auto& lower = data[static_cast<std::size_t>(j) * dim_ + i];
      const cx v = 0.5 * (upper + std::conj(lower));
      upper = v;
      lower = std::conj(v);
    }
  }
  return HermitianMatrix::trusted(dim_, std::move(data));
}

cx trace(const HermitianMatrix& m) { return cx(m.trace(), 0.0); }

cx det(const HermitianMatrix& m) { return det(m.to_complex()); }

ComplexMatrix cholesky_hpd(const HermitianMatrix& m) {
  const int n = m.dim();
  ComplexMatrix L(n);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(L(j, k));
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw NotPositiveDefinite("Cholesky pivot not positive");
    }
    const double ljj = std::sqrt(d);
    L(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      cx s = m(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
      L(i, j) = s / ljj;
    }
  }
  return L;
}

double det_hpd(const HermitianMatrix& m) {
  const ComplexMatrix L = cholesky_hpd(m);
  double prod = 1.0;
  for (int i = 0; i < L.dim(); ++i) prod *= L(i, i).real();
  return prod * prod;
}

double logdet_hpd(const HermitianMatrix& m) {
  const ComplexMatrix L = cholesky_hpd(m);
  double s = 0.0;
  for (int i = 0; i < L.dim(); ++i) s += std::log(L(i, i).real());
  return 2.0 * s;
}

HermitianMatrix inverse(const HermitianMatrix& m) {
  const int n = m.dim();
  ComplexMatrix inv(n);
  try {
    // L L^* = m; invert L by forward substitution, then m^-1 = L^-* L^-1.
    const ComplexMatrix L = cholesky_hpd(m);
    ComplexMatrix Linv(n);
    for (int c = 0; c < n; ++c) {
      Linv(c, c) = 1.0 / L(c, c);
      for (int i = c + 1; i < n; ++i) {
        cx s = 0.0;
        for (int j = c; j < i; ++j) s -= L(i, j) * Linv(j, c);
        Linv(i, c) = s / L(i, i);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cx s = 0.0;
        for (int k = std::max(i, j); k < n; ++k) {
          s += std::conj(Linv(k, i)) * Linv(k, j);
        }
        inv(i, j) = s;
      }
    }
  } catch (const NotPositiveDefinite&) {
    inv = LuDecomposition::compute(m.to_complex()).inverse();
  }
  const double rcond = 1.0 / (m.to_complex().norm1() * inv.norm1());
  if (!(rcond >= tol::kRcondFloor)) {
    throw SingularMatrix("reciprocal condition number below floor");
  }
  // Re-Hermitianize as (A + A^*)/2. Goes through the trusted constructor:
  // the inverse of an indefinite Hermitian matrix (LU fallback path) can
  // carry negative diagonal entries, which the strict entry points reject.
  std::vector<cx> data(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    data[static_cast<std::size_t>(i) * n + i] = cx(inv(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cx v = 0.5 * (inv(i, j) + std::conj(inv(j, i)));
      data[static_cast<std::size_t>(i) * n + j] = v;
      data[static_cast<std::size_t>(j) * n + i] = std::conj(v);
    }
  }
  return HermitianMatrix::trusted(n, std::move(data));
}

}  // namespace polsar
