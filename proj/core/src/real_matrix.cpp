// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/real_matrix.hpp"

#include <cmath>
#include <utility>

#include "polsar/errors.hpp"
#include "polsar/tolerances.hpp"

namespace polsar {

RealMatrix::RealMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
  if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
}

RealMatrix RealMatrix::identity(int dim) {
  RealMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

bool RealMatrix::symmetric(double rel_tol) const {
  const double scale = std::max(max_abs(), 1e-300);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale) return false;
    }
  }
  return true;
}

double RealMatrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

void RealMatrix::matvec(std::span<const double> x, std::span<double> out) const {
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
}

RealMatrix cholesky_spd(const RealMatrix& m) {
  const int n = m.dim();
  RealMatrix L(n);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw NotPositiveDefinite("Cholesky pivot not positive");
    }
    const double ljj = std::sqrt(d);
    L(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / ljj;
    }
  }
  return L;
}

double logdet_spd(const RealMatrix& m) {
  const RealMatrix L = cholesky_spd(m);
  double s = 0.0;
  for (int i = 0; i < L.dim(); ++i) s += std::log(L(i, i));
  return 2.0 * s;
}

double det_lu(const RealMatrix& m) {
  const int n = m.dim();
  RealMatrix a = m;
  double d = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double pivot_mag = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > pivot_mag) {
        pivot_mag = std::abs(a(r, col));
        pivot_row = r;
      }
    }
    if (pivot_mag == 0.0) return 0.0;
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      d = -d;
    }
    d *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double mult = a(r, col) / a(col, col);
      for (int j = col + 1; j < n; ++j) a(r, j) -= mult * a(col, j);
    }
  }
  return d;
}

std::vector<double> solve_spd(const RealMatrix& m, std::span<const double> b) {
  const int n = m.dim();
  if (static_cast<int>(b.size()) != n) throw DimensionMismatch("rhs size mismatch");
  const RealMatrix L = cholesky_spd(m);
  std::vector<double> y(b.begin(), b.end());
  for (int i = 0; i < n; ++i) {
    double s = y[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) s -= L(i, j) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s / L(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = y[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= L(j, i) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s / L(i, i);
  }
  return y;
}

}  // namespace polsar
