// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/wishart.hpp"

#include <array>
#include <cmath>

#include "polsar/errors.hpp"
#include "polsar/special.hpp"

namespace polsar {

namespace {

// Scratch size cap for the samplers' stack buffers. The design envelope is
// q <= 4; the embedding doubles that.
constexpr int kMaxSamplerDim = 16;

}  // namespace

WishartModel::WishartModel(HermitianMatrix sigma_in, double looks_in)
    : sigma(std::move(sigma_in)), looks(looks_in) {
  if (!(looks >= static_cast<double>(sigma.dim()))) {
    throw ValidationError("looks must satisfy L >= q");
  }
  cholesky_hpd(sigma);  // positive definiteness is part of the contract
}

double log_density(const WishartModel& model, const HermitianMatrix& z) {
  const int q = model.sigma.dim();
  if (z.dim() != q) throw DimensionMismatch("observation dimension mismatch");
  const double L = model.looks;

  double logdet_z = 0.0;
  double logdet_sigma = 0.0;
  try {
    logdet_z = logdet_hpd(z);
    logdet_sigma = logdet_hpd(model.sigma);
  } catch (const NotPositiveDefinite&) {
    throw DomainError("density requires positive definite Z and Sigma");
  }

  const HermitianMatrix sigma_inv = inverse(model.sigma);
  // tr(Sigma^-1 Z) without forming the product.
  double tr = 0.0;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      tr += (sigma_inv(i, j) * z(j, i)).real();
    }
  }

  return q * L * std::log(L) + (L - q) * logdet_z - L * logdet_sigma -
         log_multigamma(L, q) - L * tr;
}

CovarianceEstimate estimate_covariance(std::span<const HermitianMatrix> pixels,
                                       double looks) {
  if (pixels.empty()) throw EmptySample("cannot estimate from an empty sample");
  CovarianceAccumulator acc(pixels.front().dim());
  for (const auto& p : pixels) {
    if (p.dim() != pixels.front().dim()) {
      throw DimensionMismatch("pixels must share the same dimension");
    }
    acc.add(p);
  }
  return CovarianceEstimate{acc.mean(), acc.count(), looks};
}

RealMatrix embed_real(const HermitianMatrix& sigma) {
  const int q = sigma.dim();
  RealMatrix out(2 * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const cx v = sigma(i, j);
      out(i, j) = 0.5 * v.real();
      out(i, j + q) = -0.5 * v.imag();
      out(i + q, j) = 0.5 * v.imag();
      out(i + q, j + q) = 0.5 * v.real();
    }
  }
  return out;
}

GaussianPixelSampler::GaussianPixelSampler(const HermitianMatrix& sigma)
    : dim_(sigma.dim()) {
  if (2 * dim_ > kMaxSamplerDim) {
    throw ValidationError("sampler dimension exceeds the supported envelope");
  }
  factor_ = cholesky_spd(embed_real(sigma));
}

void GaussianPixelSampler::sample(Stream& stream, std::span<cx> out) const {
  if (static_cast<int>(out.size()) != dim_) {
    throw DimensionMismatch("output span must have size q");
  }
  const int n = 2 * dim_;
  std::array<double, kMaxSamplerDim> g;
  std::array<double, kMaxSamplerDim> x;
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = stream.normal();
  // x = L g with L lower triangular.
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j <= i; ++j) s += factor_(i, j) * g[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s;
  }
  for (int i = 0; i < dim_; ++i) {
    out[static_cast<std::size_t>(i)] =
        cx(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i + dim_)]);
  }
}

std::vector<cx> GaussianPixelSampler::sample(Stream& stream) const {
  std::vector<cx> out(static_cast<std::size_t>(dim_));
  sample(stream, out);
  return out;
}

MultilookSampler::MultilookSampler(const HermitianMatrix& sigma, double looks)
    : pixel_sampler_(sigma) {
  const double rounded = std::nearbyint(looks);
  if (!(looks > 0.0) || looks != rounded) {
    throw NonIntegerLooks("simulation requires a positive integer number of looks");
  }
  looks_ = static_cast<int>(rounded);
}

void MultilookSampler::sample_into(Stream& stream, std::span<cx> out) const {
  const int q = pixel_sampler_.dim();
  if (static_cast<int>(out.size()) != q * q) {
    throw DimensionMismatch("output span must have size q*q");
  }
  std::array<cx, kMaxSamplerDim> y;
  std::fill(out.begin(), out.end(), cx{});
  for (int look = 0; look < looks_; ++look) {
    pixel_sampler_.sample(stream, std::span<cx>(y.data(), static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        out[static_cast<std::size_t>(i) * q + j] +=
            y[static_cast<std::size_t>(i)] * std::conj(y[static_cast<std::size_t>(j)]);
      }
    }
  }
  const double inv_looks = 1.0 / looks_;
  for (auto& v : out) v *= inv_looks;
  // Outer products are Hermitian by construction; pin the diagonal's
  // imaginary part (exact zero) so downstream normalization is a no-op.
  for (int i = 0; i < q; ++i) {
    auto& d = out[static_cast<std::size_t>(i) * q + i];
    d = cx(d.real(), 0.0);
  }
}

HermitianMatrix MultilookSampler::sample(Stream& stream) const {
  const int q = pixel_sampler_.dim();
  std::vector<cx> buf(static_cast<std::size_t>(q) * q);
  sample_into(stream, buf);
  CovarianceAccumulator acc(q);
  acc.add(buf);
  return acc.mean();
}

}  // namespace polsar
