// Copyright 2026 The choicone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choicone/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "choicone/error.hpp"
#include "choicone/random.hpp"

namespace choicone {

using Eigen::Index;

namespace {

double block_min_eigenvalue(const BlockForm& base, double t) {
  BlockForm scaled = base;
  scaled.b *= t;
  return min_eigenvalue(scaled.assemble());
}

}  // namespace

BlockForm sample_blockform_channel(std::size_t n, const SampleParams& p) {
  if (n == 0) throw Error(ErrorCode::kDimension, "n must be positive");
  Rng rng(p.seed);
  const auto ni = static_cast<Index>(n);
  BlockForm bf;
  bf.d0.resize(ni);
  bf.d1.resize(ni);
  bf.b = Eigen::MatrixXd::Zero(ni, ni);
  for (Index i = 0; i < ni; ++i) {
    bf.d0(i) = rng.uniform();
    bf.d1(i) = 1.0 - bf.d0(i);
  }
  for (Index i = 0; i < ni; ++i)
    for (Index j = 0; j < ni; ++j)
      if (rng.bernoulli(p.density)) bf.b(i, j) = rng.uniform();
  const bool boundary = rng.bernoulli(p.boundary_bias);
  const double shrink = rng.uniform(0.5, 1.0);
  if (bf.b.maxCoeff() <= 0.0) return bf;

  const bool psd_at_one = block_min_eigenvalue(bf, 1.0) >= 0.0;
  if (psd_at_one && !boundary) return bf;

  // Largest t with A(t) PSD; lambda_min(A(t)) is nonincreasing in t >= 0.
  double lo = 0.0, hi = 1.0;
  if (psd_at_one) {
    lo = 1.0;
    hi = 2.0;
    for (int k = 0; k < 64 && block_min_eigenvalue(bf, hi) >= 0.0; ++k) {
      lo = hi;
      hi *= 2.0;
    }
  }
  for (int k = 0; k < 64; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (block_min_eigenvalue(bf, mid) >= 0.0 ? lo : hi) = mid;
  }
  bf.b *= boundary ? lo : lo * shrink;
  return bf;
}

CpSample sample_cp(std::size_t r, std::size_t s, const SampleParams& p) {
  if (r == 0) throw Error(ErrorCode::kDimension, "r must be positive");
  Rng rng(p.seed);
  const auto ri = static_cast<Index>(r);
  const auto si = static_cast<Index>(s);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(ri, si);
  for (Index t = 0; t < si; ++t)
    for (Index i = 0; i < ri; ++i)
      if (rng.bernoulli(p.density)) x(i, t) = rng.uniform();
  Eigen::MatrixXd gram = x * x.transpose();
  CpCertificate cert{std::move(x), 0.0};
  return {SymMatrix::from_matrix(gram), std::move(cert)};
}

SymMatrix sample_dnn(std::size_t r, const SampleParams& p, const ToleranceConfig& tol) {
  if (r == 0) throw Error(ErrorCode::kDimension, "r must be positive");
  const auto ri = static_cast<Index>(r);
  constexpr int kAttempts = 10;
  constexpr int kMaxIter = 20000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = Rng::derive(p.seed, static_cast<std::uint64_t>(attempt));
    const auto k = static_cast<Index>(1 + rng.below(r));
    Eigen::MatrixXd g(ri, k);
    for (Index j = 0; j < k; ++j)
      for (Index i = 0; i < ri; ++i) g(i, j) = rng.normal();
    Eigen::MatrixXd x = g * g.transpose() / static_cast<double>(k);
    x = 0.5 * (x + x.transpose());

    const double scale = std::max(1.0, x.norm());
    const double floor = 1e-8 * scale;
    // Dykstra corrections for the PSD and orthant steps.
    Eigen::MatrixXd corr_psd = Eigen::MatrixXd::Zero(ri, ri);
    Eigen::MatrixXd corr_nn = Eigen::MatrixXd::Zero(ri, ri);
    for (int it = 0; it < kMaxIter; ++it) {
      Eigen::MatrixXd y = x + corr_psd;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(y);
      if (eig.info() != Eigen::Success) break;
      const Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(floor);
      Eigen::MatrixXd proj = eig.eigenvectors() * lam.asDiagonal() *
                             eig.eigenvectors().transpose();
      proj = 0.5 * (proj + proj.transpose());
      corr_psd = y - proj;
      const Eigen::MatrixXd z = proj + corr_nn;
      x = z.cwiseMax(0.0);
      corr_nn = z - x;
      const SymMatrix candidate = SymMatrix::from_matrix(x);
      if (is_dnn(candidate, tol).verdict) return candidate;
    }
  }
  throw Error(ErrorCode::kConvergence, "DNN sampler did not converge");
}

SymMatrix sample_forest_dnn(std::size_t r, const SampleParams& p) {
  if (r == 0) throw Error(ErrorCode::kDimension, "r must be positive");
  Rng rng(p.seed);
  const auto ri = static_cast<Index>(r);
  std::vector<std::size_t> label(r);
  std::iota(label.begin(), label.end(), std::size_t{0});
  for (std::size_t i = r; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(ri, ri);
  for (std::size_t v = 1; v < r; ++v) {
    if (!rng.bernoulli(p.density)) continue;
    const auto i = static_cast<Index>(label[rng.below(v)]);
    const auto j = static_cast<Index>(label[v]);
    const double a = rng.uniform(0.05, 1.0);
    const double b = rng.uniform(0.05, 1.0);
    s(i, i) += a * a;
    s(j, j) += b * b;
    s(i, j) += a * b;
    s(j, i) += a * b;
  }
  for (Index v = 0; v < ri; ++v)
    if (!rng.bernoulli(p.boundary_bias)) s(v, v) += rng.uniform();
  return SymMatrix::from_matrix(s);
}

std::vector<Eigen::MatrixXcd> sample_kraus_channel(std::size_t n, std::size_t m,
                                                   std::size_t k, const SampleParams& p,
                                                   bool complex_entries) {
  if (n == 0 || m == 0 || k == 0 || k * m < n) {
    throw Error(ErrorCode::kDimension, "need k * m >= n for an isometry");
  }
  Rng rng(p.seed);
  const auto rows = static_cast<Index>(k * m);
  const auto ni = static_cast<Index>(n);
  const auto mi = static_cast<Index>(m);
  Eigen::MatrixXcd g(rows, ni);
  for (Index j = 0; j < ni; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = complex_entries ? rng.normal() : 0.0;
      g(i, j) = {re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  const Eigen::MatrixXcd v = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, ni);
  std::vector<Eigen::MatrixXcd> kraus;
  kraus.reserve(k);
  for (std::size_t t = 0; t < k; ++t) kraus.push_back(v.middleRows(static_cast<Index>(t) * mi, mi));
  return kraus;
}

}  // namespace choicone
