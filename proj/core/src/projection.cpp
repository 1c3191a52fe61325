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

#include <algorithm>
#include <cmath>
#include <limits>

#include "choicone/cpfact.hpp"
#include "choicone/random.hpp"

namespace choicone {

using Eigen::Index;

namespace {

Eigen::MatrixXd random_orthogonal(Index s, Rng& rng) {
  Eigen::MatrixXd g(s, s);
  for (Index j = 0; j < s; ++j)
    for (Index i = 0; i < s; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(s, s);
  // Fix column signs so the distribution does not depend on QR conventions.
  for (Index j = 0; j < s; ++j)
    if (qr.matrixQR()(j, j) < 0.0) q.col(j) *= -1.0;
  return q;
}

}  // namespace

FactorOutcome factor_alternating_projection(const SymMatrix& s,
                                            const ProjectionParams& params,
                                            const ToleranceConfig& tol) {
  const auto r = static_cast<Index>(s.r());
  FactorOutcome out;
  out.strategy = "alternating-projection";

  // Square root B0 B0^T = S from the clipped spectrum.
  const Eigensystem es = eigensystem(s);
  Eigen::VectorXd roots = es.values.cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXd b0 = es.vectors * roots.asDiagonal();

  if (roots.maxCoeff() == 0.0) {
    CpCertificate empty{Eigen::MatrixXd(r, 0), 0.0};
    const VerifyResult v = verify_certificate(s, empty, tol);
    empty.residual = v.residual;
    out.infeasibility = v.residual;
    if (v.ok) {
      out.status = FactorStatus::kCertified;
      out.certificate = std::move(empty);
    } else {
      out.reason = "certificate failed verification";
    }
    return out;
  }

  std::size_t columns = params.columns;
  if (columns == 0) columns = 2 * s.r() + support_graph(s, tol.eps_zero).edges().size();
  const Index cols = std::max<Index>(r, static_cast<Index>(columns));
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(r, cols);
  b.leftCols(r) = b0;

  Rng rng(params.seed);
  double best = std::numeric_limits<double>::infinity();
  std::size_t total = 0;
  for (std::size_t restart = 0; restart < params.restarts; ++restart) {
    Eigen::MatrixXd q = random_orthogonal(cols, rng);
    for (std::size_t it = 0; it < params.max_iter; ++it, ++total) {
      const Eigen::MatrixXd y = b * q;
      const Eigen::MatrixXd x = y.cwiseMax(0.0);
      CpCertificate cert{x, 0.0};
      const VerifyResult v = verify_certificate(s, cert, tol);
      best = std::min(best, v.residual);
      if (v.ok) {
        cert.residual = v.residual;
        out.status = FactorStatus::kCertified;
        out.certificate = std::move(cert);
        out.iterations = total + 1;
        out.infeasibility = v.residual;
        return out;
      }
      // Orthogonal Procrustes: argmin_Q ||B Q - X||_F = U V^T, B^T X = U S V^T.
      Eigen::BDCSVD<Eigen::MatrixXd> svd(b.transpose() * x,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
      q = svd.matrixU() * svd.matrixV().transpose();
    }
  }
  out.iterations = total;
  out.infeasibility = best;
  out.reason = "no restart reached a verified factorization";
  return out;
}

}  // namespace choicone
