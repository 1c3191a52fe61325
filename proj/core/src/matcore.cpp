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

#include "choicone/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "choicone/error.hpp"

namespace choicone {

SymMatrix SymMatrix::from_matrix(const Eigen::MatrixXd& m,
                                 const ToleranceConfig& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorCode::kDimension, "matrix must be square with r >= 1");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kNonFinite, "matrix has non-finite entries");
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.eps_sym) {
    throw Error(ErrorCode::kAsymmetry,
                "input asymmetry " + std::to_string(asym) + " exceeds eps_sym");
  }
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  return SymMatrix(std::move(sym), asym);
}

SymMatrix SymMatrix::zero(std::size_t r) {
  const auto n = static_cast<Eigen::Index>(r);
  return from_matrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::identity(std::size_t r) {
  const auto n = static_cast<Eigen::Index>(r);
  return from_matrix(Eigen::MatrixXd::Identity(n, n));
}

SymMatrix sym_from_entries(std::size_t r, std::span<const double> entries,
                           const ToleranceConfig& tol) {
  if (r == 0 || entries.size() != r * r) {
    throw Error(ErrorCode::kDimension,
                "expected " + std::to_string(r * r) + " entries, got " +
                    std::to_string(entries.size()));
  }
  const auto n = static_cast<Eigen::Index>(r);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entries[i * n + j];
  return SymMatrix::from_matrix(m, tol);
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw Error(ErrorCode::kInvalidPermutation, "not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t r) {
  std::vector<std::size_t> id(r);
  for (std::size_t i = 0; i < r; ++i) id[i] = i;
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

// ---------------------------------------------------------------------------
// Spectral tests

Eigensystem eigensystem(const SymMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergence, "symmetric eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const SymMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.matrix(),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergence, "symmetric eigensolver failed");
  }
  return solver.eigenvalues()(0);
}

PsdResult is_psd(const SymMatrix& s, const ToleranceConfig& tol) {
  const Eigensystem es = eigensystem(s);
  const Eigen::Index r = es.values.size();
  PsdResult out;
  out.min_eigenvalue = es.values(0);
  out.max_abs_eigenvalue =
      std::max(std::abs(es.values(0)), std::abs(es.values(r - 1)));
  const double floor = -tol.eps_psd * std::max(1.0, out.max_abs_eigenvalue);
  out.is_psd = out.min_eigenvalue >= floor;
  if (!out.is_psd) out.witness = es.vectors.col(0).normalized();
  return out;
}

DnnReport is_dnn(const SymMatrix& s, const ToleranceConfig& tol) {
  DnnReport rep;
  PsdResult psd = is_psd(s, tol);
  rep.is_psd = psd.is_psd;
  rep.min_eigenvalue = psd.min_eigenvalue;
  rep.psd_witness = std::move(psd.witness);

  rep.worst_entry = {0, 0, s(0, 0)};
  for (std::size_t i = 0; i < s.r(); ++i) {
    for (std::size_t j = 0; j < s.r(); ++j) {
      if (s(i, j) < rep.worst_entry.value) rep.worst_entry = {i, j, s(i, j)};
    }
  }
  rep.is_nonneg = rep.worst_entry.value >= -tol.eps_nonneg;
  rep.verdict = rep.is_psd && rep.is_nonneg;
  return rep;
}

bool near_psd_boundary(const SymMatrix& s, const ToleranceConfig& tol) {
  const PsdResult psd = is_psd(s, tol);
  return psd.min_eigenvalue <=
         tol.eps_psd * std::max(1.0, psd.max_abs_eigenvalue);
}

// ---------------------------------------------------------------------------
// Congruences

SymMatrix permute_congruence(const SymMatrix& s, const Permutation& p) {
  if (p.size() != s.r()) {
    throw Error(ErrorCode::kInvalidPermutation,
                "permutation size does not match matrix dimension");
  }
  const auto n = static_cast<Eigen::Index>(s.r());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(static_cast<Eigen::Index>(p[i]), static_cast<Eigen::Index>(p[j])) =
          s.matrix()(i, j);
  return SymMatrix::from_matrix(out);
}

SymMatrix diag_congruence(const SymMatrix& s, std::span<const double> d) {
  if (d.size() != s.r()) {
    throw Error(ErrorCode::kDimension, "scale vector length mismatch");
  }
  for (double v : d) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kNonPositiveScale, "scales must be positive");
    }
  }
  const auto n = static_cast<Eigen::Index>(s.r());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      out(i, j) = d[i] * s.matrix()(i, j) * d[j];
      out(j, i) = out(i, j);
    }
  }
  return SymMatrix::from_matrix(out);
}

}  // namespace choicone
