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

#include "choicone/cpfact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "choicone/error.hpp"

namespace choicone {

using Eigen::Index;

namespace {

FactorOutcome finish(const SymMatrix& s, Eigen::MatrixXd vectors,
                     std::string strategy, const ToleranceConfig& tol,
                     std::size_t iterations = 0) {
  FactorOutcome out;
  out.strategy = std::move(strategy);
  out.iterations = iterations;
  CpCertificate cert{std::move(vectors), 0.0};
  const VerifyResult v = verify_certificate(s, cert, tol);
  cert.residual = v.residual;
  out.infeasibility = v.residual;
  if (v.ok) {
    out.status = FactorStatus::kCertified;
    out.certificate = std::move(cert);
  } else {
    out.reason = "certificate failed verification";
  }
  return out;
}

Eigen::MatrixXd stack(const std::vector<Eigen::VectorXd>& cols, Index r) {
  Eigen::MatrixXd x(r, static_cast<Index>(cols.size()));
  for (std::size_t t = 0; t < cols.size(); ++t) x.col(static_cast<Index>(t)) = cols[t];
  return x;
}

}  // namespace

VerifyResult verify_certificate(const SymMatrix& s, const CpCertificate& c,
                                const ToleranceConfig& tol) {
  if (c.r() != s.r()) {
    throw Error(ErrorCode::kDimension, "certificate dimension does not match matrix");
  }
  VerifyResult out;
  out.min_entry = c.vectors.size() == 0 ? 0.0 : c.vectors.minCoeff();
  const double norm = s.matrix().norm();
  out.residual = (s.matrix() - c.gram()).norm() / std::max(1.0, norm);
  out.ok = std::isfinite(out.residual) && out.residual <= tol.eps_residual &&
           out.min_entry >= -tol.eps_nonneg;
  return out;
}

// ---------------------------------------------------------------------------

FactorOutcome factor_forest(const SymMatrix& s, const SupportGraph& g,
                            const ToleranceConfig& tol) {
  if (g.r() != s.r()) throw Error(ErrorCode::kDimension, "graph size mismatch");
  if (!is_forest(g)) throw Error(ErrorCode::kNotAForest, "support graph has a cycle");

  const std::size_t r = s.r();
  const auto ri = static_cast<Index>(r);
  std::vector<double> diag(r);
  double scale = 1.0;
  for (std::size_t i = 0; i < r; ++i) {
    diag[i] = s(i, i);
    scale = std::max(scale, std::abs(diag[i]));
  }
  const double floor = -(tol.eps_zero + tol.eps_psd * scale);

  std::vector<std::vector<std::size_t>> nb(r);
  for (std::size_t v = 0; v < r; ++v) nb[v] = g.neighbors(v);
  std::vector<Eigen::VectorXd> cols;
  std::size_t steps = 0;

  for (;;) {
    std::size_t leaf = r;
    for (std::size_t v = 0; v < r && leaf == r; ++v)
      if (nb[v].size() == 1) leaf = v;
    if (leaf == r) break;
    const std::size_t j = nb[leaf].front();
    const double sij = std::max(0.0, s(leaf, j));
    if (diag[leaf] <= tol.eps_zero) {
      if (sij > tol.eps_zero) {
        throw Error(ErrorCode::kNegativeSchurUpdate,
                    "zero diagonal with nonzero off-diagonal at vertex " +
                        std::to_string(leaf + 1));
      }
    } else {
      const double root = std::sqrt(diag[leaf]);
      Eigen::VectorXd x = Eigen::VectorXd::Zero(ri);
      x(static_cast<Index>(leaf)) = root;
      x(static_cast<Index>(j)) = sij / root;
      cols.push_back(std::move(x));
      diag[j] -= sij * sij / diag[leaf];
      if (diag[j] < floor) {
        throw Error(ErrorCode::kNegativeSchurUpdate,
                    "Schur update drove diagonal " + std::to_string(j + 1) +
                        " negative");
      }
      diag[j] = std::max(0.0, diag[j]);
    }
    diag[leaf] = 0.0;
    nb[leaf].clear();
    std::erase(nb[j], leaf);
    ++steps;
  }
  for (std::size_t v = 0; v < r; ++v) {
    if (diag[v] < floor) {
      throw Error(ErrorCode::kNegativeSchurUpdate,
                  "negative diagonal at vertex " + std::to_string(v + 1));
    }
    if (diag[v] > 0.0) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(ri);
      x(static_cast<Index>(v)) = std::sqrt(diag[v]);
      cols.push_back(std::move(x));
    }
  }
  return finish(s, stack(cols, ri), "forest", tol, steps);
}

// ---------------------------------------------------------------------------

FactorOutcome factor_diag_dominant(const SymMatrix& s, const ToleranceConfig& tol) {
  const std::size_t r = s.r();
  const auto ri = static_cast<Index>(r);
  std::vector<double> offsum(r, 0.0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (j != i && s(i, j) > tol.eps_zero) offsum[i] += s(i, j);
  for (std::size_t i = 0; i < r; ++i) {
    if (s(i, i) < offsum[i] - tol.eps_zero) {
      throw Error(ErrorCode::kNotDiagonallyDominant,
                  "row " + std::to_string(i + 1) + " is not diagonally dominant");
    }
  }
  std::vector<Eigen::VectorXd> cols;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (s(i, j) <= tol.eps_zero) continue;
      Eigen::VectorXd x = Eigen::VectorXd::Zero(ri);
      x(static_cast<Index>(i)) = x(static_cast<Index>(j)) = std::sqrt(s(i, j));
      cols.push_back(std::move(x));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    const double rem = s(i, i) - offsum[i];
    if (rem <= 0.0) continue;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ri);
    x(static_cast<Index>(i)) = std::sqrt(rem);
    cols.push_back(std::move(x));
  }
  return finish(s, stack(cols, ri), "diag-dominant", tol);
}

// ---------------------------------------------------------------------------

FactorOutcome factor_bipartite_blockform(const BlockForm& bf,
                                         const ToleranceConfig& tol,
                                         const BipartiteParams& params) {
  if (bf.d1.size() != bf.d0.size() || bf.b.rows() != bf.d0.size() ||
      bf.b.cols() != bf.d0.size()) {
    throw Error(ErrorCode::kDimension, "inconsistent block-form sizes");
  }
  return factor_bipartite(bf.d0, bf.b, bf.d1, tol, params);
}

// ---------------------------------------------------------------------------

FactorOutcome factor_auto(const SymMatrix& s, const ToleranceConfig& tol,
                          const FactorParams& params) {
  const DnnReport dnn = is_dnn(s, tol);
  if (!dnn.verdict) {
    FactorOutcome out;
    out.strategy = "none";
    out.reason = "NotDnn";
    out.infeasibility = dnn.is_nonneg ? -dnn.min_eigenvalue : -dnn.worst_entry.value;
    return out;
  }
  const SupportGraph g = support_graph(s, tol.eps_zero);
  FactorOutcome last;
  std::size_t iterations = 0;
  auto note = [&](FactorOutcome o) {
    iterations += o.iterations;
    o.iterations = iterations;
    last = std::move(o);
    return last.certified();
  };

  if (is_forest(g)) {
    try {
      if (note(factor_forest(s, g, tol))) return last;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNegativeSchurUpdate) throw;
    }
  }

  const ColoringResult coloring = two_coloring(g);
  if (coloring.bipartite()) {
    // Lay out Left vertices first, then Right, and factor the block form.
    std::vector<std::size_t> left, right;
    for (std::size_t v = 0; v < s.r(); ++v)
      (coloring.coloring->color[v] == Side::kLeft ? left : right).push_back(v);
    const auto n0 = static_cast<Index>(left.size());
    const auto n1 = static_cast<Index>(right.size());
    Eigen::VectorXd d0(n0), d1(n1);
    Eigen::MatrixXd b(n0, n1);
    std::vector<std::size_t> image(s.r());
    for (Index i = 0; i < n0; ++i) {
      d0(i) = s(left[i], left[i]);
      image[left[i]] = static_cast<std::size_t>(i);
      for (Index j = 0; j < n1; ++j) b(i, j) = s(left[i], right[j]);
    }
    for (Index j = 0; j < n1; ++j) {
      d1(j) = s(right[j], right[j]);
      image[right[j]] = static_cast<std::size_t>(n0 + j);
    }
    try {
      FactorOutcome o = factor_bipartite(d0, b, d1, tol, params.bipartite);
      if (o.certified()) {
        const Permutation to_block(std::move(image));
        FactorOutcome mapped = finish(
            s, map_certificate_perm(*o.certificate, to_block.inverse()).vectors,
            o.strategy, tol, o.iterations);
        if (note(std::move(mapped))) return last;
      } else {
        note(std::move(o));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kZeroDiagonalNonzeroRow) throw;
    }
  }

  try {
    if (note(factor_diag_dominant(s, tol))) return last;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotDiagonallyDominant) throw;
  }

  note(factor_alternating_projection(s, params.projection, tol));
  return last;
}

// ---------------------------------------------------------------------------

CpCertificate map_certificate_perm(const CpCertificate& c, const Permutation& p) {
  if (p.size() != c.r()) {
    throw Error(ErrorCode::kInvalidPermutation, "permutation size mismatch");
  }
  CpCertificate out{Eigen::MatrixXd(c.vectors.rows(), c.vectors.cols()), c.residual};
  for (std::size_t i = 0; i < c.r(); ++i)
    out.vectors.row(static_cast<Index>(p[i])) = c.vectors.row(static_cast<Index>(i));
  return out;
}

CpCertificate map_certificate_diag(const CpCertificate& c, std::span<const double> d) {
  if (d.size() != c.r()) throw Error(ErrorCode::kDimension, "scale vector length mismatch");
  for (double v : d) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kNonPositiveScale, "scales must be positive");
    }
  }
  CpCertificate out = c;
  for (std::size_t i = 0; i < c.r(); ++i) out.vectors.row(static_cast<Index>(i)) *= d[i];
  return out;
}

}  // namespace choicone
