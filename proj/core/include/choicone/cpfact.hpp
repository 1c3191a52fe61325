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

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "choicone/choi.hpp"
#include "choicone/graph.hpp"
#include "choicone/matcore.hpp"

namespace choicone {

/// Completely positive certificate: S ~= X X^T with X entrywise
/// nonnegative. Each column of X is one vector x_t; zero columns certify
/// the zero matrix.
struct CpCertificate {
  Eigen::MatrixXd vectors;  // r x s
  double residual = 0.0;    // filled by verify_certificate

  std::size_t r() const noexcept { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t s() const noexcept { return static_cast<std::size_t>(vectors.cols()); }
  Eigen::MatrixXd gram() const { return vectors * vectors.transpose(); }
};

struct VerifyResult {
  bool ok = false;
  double residual = 0.0;  // ||S - X X^T||_F / max(1, ||S||_F)
  double min_entry = 0.0;

  explicit operator bool() const noexcept { return ok; }
};

/// The sole arbiter of certificate correctness. Throws kDimension.
VerifyResult verify_certificate(const SymMatrix& s, const CpCertificate& c,
                                const ToleranceConfig& tol = {});

enum class FactorStatus { kCertified, kFailed };

struct FactorOutcome {
  FactorStatus status = FactorStatus::kFailed;
  std::optional<CpCertificate> certificate;  // present iff certified
  std::string strategy;
  std::string reason;          // why it failed; empty when certified
  std::size_t iterations = 0;
  double infeasibility = 0.0;  // engine-specific violation measure

  bool certified() const noexcept { return status == FactorStatus::kCertified; }
};

/// Leaf elimination for DNN matrices whose support graph is a forest.
/// Throws kNotAForest, kNegativeSchurUpdate (input not PSD).
FactorOutcome factor_forest(const SymMatrix& s, const SupportGraph& g,
                            const ToleranceConfig& tol = {});

/// One vector sqrt(S_ij)(e_i + e_j) per edge plus the diagonal remainder.
/// Throws kNotDiagonallyDominant.
FactorOutcome factor_diag_dominant(const SymMatrix& s,
                                   const ToleranceConfig& tol = {});

enum class StepRule {
  /// Shifted Perron resolvent of the normalized bipartite matrix: a single
  /// linear solve per component produces a feasible edge allocation.
  kResolvent,
  /// Alternating row/column rebalancing (power iteration on the edge
  /// allocation), stopped after max_iter sweeps.
  kRebalance,
};

struct BipartiteParams {
  std::size_t max_iter = 500;
  StepRule step_rule = StepRule::kResolvent;
};

/// Certificate for [[diag(d0), B], [B^T, diag(d1)]] built from one vector
/// per positive B_ij plus diagonal slack. Never returns an unverified
/// certificate. Throws kZeroDiagonalNonzeroRow when a zero diagonal
/// entry sits in a row with support (input not PSD).
FactorOutcome factor_bipartite_blockform(const BlockForm& bf,
                                         const ToleranceConfig& tol = {},
                                         const BipartiteParams& params = {});

/// Rectangular generalization used by factor_auto: d0 has n0 entries, d1
/// has n1, b is n0 x n1.
FactorOutcome factor_bipartite(const Eigen::VectorXd& d0, const Eigen::MatrixXd& b,
                               const Eigen::VectorXd& d1,
                               const ToleranceConfig& tol = {},
                               const BipartiteParams& params = {});

struct ProjectionParams {
  std::size_t columns = 0;  // 0: 2r + |edges|
  std::size_t max_iter = 5000;
  std::size_t restarts = 20;
  std::uint64_t seed = 0x5eed;
};

/// Alternates between the nonnegative orthant and the set {X : X X^T = S}
/// (orthogonal Procrustes alignment of a fixed square root of S).
/// Deterministic for a fixed seed. Certified only if the verifier passes.
FactorOutcome factor_alternating_projection(const SymMatrix& s,
                                            const ProjectionParams& params = {},
                                            const ToleranceConfig& tol = {});

struct FactorParams {
  BipartiteParams bipartite;
  ProjectionParams projection;
};

/// Strategy dispatch: NotDnn, else forest, bipartite block form,
/// diagonal dominance, alternating projection. First certificate wins.
FactorOutcome factor_auto(const SymMatrix& s, const ToleranceConfig& tol = {},
                          const FactorParams& params = {});

/// x_t -> P x_t, certifying P S P^T. Residual is carried over.
CpCertificate map_certificate_perm(const CpCertificate& c, const Permutation& p);

/// x_t -> diag(d) x_t, certifying diag(d) S diag(d).
CpCertificate map_certificate_diag(const CpCertificate& c, std::span<const double> d);

}  // namespace choicone
