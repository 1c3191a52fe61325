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
#include <vector>

#include "choicone/matcore.hpp"

namespace choicone {

/// Choi matrix J = sum_ij E_ij (x) Phi(E_ij) of a map M_n -> M_m.
///
/// Basis order is (i, a) with the output index a running fastest: row
/// i * m + a holds input index i, output index a (all 0-based).
class ChoiMatrix {
 public:
  /// Throws kDimension unless s.r() == n * m.
  ChoiMatrix(std::size_t n, std::size_t m, SymMatrix s);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  const SymMatrix& matrix() const noexcept { return s_; }

 private:
  std::size_t n_;
  std::size_t m_;
  SymMatrix s_;
};

/// blocks[i][j] is the m x m block Phi(E_ij). Throws kBlockSymmetry when
/// blocks[j][i] differs from blocks[i][j]^T by more than eps_sym.
ChoiMatrix choi_from_blocks(std::size_t n, std::size_t m,
                            const std::vector<std::vector<Eigen::MatrixXd>>& blocks,
                            const ToleranceConfig& tol = {});

/// Phi(X) = sum_k K X K^dagger. Trace preservation is not assumed.
/// Throws kNonRealChoi if any Choi entry has |imag| > eps_sym.
ChoiMatrix choi_from_kraus(std::size_t n, std::size_t m,
                           const std::vector<Eigen::MatrixXcd>& kraus,
                           const ToleranceConfig& tol = {});

/// J_ij, 0-based. Throws kIndex.
Eigen::MatrixXd block(const ChoiMatrix& j, std::size_t row, std::size_t col);

struct TraceCheck {
  bool ok = false;
  std::size_t worst_row = 0;
  std::size_t worst_col = 0;
  double worst_deviation = 0.0;
};

/// tr(J_ij) == delta_ij within eps_zero for all i, j.
TraceCheck check_trace_conditions(const ChoiMatrix& j,
                                  const ToleranceConfig& tol = {});

/// Sends interleaved index 2i + a to i (a = 0) or n + i (a = 1).
Permutation interleave_to_block_perm(std::size_t n);

/// A = [[diag(d0), b], [b^T, diag(d1)]] of size 2n.
struct BlockForm {
  Eigen::VectorXd d0;
  Eigen::VectorXd d1;
  Eigen::MatrixXd b;

  std::size_t n() const noexcept { return static_cast<std::size_t>(d0.size()); }
  /// The assembled 2n x 2n matrix.
  SymMatrix assemble() const;
};

/// Reorders a qubit-output Choi matrix into block form, verifying the
/// off-diagonal zeros that trace preservation and nonnegativity force on
/// the diagonal of every block.
///
/// Throws kNotQubitOutput (m != 2), kForcedZeroViolation (some |a_ij| or
/// |d_ij|, i != j, exceeds eps_zero + eps_nonneg) or
/// kTraceConditionViolation (some |a_ii + d_ii - 1| > eps_zero).
BlockForm to_block_form(const ChoiMatrix& j, const ToleranceConfig& tol = {});

/// Largest |a_ij|, |d_ij| over i != j, with no thresholding.
double forced_zero_deviation(const ChoiMatrix& j);

/// Inverse of to_block_form: J = P^T A P with n = bf.n(), m = 2.
ChoiMatrix from_block_form(const BlockForm& bf);

}  // namespace choicone
