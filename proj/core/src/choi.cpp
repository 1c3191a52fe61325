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

#include "choicone/choi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "choicone/error.hpp"

namespace choicone {

using Eigen::Index;

ChoiMatrix::ChoiMatrix(std::size_t n, std::size_t m, SymMatrix s)
    : n_(n), m_(m), s_(std::move(s)) {
  if (n == 0 || m == 0 || s_.r() != n * m) {
    throw Error(ErrorCode::kDimension,
                "Choi matrix size must equal n * m");
  }
}

ChoiMatrix choi_from_blocks(std::size_t n, std::size_t m,
                            const std::vector<std::vector<Eigen::MatrixXd>>& blocks,
                            const ToleranceConfig& tol) {
  if (n == 0 || m == 0 || blocks.size() != n) {
    throw Error(ErrorCode::kDimension, "expected n x n blocks");
  }
  const auto mi = static_cast<Index>(m);
  for (const auto& row : blocks) {
    if (row.size() != n) throw Error(ErrorCode::kDimension, "expected n x n blocks");
    for (const auto& blk : row)
      if (blk.rows() != mi || blk.cols() != mi)
        throw Error(ErrorCode::kDimension, "blocks must be m x m");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double dev = (blocks[j][i] - blocks[i][j].transpose()).cwiseAbs().maxCoeff();
      if (dev > tol.eps_sym) {
        throw Error(ErrorCode::kBlockSymmetry,
                    "block (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") is not the transpose of block (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");
      }
    }
  }
  const auto size = static_cast<Index>(n * m);
  Eigen::MatrixXd full(size, size);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      full.block(static_cast<Index>(i) * mi, static_cast<Index>(j) * mi, mi, mi) =
          blocks[i][j];
  return ChoiMatrix(n, m, SymMatrix::from_matrix(full, tol));
}

ChoiMatrix choi_from_kraus(std::size_t n, std::size_t m,
                           const std::vector<Eigen::MatrixXcd>& kraus,
                           const ToleranceConfig& tol) {
  if (n == 0 || m == 0) throw Error(ErrorCode::kDimension, "n and m must be positive");
  const auto ni = static_cast<Index>(n);
  const auto mi = static_cast<Index>(m);
  // J = sum_k vec(K) vec(K)^dagger with vec stacking (i, a) -> K(a, i).
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(ni * mi, ni * mi);
  for (const auto& k : kraus) {
    if (k.rows() != mi || k.cols() != ni) {
      throw Error(ErrorCode::kDimension, "Kraus operators must be m x n");
    }
    Eigen::VectorXcd v(ni * mi);
    for (Index i = 0; i < ni; ++i)
      for (Index a = 0; a < mi; ++a) v(i * mi + a) = k(a, i);
    full.noalias() += v * v.adjoint();
  }
  const double imag = full.imag().cwiseAbs().maxCoeff();
  if (imag > tol.eps_sym) {
    throw Error(ErrorCode::kNonRealChoi,
                "Choi matrix has imaginary part " + std::to_string(imag));
  }
  return ChoiMatrix(n, m, SymMatrix::from_matrix(full.real(), tol));
}

Eigen::MatrixXd block(const ChoiMatrix& j, std::size_t row, std::size_t col) {
  if (row >= j.n() || col >= j.n()) throw Error(ErrorCode::kIndex, "block index out of range");
  const auto m = static_cast<Index>(j.m());
  return j.matrix().matrix().block(static_cast<Index>(row) * m,
                                   static_cast<Index>(col) * m, m, m);
}

TraceCheck check_trace_conditions(const ChoiMatrix& j, const ToleranceConfig& tol) {
  TraceCheck out;
  for (std::size_t r = 0; r < j.n(); ++r) {
    for (std::size_t c = 0; c < j.n(); ++c) {
      const double dev = std::abs(block(j, r, c).trace() - (r == c ? 1.0 : 0.0));
      if (dev > out.worst_deviation) out = {false, r, c, dev};
    }
  }
  out.ok = out.worst_deviation <= tol.eps_zero;
  return out;
}

Permutation interleave_to_block_perm(std::size_t n) {
  std::vector<std::size_t> image(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    image[2 * i] = i;
    image[2 * i + 1] = n + i;
  }
  return Permutation(std::move(image));
}

SymMatrix BlockForm::assemble() const {
  const Index nn = d0.size();
  if (d1.size() != nn || b.rows() != nn || b.cols() != nn) {
    throw Error(ErrorCode::kDimension, "inconsistent block-form sizes");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * nn, 2 * nn);
  a.topLeftCorner(nn, nn) = d0.asDiagonal();
  a.bottomRightCorner(nn, nn) = d1.asDiagonal();
  a.topRightCorner(nn, nn) = b;
  a.bottomLeftCorner(nn, nn) = b.transpose();
  return SymMatrix::from_matrix(a);
}

double forced_zero_deviation(const ChoiMatrix& j) {
  if (j.m() != 2) throw Error(ErrorCode::kNotQubitOutput, "output dimension must be 2");
  double worst = 0.0;
  const SymMatrix& s = j.matrix();
  for (std::size_t r = 0; r < j.n(); ++r) {
    for (std::size_t c = 0; c < j.n(); ++c) {
      if (r == c) continue;
      worst = std::max({worst, std::abs(s(2 * r, 2 * c)), std::abs(s(2 * r + 1, 2 * c + 1))});
    }
  }
  return worst;
}

BlockForm to_block_form(const ChoiMatrix& j, const ToleranceConfig& tol) {
  if (j.m() != 2) throw Error(ErrorCode::kNotQubitOutput, "output dimension must be 2");
  const std::size_t n = j.n();

  // Off-diagonal a_ij + d_ij = 0 with a_ij, d_ij >= -eps_nonneg bounds each
  // by eps_zero + eps_nonneg.
  const double zero_dev = forced_zero_deviation(j);
  if (zero_dev > tol.eps_zero + tol.eps_nonneg) {
    throw Error(ErrorCode::kForcedZeroViolation,
                "off-diagonal block diagonal entry of magnitude " +
                    std::to_string(zero_dev) + " should vanish");
  }

  const SymMatrix a = permute_congruence(j.matrix(), interleave_to_block_perm(n));
  const auto ni = static_cast<Index>(n);
  BlockForm bf;
  bf.d0 = a.matrix().topLeftCorner(ni, ni).diagonal();
  bf.d1 = a.matrix().bottomRightCorner(ni, ni).diagonal();
  bf.b = a.matrix().topRightCorner(ni, ni);
  for (Index i = 0; i < ni; ++i) {
    const double dev = std::abs(bf.d0(i) + bf.d1(i) - 1.0);
    if (dev > tol.eps_zero) {
      throw Error(ErrorCode::kTraceConditionViolation,
                  "diagonal block " + std::to_string(i + 1) + " has trace deviation " +
                      std::to_string(dev));
    }
  }
  return bf;
}

ChoiMatrix from_block_form(const BlockForm& bf) {
  const SymMatrix a = bf.assemble();
  const std::size_t n = bf.n();
  return ChoiMatrix(n, 2, permute_congruence(a, interleave_to_block_perm(n).inverse()));
}

}  // namespace choicone
