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
#include <vector>

#include "choicone/choi.hpp"
#include "choicone/cpfact.hpp"
#include "choicone/matcore.hpp"

namespace choicone {

/// Identical (params, generator) always produce bit-identical output.
struct SampleParams {
  std::uint64_t seed = 0;
  double density = 0.5;        ///< probability that an off-diagonal entry is drawn
  double boundary_bias = 0.0;  ///< probability of pushing to the PSD boundary
};

/// Block form of a trace-preserving qubit-output channel with DNN Choi matrix:
/// d0_i ~ U[0,1), d1_i = 1 - d0_i, B masked by density and scaled by
/// the largest PSD-preserving factor found by bisection when needed.
BlockForm sample_blockform_channel(std::size_t n, const SampleParams& p);

struct CpSample {
  SymMatrix matrix;
  CpCertificate certificate;
};

/// Gram matrix of s nonnegative vectors (entries U[0,1), masked by density).
CpSample sample_cp(std::size_t r, std::size_t s, const SampleParams& p);

/// Dykstra alternating projection between the PSD cone and the nonnegative
/// orthant, started from a Gaussian Gram matrix. Retries with derived
/// seeds; throws kConvergence after 10 failures.
SymMatrix sample_dnn(std::size_t r, const SampleParams& p, const ToleranceConfig& tol = {});

/// DNN matrix whose support graph is a random forest: a sum of two-entry
/// rank-one terms along forest edges plus a diagonal part. Vertex labels
/// are shuffled.
SymMatrix sample_forest_dnn(std::size_t r, const SampleParams& p);

/// Kraus operators of a random channel M_n -> M_m, sliced from a random
/// isometry (QR of a Gaussian km x n matrix), so sum_t K_t^dagger K_t = I.
/// Throws kDimension unless k * m >= n.
std::vector<Eigen::MatrixXcd> sample_kraus_channel(std::size_t n, std::size_t m,
                                                   std::size_t k, const SampleParams& p,
                                                   bool complex_entries = true);

}  // namespace choicone
