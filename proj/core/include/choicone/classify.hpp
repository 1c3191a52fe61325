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
#include <optional>
#include <string>
#include <string_view>

#include "choicone/choi.hpp"
#include "choicone/cpfact.hpp"
#include "choicone/matcore.hpp"

namespace choicone {

enum class CpStatus { kCertified, kRefuted, kUnknown };
enum class RefutationReason { kNotPsd, kNegativeEntry };

std::string_view to_string(CpStatus s) noexcept;
std::string_view to_string(RefutationReason r) noexcept;

/// Why a matrix cannot be completely positive. Only failures of double
/// nonnegativity are ever reported; CP implies DNN.
struct Refutation {
  RefutationReason reason = RefutationReason::kNegativeEntry;
  EntryRef entry;                        // kNegativeEntry: the minimum entry
  double min_eigenvalue = 0.0;
  std::optional<Eigen::VectorXd> witness;  // kNotPsd: v with v^T S v < 0
};

/// Returns a refutation iff is_dnn fails. A negative entry takes precedence
/// when both conditions fail.
std::optional<Refutation> refute_cp(const SymMatrix& s, const ToleranceConfig& tol = {});

struct StageTimings {
  double trace_ms = 0.0;
  double dnn_ms = 0.0;
  double factor_ms = 0.0;
};

struct ClassificationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_trace_preserving = false;
  TraceCheck trace;
  bool is_dnn = false;  // CPDNN verdict
  double min_eigenvalue = 0.0;
  bool near_boundary = false;
  CpStatus cp_status = CpStatus::kUnknown;  // CPCP verdict
  std::optional<CpCertificate> certificate;
  std::optional<Refutation> refutation;
  std::string strategy;
  std::size_t iterations = 0;
  StageTimings timings;
};

struct PipelineResult {
  CpCertificate certificate;  // verified against the Choi matrix
  std::string strategy;
  std::size_t iterations = 0;
  bool near_boundary = false;
};

/// Certifies a trace-preserving qubit-output Choi matrix that is DNN:
/// reorder to block form, confirm the bipartite support, factor, map the
/// certificate back and verify it against the original matrix.
///
/// Near-boundary inputs (smallest eigenvalue within the PSD band) are
/// verified against 10 * eps_residual.
///
/// Throws kHypothesisViolation when the input is not qubit-output, DNN and
/// trace-preserving, and kPipelineExhausted if no engine certifies it.
PipelineResult qubit_output_pipeline(const ChoiMatrix& j, const ToleranceConfig& tol = {},
                                     const FactorParams& params = {});

/// CPDNN and CPCP verdicts via the Choi matrix. Qubit-output channels that
/// are trace-preserving and DNN always come back Certified.
ClassificationReport classify_channel(const ChoiMatrix& j, const ToleranceConfig& tol = {},
                                      const FactorParams& params = {});

}  // namespace choicone
