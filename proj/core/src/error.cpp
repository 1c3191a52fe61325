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

#include "choicone/error.hpp"

#include <cmath>

#include "choicone/tolerance.hpp"

namespace choicone {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kAsymmetry: return "AsymmetryError";
    case ErrorCode::kNonFinite: return "NonFiniteError";
    case ErrorCode::kConvergence: return "ConvergenceError";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kNonPositiveScale: return "NonPositiveScale";
    case ErrorCode::kInvalidTolerance: return "InvalidTolerance";
    case ErrorCode::kDimension: return "DimensionError";
    case ErrorCode::kIndex: return "IndexError";
    case ErrorCode::kBlockSymmetry: return "BlockSymmetryError";
    case ErrorCode::kNonRealChoi: return "NonRealChoiError";
    case ErrorCode::kForcedZeroViolation: return "ForcedZeroViolation";
    case ErrorCode::kTraceConditionViolation: return "TraceConditionViolation";
    case ErrorCode::kNotQubitOutput: return "NotQubitOutput";
    case ErrorCode::kNotAForest: return "NotAForest";
    case ErrorCode::kNegativeSchurUpdate: return "NegativeSchurUpdate";
    case ErrorCode::kNotDiagonallyDominant: return "NotDiagonallyDominant";
    case ErrorCode::kZeroDiagonalNonzeroRow: return "ZeroDiagonalNonzeroRow";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kPipelineExhausted: return "PipelineExhausted";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Error";
}

void ToleranceConfig::validate() const {
  for (double v : {eps_sym, eps_psd, eps_nonneg, eps_zero, eps_residual}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidTolerance,
                  "tolerances must be finite and nonnegative");
    }
  }
}

}  // namespace choicone
