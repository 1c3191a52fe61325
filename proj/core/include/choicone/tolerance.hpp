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

namespace choicone {

/// Floating-point thresholds shared by every cone test.
///
/// eps_psd is relative: a matrix is accepted as PSD when its smallest
/// eigenvalue is at least -eps_psd * max(1, |lambda|_max). All other fields
/// are absolute.
struct ToleranceConfig {
  double eps_sym = 1e-10;       ///< max tolerated input asymmetry
  double eps_psd = 1e-9;        ///< relative eigenvalue floor
  double eps_nonneg = 1e-10;    ///< entry floor
  double eps_zero = 1e-10;      ///< support / edge threshold
  double eps_residual = 1e-8;   ///< certificate residual bound

  /// Throws Error(kInvalidTolerance) unless all fields are finite and >= 0.
  void validate() const;
};

}  // namespace choicone
