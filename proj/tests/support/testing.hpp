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

#include <doctest.h>

#include <Eigen/Dense>

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "choicone/error.hpp"
#include "choicone/matcore.hpp"
#include "choicone/random.hpp"

namespace testing {

/// Runs `fn` and returns the code of the choicone::Error it throws.
template <class F>
choicone::ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const choicone::Error& e) {
    return e.code();
  }
  FAIL("expected choicone::Error");
  return choicone::ErrorCode::kParse;
}

inline Eigen::MatrixXd random_symmetric(choicone::Rng& rng, Eigen::Index r) {
  Eigen::MatrixXd m(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) m(i, j) = rng.normal();
  return m + m.transpose();
}

inline choicone::Permutation random_perm(choicone::Rng& rng, std::size_t r) {
  std::vector<std::size_t> img(r);
  std::iota(img.begin(), img.end(), std::size_t{0});
  for (std::size_t i = r; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  return choicone::Permutation(img);
}

inline choicone::SymMatrix mat(std::size_t r, std::vector<double> e,
                               const choicone::ToleranceConfig& tol = {}) {
  return choicone::sym_from_entries(r, e, tol);
}

}  // namespace testing
