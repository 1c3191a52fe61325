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
#include <span>
#include <vector>

#include "choicone/tolerance.hpp"

namespace choicone {

/// Dense real symmetric matrix. Entries are exactly symmetric after
/// construction; the asymmetry of the raw input is kept for reporting.
class SymMatrix {
 public:
  /// Symmetrizes (M + M^T) / 2. Throws kNonFinite, kDimension, or
  /// kAsymmetry when max |M_ij - M_ji| > tol.eps_sym.
  static SymMatrix from_matrix(const Eigen::MatrixXd& m,
                               const ToleranceConfig& tol = {});

  static SymMatrix zero(std::size_t r);
  static SymMatrix identity(std::size_t r);

  std::size_t r() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& matrix() const noexcept { return m_; }
  double input_asymmetry() const noexcept { return asymmetry_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  SymMatrix(Eigen::MatrixXd m, double asymmetry)
      : m_(std::move(m)), asymmetry_(asymmetry) {}

  Eigen::MatrixXd m_;
  double asymmetry_ = 0.0;
};

/// Builds an r x r matrix from row-major entries.
SymMatrix sym_from_entries(std::size_t r, std::span<const double> entries,
                           const ToleranceConfig& tol = {});

/// A bijection on {0, ..., r-1}. image()[i] is where index i is sent.
class Permutation {
 public:
  /// Throws kInvalidPermutation unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t r);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

/// Symmetric eigendecomposition; throws kConvergence if the solver fails.
Eigensystem eigensystem(const SymMatrix& s);

double min_eigenvalue(const SymMatrix& s);

struct PsdResult {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
  std::optional<Eigen::VectorXd> witness;  // unit v with v^T S v < 0

  explicit operator bool() const noexcept { return is_psd; }
};

PsdResult is_psd(const SymMatrix& s, const ToleranceConfig& tol = {});

struct EntryRef {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

struct DnnReport {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  std::optional<Eigen::VectorXd> psd_witness;
  bool is_nonneg = false;
  EntryRef worst_entry;  // minimum entry, first in row-major order
  bool verdict = false;  // is_psd && is_nonneg
};

DnnReport is_dnn(const SymMatrix& s, const ToleranceConfig& tol = {});

/// True when the smallest eigenvalue lies within the PSD tolerance band
/// around zero (the factorization-sensitive boundary).
bool near_psd_boundary(const SymMatrix& s, const ToleranceConfig& tol = {});

/// Returns P S P^T, i.e. result(p[i], p[j]) == s(i, j).
SymMatrix permute_congruence(const SymMatrix& s, const Permutation& p);

/// Returns diag(d) S diag(d). Throws kNonPositiveScale unless every d_i > 0.
SymMatrix diag_congruence(const SymMatrix& s, std::span<const double> d);

}  // namespace choicone
