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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "choicone/error.hpp"
#include "choicone/matcore.hpp"
#include "choicone/random.hpp"
#include "choicone/sampler.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace choicone;

using testing::code_of;
using testing::mat;
using testing::random_perm;
using testing::random_symmetric;

TEST_CASE("sym_from_entries") {
  SUBCASE("already symmetric input is unchanged") {
    const SymMatrix s = mat(2, {1, 0.5, 0.5, 1});
    CHECK(s(0, 1) == 0.5);
    CHECK(s(1, 0) == 0.5);
    CHECK(s.input_asymmetry() == 0.0);
  }
  SUBCASE("sub-tolerance asymmetry is averaged") {
    const SymMatrix s = mat(2, {1, 0.5 + 1e-12, 0.5, 1});
    CHECK(s(0, 1) == s(1, 0));
    CHECK(s(0, 1) == doctest::Approx(0.5 + 5e-13).epsilon(1e-15));
    CHECK(s.input_asymmetry() == doctest::Approx(1e-12).epsilon(1e-3));
  }
  SUBCASE("asymmetry above eps_sym is rejected") {
    CHECK(code_of([] { mat(2, {1, 2, 0, 1}); }) == ErrorCode::kAsymmetry);
  }
  SUBCASE("non-finite and mis-sized inputs") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(code_of([&] { mat(2, {1, nan, nan, 1}); }) == ErrorCode::kNonFinite);
    CHECK(code_of([] { mat(2, {1, 0, 0}); }) == ErrorCode::kDimension);
    CHECK(code_of([] { mat(0, {}); }) == ErrorCode::kDimension);
  }
}

TEST_CASE("min_eigenvalue") {
  CHECK(min_eigenvalue(mat(2, {2, 1, 1, 2})) == doctest::Approx(1.0));
  CHECK(min_eigenvalue(mat(2, {1, 2, 2, 1})) == doctest::Approx(-1.0));
  CHECK(min_eigenvalue(SymMatrix::identity(5)) == doctest::Approx(1.0));
}

TEST_CASE("is_psd") {
  CHECK(is_psd(mat(2, {2, 1, 1, 2})).is_psd);
  CHECK_FALSE(is_psd(mat(2, {2, 1, 1, 2})).witness.has_value());
  CHECK(is_psd(SymMatrix::zero(3)).is_psd);

  const SymMatrix s = mat(2, {1, 2, 2, 1});
  const PsdResult res = is_psd(s);
  REQUIRE_FALSE(res.is_psd);
  REQUIRE(res.witness.has_value());
  const Eigen::VectorXd& v = *res.witness;
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK(v.dot(s.matrix() * v) == doctest::Approx(-1.0));
  CHECK(std::abs(v(0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(v(0) == doctest::Approx(-v(1)));

  SUBCASE("relative floor scales with the spectrum") {
    // lambda_min = -1e-7 passes when |lambda|_max = 1e3 (floor -1e-6).
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 0) = 1e3;
    m(1, 1) = -1e-7;
    CHECK(is_psd(SymMatrix::from_matrix(m)).is_psd);
    m(0, 0) = 1.0;
    CHECK_FALSE(is_psd(SymMatrix::from_matrix(m)).is_psd);
  }
}

TEST_CASE("is_psd agrees with the principal-minor oracle") {
  Rng rng(11);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<Eigen::Index>(1 + rng.below(5));
    Eigen::MatrixXd m = random_symmetric(rng, r);
    if (rng.bernoulli(0.5)) m = m * m.transpose();  // PSD half the time
    const SymMatrix s = SymMatrix::from_matrix(m);
    // Skip instances too close to the boundary for either test to be decisive.
    if (std::abs(min_eigenvalue(s)) < 1e-6) continue;
    CHECK(is_psd(s).is_psd == oracle::psd_by_minors(m, 1e-12));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("is_dnn") {
  const DnnReport ok = is_dnn(mat(2, {1, 0.5, 0.5, 1}));
  CHECK(ok.verdict);
  CHECK(ok.is_psd);
  CHECK(ok.is_nonneg);

  const DnnReport neg = is_dnn(mat(2, {1, -0.1, -0.1, 1}));
  CHECK_FALSE(neg.verdict);
  CHECK(neg.is_psd);
  CHECK_FALSE(neg.is_nonneg);
  CHECK(neg.worst_entry.row == 0);
  CHECK(neg.worst_entry.col == 1);
  CHECK(neg.worst_entry.value == -0.1);

  const DnnReport notpsd = is_dnn(mat(2, {1, 2, 2, 1}));
  CHECK_FALSE(notpsd.verdict);
  CHECK_FALSE(notpsd.is_psd);
  CHECK(notpsd.is_nonneg);
}

TEST_CASE("is_dnn is monotone when eps_nonneg tightens") {
  Rng rng(5);
  ToleranceConfig loose, tight;
  loose.eps_nonneg = 1e-3;
  tight.eps_nonneg = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<Eigen::Index>(1 + rng.below(5));
    Eigen::MatrixXd g(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j) g(i, j) = rng.uniform(-0.05, 1.0);
    const SymMatrix s = SymMatrix::from_matrix(g * g.transpose() / static_cast<double>(r));
    if (is_dnn(s, tight).verdict) CHECK(is_dnn(s, loose).verdict);
  }
}

TEST_CASE("Gram matrices of nonnegative vectors are DNN") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t r = 1 + seed % 8;
    const CpSample cs = sample_cp(r, 1 + seed % 11, {seed, 0.6, 0.0});
    CHECK(is_dnn(cs.matrix).verdict);
  }
}

TEST_CASE("permute_congruence") {
  const SymMatrix s = mat(2, {1, 0, 0, 2});
  CHECK(permute_congruence(s, Permutation::identity(2)) == s);
  CHECK(permute_congruence(s, Permutation({1, 0})) == mat(2, {2, 0, 0, 1}));

  SUBCASE("interleave-to-block reorder of J(id_2) is J(id_2)") {
    // (1,1),(1,2),(2,1),(2,2) -> (1,1),(2,1),(1,2),(2,2) fixes both
    // nonzero coordinates of v = (1,0,0,1).
    const SymMatrix jid = mat(4, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1});
    const Permutation shuffle({0, 2, 1, 3});
    const Eigen::MatrixXd p = oracle::perm_matrix(shuffle.image());
    const SymMatrix a = permute_congruence(jid, shuffle);
    CHECK((a.matrix() - p * jid.matrix() * p.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a == jid);
  }

  SUBCASE("matches the explicit P S P^T and keeps the spectrum") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + rng.below(7);
      const SymMatrix s2 = SymMatrix::from_matrix(random_symmetric(rng, static_cast<Eigen::Index>(r)));
      const Permutation perm = random_perm(rng, r);
      const SymMatrix a = permute_congruence(s2, perm);
      const Eigen::MatrixXd p = oracle::perm_matrix(perm.image());
      CHECK((a.matrix() - p * s2.matrix() * p.transpose()).cwiseAbs().maxCoeff() == 0.0);
      const Eigen::VectorXd ev1 = eigensystem(s2).values, ev2 = eigensystem(a).values;
      CHECK((ev1 - ev2).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, ev1.cwiseAbs().maxCoeff()));
    }
  }

  CHECK(code_of([] { Permutation({0, 0}); }) == ErrorCode::kInvalidPermutation);
  CHECK(code_of([] { Permutation({0, 2}); }) == ErrorCode::kInvalidPermutation);
  CHECK(code_of([&] { permute_congruence(s, Permutation::identity(3)); }) ==
        ErrorCode::kInvalidPermutation);
}

TEST_CASE("diag_congruence") {
  const SymMatrix ones = mat(2, {1, 1, 1, 1});
  const std::vector<double> unit{1, 1};
  CHECK(diag_congruence(ones, unit) == ones);
  const std::vector<double> d{2, 1};
  CHECK(diag_congruence(ones, d) == mat(2, {4, 2, 2, 1}));

  SUBCASE("1/sqrt(a_ii) scaling gives unit diagonal") {
    const SymMatrix s = mat(3, {4, 1, 0.5, 1, 9, 2, 0.5, 2, 0.25});
    std::vector<double> inv;
    for (std::size_t i = 0; i < 3; ++i) inv.push_back(1.0 / std::sqrt(s(i, i)));
    const SymMatrix u = diag_congruence(s, inv);
    for (std::size_t i = 0; i < 3; ++i) CHECK(u(i, i) == doctest::Approx(1.0));
  }

  SUBCASE("scaling then unscaling recovers S") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + rng.below(6);
      const SymMatrix s = SymMatrix::from_matrix(random_symmetric(rng, static_cast<Eigen::Index>(r)));
      std::vector<double> dd(r), di(r);
      for (std::size_t i = 0; i < r; ++i) {
        dd[i] = std::exp(rng.uniform(-3.0, 3.0));
        di[i] = 1.0 / dd[i];
      }
      const SymMatrix back = diag_congruence(diag_congruence(s, dd), di);
      CHECK((back.matrix() - s.matrix()).norm() <= 1e-12 * std::max(1.0, s.matrix().norm()));
    }
  }

  const std::vector<double> bad{1, 0};
  CHECK(code_of([&] { diag_congruence(ones, bad); }) == ErrorCode::kNonPositiveScale);
}

TEST_CASE("tolerance validation") {
  ToleranceConfig tol;
  CHECK_NOTHROW(tol.validate());
  tol.eps_psd = -1.0;
  CHECK(code_of([&] { tol.validate(); }) == ErrorCode::kInvalidTolerance);
  tol.eps_psd = std::numeric_limits<double>::infinity();
  CHECK(code_of([&] { tol.validate(); }) == ErrorCode::kInvalidTolerance);
}
