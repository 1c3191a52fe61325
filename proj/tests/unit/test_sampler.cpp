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

#include <cmath>
#include <optional>
#include <vector>

#include "choicone/choi.hpp"
#include "choicone/cpfact.hpp"
#include "choicone/graph.hpp"
#include "choicone/random.hpp"
#include "choicone/sampler.hpp"
#include "support/testing.hpp"

using namespace choicone;
using testing::code_of;

TEST_CASE("Rng is reproducible") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    if (i == 0) CHECK(x != c.next());
  }
  CHECK(Rng::derive(1, 0).next() != Rng::derive(1, 1).next());
  CHECK(Rng::derive(1, 0).next() == Rng::derive(1, 0).next());
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK((x >= 0.0 && x < 1.0));
    CHECK(u.below(5) < 5);
  }
}

TEST_CASE("sample_blockform_channel") {
  ToleranceConfig tol;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const SampleParams p{seed, static_cast<double>(seed % 5) / 4.0, 0.3};
    const BlockForm bf = sample_blockform_channel(n, p);
    REQUIRE(bf.n() == n);
    CHECK((bf.d0 + bf.d1 - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(bf.d0.minCoeff() >= 0.0);
    CHECK(bf.d1.minCoeff() >= 0.0);
    CHECK(bf.b.minCoeff() >= 0.0);
    CHECK(is_psd(bf.assemble(), tol).is_psd);
    CHECK(check_trace_conditions(from_block_form(bf)).ok);
    if (p.density == 0.0) CHECK(bf.b.isZero(0.0));
  }

  SUBCASE("boundary draws land on the PSD boundary") {
    int boundary = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const BlockForm bf = sample_blockform_channel(4, {seed, 0.8, 1.0});
      if (bf.b.isZero(0.0)) continue;
      CHECK(std::abs(min_eigenvalue(bf.assemble())) <= 1e-9);
      ++boundary;
    }
    CHECK(boundary > 80);
  }

  SUBCASE("bit-for-bit determinism") {
    const BlockForm a = sample_blockform_channel(5, {99, 0.5, 0.5});
    const BlockForm b = sample_blockform_channel(5, {99, 0.5, 0.5});
    CHECK(a.d0 == b.d0);
    CHECK(a.b == b.b);
  }
}

TEST_CASE("sample_cp") {
  const CpSample empty = sample_cp(3, 0, {1, 0.5, 0.0});
  CHECK(empty.matrix == SymMatrix::zero(3));
  CHECK(empty.certificate.s() == 0);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t r = 1 + seed % 10;
    const CpSample cs = sample_cp(r, seed % 12, {seed, 0.6, 0.0});
    CHECK(is_dnn(cs.matrix).verdict);
    const VerifyResult v = verify_certificate(cs.matrix, cs.certificate);
    CHECK(v.ok);
    CHECK(v.residual <= 1e-15);
  }
}

TEST_CASE("sample_dnn") {
  const SymMatrix one = sample_dnn(1, {5, 0.5, 0.0});
  CHECK(one.r() == 1);
  CHECK(one(0, 0) >= 0.0);

  int with_zeros = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t r = 1 + seed % 7;
    const SymMatrix s = sample_dnn(r, {seed, 0.5, 0.0});
    CHECK(is_dnn(s).verdict);
    with_zeros += s.matrix().minCoeff() == 0.0;
  }
  CHECK(with_zeros > 10);  // the orthant projection is active on a fair share of draws

  const SymMatrix a = sample_dnn(5, {8, 0.5, 0.0}), b = sample_dnn(5, {8, 0.5, 0.0});
  CHECK(a == b);
}

TEST_CASE("sample_forest_dnn") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SymMatrix s = sample_forest_dnn(1 + seed % 10, {seed, 0.6, 0.3});
    CHECK(is_dnn(s).verdict);
    CHECK(is_forest(support_graph(s, 1e-10)));
  }
}

TEST_CASE("sample_kraus_channel") {
  const auto u = sample_kraus_channel(2, 2, 1, {3, 0.5, 0.0});
  REQUIRE(u.size() == 1);
  CHECK((u[0].adjoint() * u[0] - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-10);
  CHECK((u[0] * u[0].adjoint() - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-10);

  int nonreal = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 4, m = 2 + seed % 2, k = (n + m - 1) / m + seed % 2;
    const auto kraus = sample_kraus_channel(n, m, k, {seed, 0.5, 0.0});
    REQUIRE(kraus.size() == k);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& kk : kraus) {
      CHECK(kk.rows() == static_cast<Eigen::Index>(m));
      CHECK(kk.cols() == static_cast<Eigen::Index>(n));
      sum += kk.adjoint() * kk;
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(sum.rows(), sum.cols())).norm() <= 1e-10);
    std::optional<ChoiMatrix> j;
    try {
      j = choi_from_kraus(n, m, kraus);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNonRealChoi);
      ++nonreal;
    }
    if (j) CHECK(check_trace_conditions(*j).ok);
  }
  CHECK(nonreal > 50);
  CHECK(code_of([] { sample_kraus_channel(5, 2, 2, {1, 0.5, 0.0}); }) == ErrorCode::kDimension);
}
