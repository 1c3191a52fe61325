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
#include <string>

#include "choicone/classify.hpp"
#include "choicone/json_io.hpp"
#include "choicone/sampler.hpp"
#include "support/testing.hpp"

using namespace choicone;
using io::json;
using testing::code_of;
using testing::mat;

TEST_CASE("matrix JSON") {
  const SymMatrix s = mat(2, {1, 0.5, 0.5, 2});
  const json j = io::to_json(s);
  CHECK(j == json::parse(R"({"r":2,"entries":[1.0,0.5,0.5,2.0]})"));
  CHECK(io::matrix_from_json(j) == s);
  CHECK(io::matrix_from_json(json::parse(R"({"r":2,"entries":[[1,0.5],[0.5,2]]})")) == s);

  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"r":2,"entries":[1,2,3]})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"entries":[1]})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"r":0,"entries":[]})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"r":1,"entries":["x"]})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"r":2,"entries":[1,2,0,1]})")); }) ==
        ErrorCode::kAsymmetry);
}

TEST_CASE("doubles survive a text round trip bit for bit") {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng.below(6);
    const SymMatrix s = sample_cp(r, 2 * r, {rng.next(), 0.7, 0.0}).matrix;
    CHECK(io::matrix_from_json(json::parse(io::to_json(s).dump())) == s);
    CHECK(io::matrix_from_csv(io::to_csv(s)) == s);
  }
}

TEST_CASE("matrix CSV") {
  CHECK(io::matrix_from_csv("1, 0.5\n0.5,1\n\n") == mat(2, {1, 0.5, 0.5, 1}));
  CHECK(io::matrix_from_csv("4\n") == mat(1, {4}));
  CHECK(io::matrix_from_csv("1e-3,0\r\n0,2\r\n") == mat(2, {1e-3, 0, 0, 2}));
  CHECK(code_of([] { io::matrix_from_csv("1,2\n3\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_csv("1,x\nx,1\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_csv(""); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::matrix_from_csv("1,,\n"); }) == ErrorCode::kParse);
}

TEST_CASE("channel JSON") {
  const json choi = json::parse(
      R"({"n":2,"m":2,"choi":{"r":4,"entries":[1,0,0,1,0,0,0,0,0,0,0,0,1,0,0,1]}})");
  const ChoiMatrix j = io::channel_from_json(choi);
  CHECK(j.n() == 2);
  CHECK(j.m() == 2);
  CHECK(io::to_json(j) == choi);

  const json kraus = json::parse(R"({"n":2,"m":2,"kraus":[[[[1,0],[0,0]],[[0,0],[1,0]]]]})");
  CHECK(io::channel_from_json(kraus).matrix() == j.matrix());
  const json plain = json::parse(R"({"n":2,"m":2,"kraus":[[[1,0],[0,1]]]})");
  CHECK(io::channel_from_json(plain).matrix() == j.matrix());

  const json phase = json::parse(R"({"n":2,"m":2,"kraus":[[[[1,0],[0,0]],[[0,0],[0,1]]]]})");
  CHECK(code_of([&] { io::channel_from_json(phase); }) == ErrorCode::kNonRealChoi);

  const json bf = json::parse(R"({"n":2,"d0":[1,0],"d1":[0,1],"b":[0,1,0,0]})");
  CHECK(io::channel_from_json(bf).matrix() == j.matrix());

  SUBCASE("kraus JSON round trip") {
    const auto ks = sample_kraus_channel(2, 2, 2, {5, 0.5, 0.0}, true);
    const json kj = io::kraus_to_json(2, 2, ks);
    const json back = json::parse(kj.dump());
    CHECK(back == kj);
  }
  CHECK(code_of([] {
          io::channel_from_json(json::parse(R"({"n":2,"m":2,"choi":{"r":2,"entries":[1,0,0,1]}})"));
        }) == ErrorCode::kParse);
  CHECK(code_of([] { io::channel_from_json(json::parse(R"({"n":2,"m":2})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::channel_from_json(json::parse(R"({"n":1,"m":2,"kraus":[[[1]]]})")); }) ==
        ErrorCode::kParse);
}

TEST_CASE("block form and certificate JSON") {
  const BlockForm bf = sample_blockform_channel(3, {4, 0.6, 0.0});
  const BlockForm back = io::blockform_from_json(json::parse(io::to_json(bf).dump()));
  CHECK(back.d0 == bf.d0);
  CHECK(back.d1 == bf.d1);
  CHECK(back.b == bf.b);
  CHECK(code_of([] { io::blockform_from_json(json::parse(R"({"n":2,"d0":[1],"d1":[0,1],"b":[0,0,0,0]})")); }) ==
        ErrorCode::kParse);

  const CpSample cs = sample_cp(3, 4, {2, 0.5, 0.0});
  const json cj = io::to_json(cs.certificate, "sampled");
  CHECK(cj.at("r") == 3);
  CHECK(cj.at("vectors").size() == 4);
  CHECK(cj.at("strategy") == "sampled");
  CHECK(io::certificate_from_json(json::parse(cj.dump())).vectors == cs.certificate.vectors);
  CHECK(code_of([] { io::certificate_from_json(json::parse(R"({"r":2,"vectors":[[1]]})")); }) ==
        ErrorCode::kParse);
  const json empty = json::parse(R"({"r":2,"vectors":[]})");
  CHECK(io::certificate_from_json(empty).s() == 0);
}

TEST_CASE("report JSON keys") {
  const ClassificationReport rep = classify_channel(ChoiMatrix(1, 2, mat(2, {1, -.1, -.1, 1})));
  const json j = io::to_json(rep);
  for (const char* key : {"n", "m", "is_trace_preserving", "trace_check", "is_dnn",
                          "min_eigenvalue", "near_boundary", "cp_status", "strategy",
                          "iterations", "certificate", "refutation", "timings_ms"})
    CHECK(j.contains(key));
  CHECK(j.at("cp_status") == "Refuted");
  CHECK(j.at("certificate").is_null());
  CHECK(j.at("refutation").at("reason") == "NegativeEntry");
  CHECK(j.at("refutation").at("entry") == json::array({1, 2}));
  CHECK(j.at("refutation").at("value") == -0.1);

  FactorOutcome failed;
  failed.strategy = "none";
  failed.reason = "NotDnn";
  const json fj = io::to_json(failed);
  CHECK(fj.at("status") == "Failed");
  CHECK(fj.at("reason") == "NotDnn");
  CHECK(fj.at("certificate").is_null());
}
