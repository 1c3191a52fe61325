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

// Text formats. Indices that appear in reports are 1-based; all schema
// violations throw Error(kParse).
//
//   matrix       {"r": int, "entries": [r*r reals, row-major]}
//   channel      {"n": int, "m": int, "choi": matrix}
//                {"n": int, "m": int, "kraus": [[[ [re, im], ... ], ...], ...]}
//   block form   {"n": int, "d0": [...], "d1": [...], "b": [n*n reals, row-major]}
//   certificate  {"r": int, "vectors": [[r reals], ...], "residual": real,
//                 "strategy": string}

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "choicone/choi.hpp"
#include "choicone/classify.hpp"
#include "choicone/cpfact.hpp"
#include "choicone/matcore.hpp"

namespace choicone::io {

using nlohmann::json;

json to_json(const SymMatrix& s);
SymMatrix matrix_from_json(const json& j, const ToleranceConfig& tol = {});

/// r rows of r comma-separated reals; blank lines are ignored.
SymMatrix matrix_from_csv(std::string_view text, const ToleranceConfig& tol = {});
std::string to_csv(const SymMatrix& s);

json to_json(const ChoiMatrix& c);
json kraus_to_json(std::size_t n, std::size_t m, const std::vector<Eigen::MatrixXcd>& kraus);
/// Accepts the "choi" and "kraus" channel forms and the block-form object.
ChoiMatrix channel_from_json(const json& j, const ToleranceConfig& tol = {});

json to_json(const BlockForm& bf);
BlockForm blockform_from_json(const json& j);

json to_json(const CpCertificate& c, std::string_view strategy = {});
CpCertificate certificate_from_json(const json& j);

json to_json(const ClassificationReport& rep);
json to_json(const FactorOutcome& out);

}  // namespace choicone::io
