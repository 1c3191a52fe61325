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

#include "choicone/json_io.hpp"

#include <charconv>
#include <sstream>

#include "choicone/error.hpp"

namespace choicone::io {

using Eigen::Index;

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t positive_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    parse_error(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

double real(const json& v) {
  if (!v.is_number()) parse_error("expected a number");
  return v.get<double>();
}

// Flat row-major list or list of rows.
std::vector<double> flat_reals(const json& v) {
  if (!v.is_array()) parse_error("expected an array of reals");
  std::vector<double> out;
  for (const json& e : v) {
    if (e.is_array()) {
      for (const json& x : e) out.push_back(real(x));
    } else {
      out.push_back(real(e));
    }
  }
  return out;
}

Eigen::VectorXd vector_of(const json& v, std::size_t n, const char* what) {
  const std::vector<double> xs = flat_reals(v);
  if (xs.size() != n) parse_error(std::string(what) + " has the wrong length");
  return Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Index>(n));
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json row_major(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  return a;
}

}  // namespace

json to_json(const SymMatrix& s) {
  return {{"r", s.r()}, {"entries", row_major(s.matrix())}};
}

SymMatrix matrix_from_json(const json& j, const ToleranceConfig& tol) {
  const std::size_t r = positive_int(j, "r");
  const std::vector<double> entries = flat_reals(field(j, "entries"));
  if (entries.size() != r * r) parse_error("\"entries\" must hold r*r reals");
  return sym_from_entries(r, entries, tol);
}

SymMatrix matrix_from_csv(std::string_view text, const ToleranceConfig& tol) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      if (b == std::string::npos) parse_error("empty CSV cell");
      double v = 0.0;
      const char* first = cell.data() + b;
      const char* last = cell.data() + e + 1;
      const auto res = std::from_chars(first, last, v);
      if (res.ec != std::errc() || res.ptr != last) parse_error("bad CSV number: " + cell);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t r = rows.size();
  if (r == 0) parse_error("empty CSV matrix");
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != r) parse_error("CSV matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return sym_from_entries(r, flat, tol);
}

std::string to_csv(const SymMatrix& s) {
  std::string out;
  for (std::size_t i = 0; i < s.r(); ++i) {
    for (std::size_t j = 0; j < s.r(); ++j) {
      if (j) out += ',';
      out += json(s(i, j)).dump();
    }
    out += '\n';
  }
  return out;
}

json to_json(const ChoiMatrix& c) {
  return {{"n", c.n()}, {"m", c.m()}, {"choi", to_json(c.matrix())}};
}

json kraus_to_json(std::size_t n, std::size_t m, const std::vector<Eigen::MatrixXcd>& kraus) {
  json ks = json::array();
  for (const auto& k : kraus) {
    json rows = json::array();
    for (Index a = 0; a < k.rows(); ++a) {
      json row = json::array();
      for (Index i = 0; i < k.cols(); ++i) row.push_back({k(a, i).real(), k(a, i).imag()});
      rows.push_back(std::move(row));
    }
    ks.push_back(std::move(rows));
  }
  return {{"n", n}, {"m", m}, {"kraus", std::move(ks)}};
}

ChoiMatrix channel_from_json(const json& j, const ToleranceConfig& tol) {
  if (j.is_object() && j.contains("d0")) return from_block_form(blockform_from_json(j));
  const std::size_t n = positive_int(j, "n");
  const std::size_t m = positive_int(j, "m");
  if (j.contains("choi")) {
    SymMatrix s = matrix_from_json(j.at("choi"), tol);
    if (s.r() != n * m) parse_error("\"choi\" must be (n*m) x (n*m)");
    return ChoiMatrix(n, m, std::move(s));
  }
  const json& ks = field(j, "kraus");
  if (!ks.is_array()) parse_error("\"kraus\" must be an array");
  std::vector<Eigen::MatrixXcd> kraus;
  for (const json& k : ks) {
    if (!k.is_array() || k.size() != m) parse_error("each Kraus operator must have m rows");
    Eigen::MatrixXcd op(static_cast<Index>(m), static_cast<Index>(n));
    for (std::size_t a = 0; a < m; ++a) {
      const json& row = k[a];
      if (!row.is_array() || row.size() != n) parse_error("each Kraus row must have n entries");
      for (std::size_t i = 0; i < n; ++i) {
        const json& z = row[i];
        if (z.is_number()) {
          op(static_cast<Index>(a), static_cast<Index>(i)) = {real(z), 0.0};
        } else if (z.is_array() && z.size() == 2) {
          op(static_cast<Index>(a), static_cast<Index>(i)) = {real(z[0]), real(z[1])};
        } else {
          parse_error("Kraus entries must be [re, im] pairs");
        }
      }
    }
    kraus.push_back(std::move(op));
  }
  return choi_from_kraus(n, m, kraus, tol);
}

json to_json(const BlockForm& bf) {
  return {{"n", bf.n()}, {"d0", vector_json(bf.d0)}, {"d1", vector_json(bf.d1)},
          {"b", row_major(bf.b)}};
}

BlockForm blockform_from_json(const json& j) {
  const std::size_t n = positive_int(j, "n");
  BlockForm bf;
  bf.d0 = vector_of(field(j, "d0"), n, "\"d0\"");
  bf.d1 = vector_of(field(j, "d1"), n, "\"d1\"");
  const Eigen::VectorXd b = vector_of(field(j, "b"), n * n, "\"b\"");
  bf.b = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      b.data(), static_cast<Index>(n), static_cast<Index>(n));
  return bf;
}

json to_json(const CpCertificate& c, std::string_view strategy) {
  json vecs = json::array();
  for (Index t = 0; t < c.vectors.cols(); ++t) vecs.push_back(vector_json(c.vectors.col(t)));
  return {{"r", c.r()}, {"vectors", std::move(vecs)}, {"residual", c.residual},
          {"strategy", std::string(strategy)}};
}

CpCertificate certificate_from_json(const json& j) {
  const std::size_t r = positive_int(j, "r");
  const json& vecs = field(j, "vectors");
  if (!vecs.is_array()) parse_error("\"vectors\" must be an array");
  CpCertificate c{Eigen::MatrixXd(static_cast<Index>(r), static_cast<Index>(vecs.size())), 0.0};
  for (std::size_t t = 0; t < vecs.size(); ++t)
    c.vectors.col(static_cast<Index>(t)) = vector_of(vecs[t], r, "certificate vector");
  if (j.contains("residual")) c.residual = real(j.at("residual"));
  return c;
}

json to_json(const ClassificationReport& rep) {
  json out = {
      {"n", rep.n},
      {"m", rep.m},
      {"is_trace_preserving", rep.is_trace_preserving},
      {"trace_check",
       {{"ok", rep.trace.ok},
        {"worst_block", {rep.trace.worst_row + 1, rep.trace.worst_col + 1}},
        {"deviation", rep.trace.worst_deviation}}},
      {"is_dnn", rep.is_dnn},
      {"min_eigenvalue", rep.min_eigenvalue},
      {"near_boundary", rep.near_boundary},
      {"cp_status", std::string(to_string(rep.cp_status))},
      {"strategy", rep.strategy},
      {"iterations", rep.iterations},
      {"certificate", nullptr},
      {"refutation", nullptr},
      {"timings_ms",
       {{"trace", rep.timings.trace_ms},
        {"dnn", rep.timings.dnn_ms},
        {"factor", rep.timings.factor_ms}}},
  };
  if (rep.certificate) out["certificate"] = to_json(*rep.certificate, rep.strategy);
  if (rep.refutation) {
    const Refutation& ref = *rep.refutation;
    json r = {{"reason", std::string(to_string(ref.reason))},
              {"entry", {ref.entry.row + 1, ref.entry.col + 1}},
              {"value", ref.entry.value},
              {"min_eigenvalue", ref.min_eigenvalue},
              {"witness", nullptr}};
    if (ref.witness) r["witness"] = vector_json(*ref.witness);
    out["refutation"] = std::move(r);
  }
  return out;
}

json to_json(const FactorOutcome& out) {
  json j = {{"status", out.certified() ? "Certified" : "Failed"},
            {"strategy", out.strategy},
            {"reason", out.reason},
            {"iterations", out.iterations},
            {"infeasibility", out.infeasibility},
            {"certificate", nullptr}};
  if (out.certificate) j["certificate"] = to_json(*out.certificate, out.strategy);
  return j;
}

}  // namespace choicone::io
