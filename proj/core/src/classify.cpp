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

#include "choicone/classify.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "choicone/error.hpp"
#include "choicone/graph.hpp"

namespace choicone {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view to_string(CpStatus s) noexcept {
  switch (s) {
    case CpStatus::kCertified: return "Certified";
    case CpStatus::kRefuted: return "Refuted";
    case CpStatus::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(RefutationReason r) noexcept {
  return r == RefutationReason::kNotPsd ? "NotPsd" : "NegativeEntry";
}

std::optional<Refutation> refute_cp(const SymMatrix& s, const ToleranceConfig& tol) {
  DnnReport dnn = is_dnn(s, tol);
  if (dnn.verdict) return std::nullopt;
  Refutation ref;
  ref.entry = dnn.worst_entry;
  ref.min_eigenvalue = dnn.min_eigenvalue;
  if (!dnn.is_nonneg) {
    ref.reason = RefutationReason::kNegativeEntry;
  } else {
    ref.reason = RefutationReason::kNotPsd;
    ref.witness = std::move(dnn.psd_witness);
  }
  return ref;
}

PipelineResult qubit_output_pipeline(const ChoiMatrix& j, const ToleranceConfig& tol,
                                     const FactorParams& params) {
  if (j.m() != 2) {
    throw Error(ErrorCode::kHypothesisViolation, "NotQubitOutput: output dimension must be 2");
  }
  const DnnReport dnn = is_dnn(j.matrix(), tol);
  if (!dnn.verdict) {
    throw Error(ErrorCode::kHypothesisViolation, "NotDnn: Choi matrix is not doubly nonnegative");
  }
  const TraceCheck tc = check_trace_conditions(j, tol);
  if (!tc.ok) {
    throw Error(ErrorCode::kHypothesisViolation,
                "TraceConditionViolation: trace condition fails at block (" + std::to_string(tc.worst_row + 1) + "," +
                    std::to_string(tc.worst_col + 1) + ")");
  }

  PipelineResult result;
  result.near_boundary = near_psd_boundary(j.matrix(), tol);
  ToleranceConfig eff = tol;
  if (result.near_boundary) eff.eps_residual *= 10.0;

  // (1) block form with forced zeros verified
  BlockForm bf;
  try {
    bf = to_block_form(j, tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::kHypothesisViolation,
                std::string(e.name()) + ": " + e.what());
  }
  const std::size_t n = j.n();
  const SymMatrix a = bf.assemble();

  // (2) support graph two-colors as {0..n-1} | {n..2n-1}
  const SupportGraph g = support_graph(a, tol.eps_zero);
  const ColoringResult coloring = two_coloring(g);
  if (!coloring.bipartite()) {
    throw Error(ErrorCode::kHypothesisViolation, "block-form support graph is not bipartite");
  }
  for (std::size_t v = 0; v < 2 * n; ++v) {
    if (g.neighbors(v).empty()) continue;
    const Side expected = v < n ? Side::kLeft : Side::kRight;
    if (coloring.coloring->color[v] != expected) {
      throw Error(ErrorCode::kHypothesisViolation, "unexpected bipartition of block form");
    }
  }

  // (3) factor, with the general heuristic as backstop
  FactorOutcome outcome = factor_bipartite_blockform(bf, eff, params.bipartite);
  result.iterations = outcome.iterations;
  if (!outcome.certified()) {
    outcome = factor_alternating_projection(a, params.projection, eff);
    result.iterations += outcome.iterations;
  }
  if (!outcome.certified()) {
    throw Error(ErrorCode::kPipelineExhausted,
                "no engine certified a qubit-output DNN channel (infeasibility " +
                    std::to_string(outcome.infeasibility) + ")");
  }
  result.strategy = outcome.strategy;

  // (4) J = P^T A P
  CpCertificate cert =
      map_certificate_perm(*outcome.certificate, interleave_to_block_perm(n).inverse());

  // (5) verify against the original Choi matrix
  const VerifyResult v = verify_certificate(j.matrix(), cert, eff);
  if (!v.ok) {
    throw Error(ErrorCode::kPipelineExhausted,
                "mapped certificate failed verification (residual " +
                    std::to_string(v.residual) + ")");
  }
  cert.residual = v.residual;
  result.certificate = std::move(cert);
  return result;
}

ClassificationReport classify_channel(const ChoiMatrix& j, const ToleranceConfig& tol,
                                      const FactorParams& params) {
  ClassificationReport rep;
  rep.n = j.n();
  rep.m = j.m();

  auto t0 = Clock::now();
  rep.trace = check_trace_conditions(j, tol);
  rep.is_trace_preserving = rep.trace.ok;
  rep.timings.trace_ms = ms_since(t0);

  t0 = Clock::now();
  const DnnReport dnn = is_dnn(j.matrix(), tol);
  rep.is_dnn = dnn.verdict;
  rep.min_eigenvalue = dnn.min_eigenvalue;
  rep.near_boundary = near_psd_boundary(j.matrix(), tol);
  rep.timings.dnn_ms = ms_since(t0);

  t0 = Clock::now();
  if (!rep.is_dnn) {
    rep.cp_status = CpStatus::kRefuted;
    rep.refutation = refute_cp(j.matrix(), tol);
    rep.strategy = "refutation";
  } else if (rep.m == 2 && rep.is_trace_preserving) {
    PipelineResult res = qubit_output_pipeline(j, tol, params);
    rep.cp_status = CpStatus::kCertified;
    rep.certificate = std::move(res.certificate);
    rep.strategy = std::move(res.strategy);
    rep.iterations = res.iterations;
  } else {
    FactorOutcome out = factor_auto(j.matrix(), tol, params);
    rep.strategy = out.strategy;
    rep.iterations = out.iterations;
    if (out.certified()) {
      rep.cp_status = CpStatus::kCertified;
      rep.certificate = std::move(out.certificate);
    }
  }
  rep.timings.factor_ms = ms_since(t0);
  return rep;
}

}  // namespace choicone
