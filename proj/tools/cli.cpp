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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "choicone/classify.hpp"
#include "choicone/error.hpp"
#include "choicone/json_io.hpp"
#include "choicone/random.hpp"
#include "choicone/sampler.hpp"

namespace choicone::cli {

namespace {

using io::json;

struct Config {
  std::string input = "-";
  std::string format = "json";
  std::string output = "-";
  std::string certificate;
  std::uint64_t seed = 0x5eed;
  std::size_t jobs = 1;
  bool quiet = false;
  ToleranceConfig tol;

  // `classify` on CSV input
  std::size_t choi_m = 0;

  // `classify` / `factorize`: alternating-projection budget
  std::size_t restarts = ProjectionParams{}.restarts;
  std::size_t max_iter = ProjectionParams{}.max_iter;

  // `sample`
  std::string kind = "channel";
  std::size_t n = 2, m = 2, r = 4, s = 0, k = 1, count = 1;
  double density = 0.5;
  double boundary_bias = 0.2;
  bool real_kraus = false;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kParse, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw Error(ErrorCode::kParse, "cannot write " + cfg.output);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Runs fn(i) for i in [0, count) on `jobs` threads. Results are written by
// index, so output order never depends on scheduling.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// A document is either one item or an array of items (a batch).
std::vector<json> items(const json& doc, bool& batch) {
  batch = doc.is_array();
  if (!batch) return {doc};
  return std::vector<json>(doc.begin(), doc.end());
}

SymMatrix matrix_item(const json& j, const ToleranceConfig& tol) {
  if (j.is_object() && (j.contains("choi") || j.contains("kraus") || j.contains("d0"))) {
    return io::channel_from_json(j, tol).matrix();
  }
  if (j.is_object() && j.contains("matrix")) return io::matrix_from_json(j.at("matrix"), tol);
  return io::matrix_from_json(j, tol);
}

std::vector<SymMatrix> read_matrices(const Config& cfg, std::istream& in, bool& batch) {
  const std::string text = read_all(cfg.input, in);
  if (cfg.format == "csv") {
    batch = false;
    return {io::matrix_from_csv(text, cfg.tol)};
  }
  std::vector<SymMatrix> out;
  for (const json& j : items(parse_json(text), batch)) out.push_back(matrix_item(j, cfg.tol));
  return out;
}

FactorParams factor_params(const Config& cfg) {
  FactorParams p;
  p.projection.seed = cfg.seed;
  p.projection.restarts = cfg.restarts;
  p.projection.max_iter = cfg.max_iter;
  return p;
}

// ---------------------------------------------------------------------------

int cmd_classify(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string text = read_all(cfg.input, in);
  std::vector<ChoiMatrix> channels;
  bool batch = false;
  if (cfg.format == "csv") {
    SymMatrix s = io::matrix_from_csv(text, cfg.tol);
    const std::size_t m = cfg.choi_m ? cfg.choi_m : s.r();
    if (s.r() % m != 0) throw Error(ErrorCode::kDimension, "--m must divide the matrix size");
    channels.emplace_back(s.r() / m, m, std::move(s));
  } else {
    for (const json& j : items(parse_json(text), batch))
      channels.push_back(io::channel_from_json(j, cfg.tol));
  }

  std::vector<ClassificationReport> reports(channels.size());
  const FactorParams params = factor_params(cfg);
  parallel_for(channels.size(), cfg.jobs, [&](std::size_t i) {
    reports[i] = classify_channel(channels[i], cfg.tol, params);
  });

  json doc = json::array();
  std::size_t certified = 0, refuted = 0, unknown = 0;
  for (const auto& rep : reports) {
    doc.push_back(io::to_json(rep));
    switch (rep.cp_status) {
      case CpStatus::kCertified: ++certified; break;
      case CpStatus::kRefuted: ++refuted; break;
      case CpStatus::kUnknown: ++unknown; break;
    }
  }
  emit(cfg, out, dump(batch ? doc : doc.front()));
  if (!cfg.quiet && batch) {
    err << "classified " << reports.size() << ": " << certified << " certified, " << refuted
        << " refuted, " << unknown << " unknown\n";
  }
  return unknown ? kUnknown : kOk;
}

int cmd_factorize(const Config& cfg, std::istream& in, std::ostream& out) {
  bool batch = false;
  const std::vector<SymMatrix> mats = read_matrices(cfg, in, batch);
  std::vector<FactorOutcome> outcomes(mats.size());
  const FactorParams params = factor_params(cfg);
  parallel_for(mats.size(), cfg.jobs, [&](std::size_t i) {
    outcomes[i] = factor_auto(mats[i], cfg.tol, params);
  });
  json doc = json::array();
  bool all = true;
  for (const auto& o : outcomes) {
    all = all && o.certified();
    doc.push_back(o.certified() ? io::to_json(*o.certificate, o.strategy) : io::to_json(o));
  }
  emit(cfg, out, dump(batch ? doc : doc.front()));
  return all ? kOk : kUnknown;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out) {
  if (cfg.certificate.empty()) throw Error(ErrorCode::kParse, "--certificate is required");
  bool batch = false;
  const std::vector<SymMatrix> mats = read_matrices(cfg, in, batch);
  if (batch) throw Error(ErrorCode::kParse, "verify takes a single matrix");
  std::istringstream none;
  const CpCertificate cert =
      io::certificate_from_json(parse_json(read_all(cfg.certificate, none)));
  const VerifyResult v = verify_certificate(mats.front(), cert, cfg.tol);
  emit(cfg, out,
       dump({{"verified", v.ok}, {"residual", v.residual}, {"min_entry", v.min_entry}}));
  return v.ok ? kOk : kNotVerified;
}

int cmd_graph(const Config& cfg, std::istream& in, std::ostream& out) {
  bool batch = false;
  const std::vector<SymMatrix> mats = read_matrices(cfg, in, batch);
  if (batch) throw Error(ErrorCode::kParse, "graph takes a single matrix");
  const SupportGraph g = support_graph(mats.front(), cfg.tol.eps_zero);
  emit(cfg, out, to_dot(g, two_coloring(g).coloring));
  return kOk;
}

int cmd_sample(const Config& cfg, std::ostream& out) {
  json doc = json::array();
  for (std::size_t i = 0; i < cfg.count; ++i) {
    SampleParams p{Rng::derive(cfg.seed, i).next(), cfg.density, cfg.boundary_bias};
    if (cfg.kind == "channel") {
      doc.push_back(io::to_json(from_block_form(sample_blockform_channel(cfg.n, p))));
    } else if (cfg.kind == "blockform") {
      doc.push_back(io::to_json(sample_blockform_channel(cfg.n, p)));
    } else if (cfg.kind == "cp") {
      const CpSample cs = sample_cp(cfg.r, cfg.s ? cfg.s : 2 * cfg.r, p);
      doc.push_back({{"matrix", io::to_json(cs.matrix)},
                     {"certificate", io::to_json(cs.certificate, "sampled")}});
    } else if (cfg.kind == "dnn") {
      doc.push_back(io::to_json(sample_dnn(cfg.r, p, cfg.tol)));
    } else if (cfg.kind == "forest") {
      doc.push_back(io::to_json(sample_forest_dnn(cfg.r, p)));
    } else {
      doc.push_back(io::kraus_to_json(
          cfg.n, cfg.m, sample_kraus_channel(cfg.n, cfg.m, cfg.k, p, !cfg.real_kraus)));
    }
  }
  emit(cfg, out, dump(cfg.count == 1 ? doc.front() : doc));
  return kOk;
}

void error_line(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

void common_flags(CLI::App* sub, Config& cfg) {
  sub->add_option("--input,-i", cfg.input, "Input path, or - for stdin");
  sub->add_option("--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output,-o", cfg.output, "Output path, or - for stdout");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--eps-sym", cfg.tol.eps_sym, "Max input asymmetry");
  sub->add_option("--eps-psd", cfg.tol.eps_psd, "Relative eigenvalue floor");
  sub->add_option("--eps-nonneg", cfg.tol.eps_nonneg, "Entry floor");
  sub->add_option("--eps-zero", cfg.tol.eps_zero, "Support threshold");
  sub->add_option("--eps-residual", cfg.tol.eps_residual, "Certificate residual bound");
  sub->add_option("--jobs,-j", cfg.jobs, "Worker threads for batch input")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--quiet,-q", cfg.quiet, "Suppress summaries on stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Doubly nonnegative / completely positive certification of Choi matrices",
               "choicone"};
  app.require_subcommand(1);
  Config cfg;

  auto* classify = app.add_subcommand("classify", "Classify channels (CPDNN / CPCP)");
  common_flags(classify, cfg);
  classify->add_option("--m", cfg.choi_m, "Output dimension for CSV input");

  auto* factorize = app.add_subcommand("factorize", "Find a CP certificate for a matrix");
  common_flags(factorize, cfg);

  for (CLI::App* sub : {classify, factorize}) {
    sub->add_option("--restarts", cfg.restarts, "Alternating-projection restarts");
    sub->add_option("--max-iter", cfg.max_iter, "Alternating-projection iterations per restart");
  }

  auto* verify = app.add_subcommand("verify", "Check a certificate against a matrix");
  common_flags(verify, cfg);
  verify->add_option("--certificate,-c", cfg.certificate, "Certificate JSON path")->required();

  auto* graph = app.add_subcommand("graph", "Export the support graph as DOT");
  common_flags(graph, cfg);

  auto* sample = app.add_subcommand("sample", "Generate random instances");
  common_flags(sample, cfg);
  sample->add_option("--kind", cfg.kind, "Generator")
      ->check(CLI::IsMember({"channel", "blockform", "cp", "dnn", "forest", "kraus"}));
  sample->add_option("--n", cfg.n, "Input dimension")->check(CLI::PositiveNumber);
  sample->add_option("--m", cfg.m, "Output dimension (kraus)")->check(CLI::PositiveNumber);
  sample->add_option("--r", cfg.r, "Matrix size (cp, dnn, forest)")->check(CLI::PositiveNumber);
  sample->add_option("--s", cfg.s, "Number of CP vectors (default 2r)");
  sample->add_option("--k", cfg.k, "Number of Kraus operators")->check(CLI::PositiveNumber);
  sample->add_option("--count", cfg.count, "Instances; more than one emits an array")
      ->check(CLI::PositiveNumber);
  sample->add_option("--density", cfg.density, "Off-diagonal density")
      ->check(CLI::Range(0.0, 1.0));
  sample->add_option("--boundary-bias", cfg.boundary_bias, "Probability of PSD-boundary draws")
      ->check(CLI::Range(0.0, 1.0));
  sample->add_flag("--real", cfg.real_kraus, "Real Gaussian Kraus operators");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "UsageError", e.what());
    return kError;
  }

  try {
    cfg.tol.validate();
    if (*classify) return cmd_classify(cfg, in, out, err);
    if (*factorize) return cmd_factorize(cfg, in, out);
    if (*verify) return cmd_verify(cfg, in, out);
    if (*graph) return cmd_graph(cfg, in, out);
    return cmd_sample(cfg, out);
  } catch (const Error& e) {
    error_line(err, e.name(), e.what());
  } catch (const std::exception& e) {
    error_line(err, "InternalError", e.what());
  }
  return kError;
}

}  // namespace choicone::cli
