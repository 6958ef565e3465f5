// Copyright 2026 The netsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netsteer_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netsteer/errors.hpp"
#include "netsteer/inequalities.hpp"
#include "netsteer/lhs_oracle.hpp"
#include "netsteer/parallel.hpp"
#include "netsteer/report_io.hpp"
#include "netsteer/state_spec.hpp"
#include "netsteer/thresholds.hpp"

namespace netsteer::cli {

namespace {

struct Grid {
  double start;
  double stop;
  int steps;

  double point(int i) const {
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw ValidationError("grid must be A:B:STEPS, got \"" + text + "\"");
  Grid g{parse_number(text.substr(0, first)),
         parse_number(text.substr(first + 1, second - first - 1)), 0};
  const std::string steps = text.substr(second + 1);
  try {
    std::size_t used = 0;
    g.steps = std::stoi(steps, &used);
    if (used != steps.size()) throw std::invalid_argument(steps);
  } catch (const std::logic_error&) {
    throw ValidationError("grid STEPS must be an integer, got \"" + steps + "\"");
  }
  if (g.steps < 2) throw ValidationError("grid STEPS must be >= 2");
  return g;
}

struct Options {
  std::string spec;
  std::string inequality;
  std::optional<int> settings;
  std::optional<std::string> form;
  std::string family = "werner";
  std::optional<std::size_t> n;
  std::string grid;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
  int restarts = 64;
  int hidden_values = 1;
  std::string model = "nlhs";
  std::string lemma;
  int steps = 0;
  bool with_cited = false;
  bool dense = false;
};

void require_settings(const std::optional<int>& settings) {
  if (settings && *settings != 2 && *settings != 3)
    throw ValidationError("--settings must be 2 or 3, got " + std::to_string(*settings));
}

std::vector<InequalityId> resolve_ids(const Options& o, std::size_t n) {
  require_settings(o.settings);
  if (o.inequality.empty() || o.inequality == "all") return applicable_inequalities(n);
  const Form form = o.form ? parse_form(*o.form) : Form::squared;
  const int settings = o.settings.value_or(3);
  std::vector<InequalityId> ids;
  std::stringstream list(o.inequality);
  std::string name;
  while (std::getline(list, name, ',')) {
    if (name == "T1")
      ids.push_back(InequalityId::T1_LINE);
    else if (name == "T2")
      ids.push_back(theorem2_id(n, settings, form));
    else if (name == "T3")
      ids.push_back(InequalityId::T3_CHSH);
    else if (name == "T4")
      ids.push_back(theorem4_id(settings));
    else
      ids.push_back(parse_inequality_id(name));
  }
  for (auto id : ids) require_applicable(id, n);
  return ids;
}

std::size_t require_n(const Options& o) {
  if (!o.n) throw ValidationError("--n is required");
  if (*o.n < 1) throw ValidationError("--n must be >= 1");
  return *o.n;
}

void require_family(const Options& o) {
  if (o.family != "werner")
    throw ValidationError("--family supports \"werner\" only, got \"" + o.family + "\"");
}

void validate_out_path(const Options& o) {
  if (o.out.empty()) return;
  const auto parent = std::filesystem::path(o.out).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent))
    throw ValidationError("output directory does not exist: " + parent.string());
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ValidationError("cannot open " + o.out + " for writing");
  file << text;
}

ThresholdOptions threshold_options(const Options& o) {
  ThresholdOptions t;
  if (o.dense) t.eval.path = CorrelatorPath::dense;
  return t;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  validate_out_path(o);
  const StarNetwork net = load_state_spec(o.spec);
  EvalOptions eval;
  if (o.dense) eval.path = CorrelatorPath::dense;
  std::vector<InequalityReport> reports;
  for (auto id : resolve_ids(o, net.size())) reports.push_back(evaluate(id, net, eval));
  emit(o, write_rows(reports, format), out);
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  validate_out_path(o);
  require_family(o);
  const std::size_t n = require_n(o);
  const Grid grid = parse_grid(o.grid.empty() ? "0:1:11" : o.grid);
  const auto ids = resolve_ids(o, n);
  EvalOptions eval;
  if (o.dense) eval.path = CorrelatorPath::dense;
  const auto family = werner_family(n);
  const std::size_t total = static_cast<std::size_t>(grid.steps) * ids.size();
  auto rows = parallel_map<ScanRow>(total, o.jobs, [&](std::size_t i) {
    const double p = grid.point(static_cast<int>(i / ids.size()));
    return ScanRow{p, evaluate(ids[i % ids.size()], family(p), eval)};
  });
  emit(o, write_rows(rows, format), out);
  return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(o.format);
  validate_out_path(o);
  require_family(o);
  const std::size_t n = require_n(o);
  if (o.inequality.empty()) throw ValidationError("--inequality is required");
  const auto ids = resolve_ids(o, n);
  const auto opts = threshold_options(o);
  auto results = parallel_map<ThresholdResult>(ids.size(), o.jobs, [&](std::size_t i) {
    return werner_threshold(n, ids[i], opts);
  });
  std::vector<ThresholdRow> rows;
  for (const auto& r : results) {
    for (const auto& w : r.warnings) err << "warning: " << to_string(r.id) << ": " << w << "\n";
    rows.push_back(to_row(r));
  }
  if (o.with_cited) {
    const auto table = threshold_table(true, 1, opts);
    for (const auto& row : table)
      if (row.source_tag == SourceTag::paper_cited) rows.push_back(row);
  }
  emit(o, write_rows(rows, format), out);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  validate_out_path(o);
  OracleOptions opts;
  opts.restarts = o.restarts;
  opts.seed = o.seed;
  opts.jobs = o.jobs;
  opts.hidden_values = o.hidden_values;
  std::vector<OracleRow> rows;
  if (o.model == "blhs") {
    if (o.n && *o.n != 3) throw ValidationError("the BLHS oracle is defined for n = 3 only");
    for (auto id : resolve_ids(o, 3)) {
      const auto r = maximize_blhs_n3(id, opts);
      rows.push_back({"blhs", id, 3, opts.restarts, opts.seed, 1, r.best,
                      inequality_bound(id, 3), r.best_restart});
    }
  } else if (o.model == "nlhs") {
    const std::size_t n = require_n(o);
    for (auto id : resolve_ids(o, n)) {
      const auto r = maximize_nlhs(id, n, opts);
      rows.push_back({"nlhs", id, n, opts.restarts, opts.seed, opts.hidden_values, r.best,
                      inequality_bound(id, n), r.best_restart});
    }
  } else {
    throw ValidationError("--model must be nlhs or blhs, got \"" + o.model + "\"");
  }
  emit(o, write_rows(rows, format), out);
  return kExitOk;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  validate_out_path(o);
  std::vector<std::size_t> ns{1, 2, 3, 4};
  if (o.n) ns = {*o.n};
  std::vector<Lemma> which{Lemma::lemma1, Lemma::lemma2};
  if (!o.lemma.empty()) which = {parse_lemma(o.lemma)};
  std::vector<LemmaResult> rows;
  for (auto n : ns)
    for (auto w : which) rows.push_back(lemma_norm_check(n, w, o.seed));
  emit(o, write_rows(rows, format), out);
  return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  validate_out_path(o);
  if (o.steps < 0 || o.steps == 1) throw ValidationError("--steps must be 0 or >= 2");
  const auto opts = threshold_options(o);
  const auto table = threshold_table(true, o.jobs, opts);

  std::vector<ScanRow> sweep;
  if (o.steps >= 2) {
    // One sample set per computed family, on [0, 1].
    for (const auto& row : table) {
      if (row.source_tag != SourceTag::computed) continue;
      const InequalityId id = parse_inequality_id(row.family.substr(row.family.find(':') + 1));
      const auto family = werner_family(row.n);
      EvalOptions eval = opts.eval;
      for (int i = 0; i < o.steps; ++i) {
        const double p = static_cast<double>(i) / (o.steps - 1);
        sweep.push_back({p, evaluate(id, family(p), eval)});
      }
    }
  }

  std::string text;
  if (format == Format::json) {
    nlohmann::json doc;
    doc["thresholds"] = nlohmann::json::parse(write_rows(table, format));
    doc["sweep"] = nlohmann::json::parse(write_rows(sweep, format));
    text = doc.dump(2) + "\n";
  } else {
    text = write_rows(table, format);
    if (!sweep.empty()) text += "\n" + write_rows(sweep, format);
  }
  emit(o, text, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Network steering inequalities, thresholds and LHS-model checks", "netsteer"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write the report to this path instead of stdout");
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)");
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  };
  auto add_selection = [&](CLI::App* sub) {
    sub->add_option("--inequality", o.inequality,
                    "Comma-separated ids, or T1..T4 shorthands, or all");
    sub->add_option("--settings", o.settings, "Setting count for T2/T4 shorthands (2 or 3)");
    sub->add_option("--form", o.form, "squared or root, for the T2 shorthand")
        ->check(CLI::IsMember({"squared", "root"}));
  };

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate inequalities on a state spec");
  evaluate_cmd->add_option("--spec", o.spec, "JSON state specification")
      ->required()
      ->check(CLI::ExistingFile);
  add_selection(evaluate_cmd);
  evaluate_cmd->add_flag("--dense", o.dense, "Force the dense correlator path");
  add_common(evaluate_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Sweep a state family over a parameter grid");
  scan_cmd->add_option("--family", o.family, "State family")->capture_default_str();
  scan_cmd->add_option("--n", o.n, "Number of sources")->required();
  scan_cmd->add_option("--grid", o.grid, "A:B:STEPS (default 0:1:11)");
  scan_cmd->add_flag("--dense", o.dense, "Force the dense correlator path");
  add_selection(scan_cmd);
  add_common(scan_cmd);

  auto* threshold_cmd = app.add_subcommand("threshold", "Locate violation thresholds");
  threshold_cmd->add_option("--family", o.family, "State family")->capture_default_str();
  threshold_cmd->add_option("--n", o.n, "Number of sources")->required();
  threshold_cmd->add_flag("--with-cited", o.with_cited, "Append cited comparison constants");
  threshold_cmd->add_flag("--dense", o.dense, "Force the dense correlator path");
  add_selection(threshold_cmd);
  add_common(threshold_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Maximize inequalities over hidden-state models");
  oracle_cmd->add_option("--model", o.model, "nlhs or blhs")->capture_default_str();
  oracle_cmd->add_option("--n", o.n, "Number of sources (nlhs)");
  oracle_cmd->add_option("--restarts", o.restarts, "Ascent restarts")->capture_default_str();
  oracle_cmd->add_option("--hidden-values", o.hidden_values, "Hidden values per source (nlhs)")
      ->capture_default_str();
  add_selection(oracle_cmd);
  add_common(oracle_cmd);

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Operator-norm checks of the bound lemmas");
  lemmas_cmd->add_option("--n", o.n, "Number of parties (default 1..4)");
  lemmas_cmd->add_option("--lemma", o.lemma, "lemma1 or lemma2 (default both)");
  add_common(lemmas_cmd);

  auto* report_cmd = app.add_subcommand("report", "Full threshold table with cited constants");
  report_cmd->add_option("--steps", o.steps, "Add a sweep with this many samples per family");
  report_cmd->add_flag("--dense", o.dense, "Force the dense correlator path");
  add_common(report_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*evaluate_cmd) return cmd_evaluate(o, out);
    if (*scan_cmd) return cmd_scan(o, out);
    if (*threshold_cmd) return cmd_threshold(o, out, err);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*lemmas_cmd) return cmd_lemmas(o, out);
    if (*report_cmd) return cmd_report(o, out);
    return kExitInternal;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NoCrossingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoCrossing;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace netsteer::cli
