// Copyright 2026 The dnlab Authors
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

#include "dnlab/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "dnlab/content.hpp"
#include "dnlab/errors.hpp"
#include "dnlab/limsup.hpp"
#include "dnlab/problem.hpp"
#include "dnlab/series.hpp"
#include "dnlab/transference.hpp"

namespace dnlab::cli {

namespace {

constexpr std::array<std::string_view, 5> kSubcommands = {"verdict", "content", "transfer",
                                                         "limsup", "baseline"};

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("config field '" + field + "': " + what);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

const json* find(const json& obj, std::string_view key) {
  auto it = obj.find(std::string(key));
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

double number(const json& obj, std::string_view key, const std::string& path,
              std::optional<double> fallback = std::nullopt) {
  const json* v = find(obj, key);
  if (v == nullptr) {
    if (fallback) return *fallback;
    fail(join(path, key), "required number is missing");
  }
  if (!v->is_number()) fail(join(path, key), "expected a number");
  return v->get<double>();
}

std::int64_t integer(const json& obj, std::string_view key, const std::string& path,
                     std::optional<std::int64_t> fallback = std::nullopt) {
  const json* v = find(obj, key);
  if (v == nullptr) {
    if (fallback) return *fallback;
    fail(join(path, key), "required integer is missing");
  }
  if (!v->is_number_integer()) fail(join(path, key), "expected an integer");
  return v->get<std::int64_t>();
}

std::int64_t positive(const json& obj, std::string_view key, const std::string& path,
                      std::optional<std::int64_t> fallback = std::nullopt) {
  const std::int64_t value = integer(obj, key, path, fallback);
  if (value < 1) fail(join(path, key), "must be >= 1");
  return value;
}

std::vector<double> numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<std::int64_t> integers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) fail(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(v[i].get<std::int64_t>());
  }
  return out;
}

std::vector<double> weights(const json& raw, std::string_view key, std::size_t size) {
  const json* v = find(raw, key);
  if (v == nullptr) return std::vector<double>(size, 1.0 / static_cast<double>(size));
  auto out = numbers(*v, std::string(key));
  if (out.size() != size) {
    fail(std::string(key), "expected " + std::to_string(size) + " entries, got " + std::to_string(out.size()));
  }
  return out;
}

json resolve_psi(const json& raw) {
  const json* v = find(raw, "psi");
  if (v == nullptr) fail("psi", "required object is missing");
  if (!v->is_object()) fail("psi", "expected an object");
  const std::string family = v->value("family", std::string("power"));
  if (family != "power" && family != "power_log") fail("psi.family", "expected power or power_log");
  json out = {{"family", family},
              {"c", number(*v, "c", "psi", 1.0)},
              {"sigma", number(*v, "sigma", "psi")},
              {"t0", number(*v, "t0", "psi", 2.0)}};
  out["rho"] = family == "power" ? 0.0 : number(*v, "rho", "psi");
  return out;
}

json resolve_f(const json& raw) {
  const json* v = find(raw, "f");
  if (v == nullptr) fail("f", "required object is missing");
  if (!v->is_object()) fail("f", "expected an object");
  const std::string family = v->value("family", std::string("power"));
  if (family != "power" && family != "power_log") fail("f.family", "expected power or power_log");
  json out = {{"family", family}, {"s", number(*v, "s", "f")}};
  if (family == "power_log") {
    out["tau"] = number(*v, "tau", "f");
    if (const json* knee = find(*v, "knee")) {
      if (!knee->is_number()) fail("f.knee", "expected a number");
      out["knee"] = knee->get<double>();
    }
  }
  return out;
}

ApproxFunction make_psi(const json& p) {
  if (p["family"] == "power") return ApproxFunction::power(p["c"], p["sigma"], p["t0"]);
  return ApproxFunction::power_log(p["c"], p["sigma"], p["rho"], p["t0"]);
}

DimensionFunction make_f(const json& f) {
  if (f["family"] == "power") return DimensionFunction::power(f["s"]);
  std::optional<double> knee;
  if (f.contains("knee")) knee = f["knee"].get<double>();
  return DimensionFunction::power_log(f["s"], f["tau"], knee);
}

Problem make_problem(const json& cfg) {
  return Problem(WeightVector(cfg["alpha"].get<std::vector<double>>(), Side::alpha),
                 WeightVector(cfg["beta"].get<std::vector<double>>(), Side::beta),
                 make_psi(cfg["psi"]), make_f(cfg["f"]));
}

json vector_json(const IntegerVector& u) {
  return json(std::vector<std::int64_t>(u.entries().begin(), u.entries().end()));
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string csv_number(double value) {
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

json run_verdict(const json& cfg, int workers) {
  const Problem problem = make_problem(cfg);
  const auto report = series::series_verdict(problem, cfg["r_max"], workers);
  json out;
  out["bracket_a"] = problem.bracket();
  out["verdict"] = series::to_string(report.verdict);
  out["tail_exponent_fit"] = report.tail_exponent_fit;
  out["partial_total"] = report.partial_total;
  out["dyadic_spread"] = series::dyadic_spread(report);
  json blocks = json::array();
  for (const auto& [block, sum] : report.dyadic_sums) blocks.push_back({{"block", block}, {"sum", sum}});
  out["dyadic_sums"] = blocks;
  json shells = json::array();
  for (const auto& [r, sum] : report.shell_sums) shells.push_back(sum);
  out["shell_sums"] = shells;
  const auto onset = series::lower_bound_onset(problem, std::min(cfg["r_max"].get<std::int64_t>(), std::int64_t{256}));
  out["lower_bound_onset"] = onset ? json(*onset) : json(nullptr);
  return out;
}

json estimate_json(const content::ContentEstimate& e) {
  json out = {{"value", e.value},
              {"argmin_index", e.argmin_index},
              {"method", content::to_string(e.method)}};
  if (e.method == content::ContentMethod::cover_oracle) out["radius"] = e.radius;
  return out;
}

json run_content(const json& cfg) {
  const DimensionFunction f = make_f(cfg["f"]);
  const content::Hyperrectangle rect(cfg["content"]["sides"].get<std::vector<double>>());
  const auto closed = content::rect_content_closed(f, rect);
  json out = {{"sides_sorted", std::vector<double>(rect.sides().begin(), rect.sides().end())},
              {"closed_form", estimate_json(closed)}};
  if (cfg["content"]["oracle"].get<bool>()) {
    const auto grid = content::default_radius_grid(rect, cfg["content"]["per_octave"]);
    const auto oracle = content::rect_content_oracle(f, rect, grid);
    out["cover_oracle"] = estimate_json(oracle);
    out["oracle_over_closed"] = oracle.value / closed.value;
  }
  return out;
}

json run_transfer(const json& cfg, RunResult& res) {
  const json& t = cfg["transfer"];
  std::vector<std::vector<double>> rows = t["A"];
  const transfer::AffineSystem sys{transfer::Matrix::from_rows(rows), cfg["b"].get<std::vector<double>>(),
                                   WeightVector(cfg["alpha"].get<std::vector<double>>(), Side::alpha),
                                   WeightVector(cfg["beta"].get<std::vector<double>>(), Side::beta)};
  const ApproxFunction psi = make_psi(cfg["psi"]);
  const int n = static_cast<int>(sys.n());
  json out;

  std::optional<double> lambda;
  try {
    lambda = validate_lambda_decay(psi);
  } catch (const CertificationError& e) {
    out["lambda_decay"] = e.what();
  }
  if (lambda) {
    const auto k = transfer::transfer_constants(sys.b, *lambda, sys.alpha, sys.beta);
    out["constants"] = {{"lambda", *lambda},
                        {"eps_b", k.eps_b},
                        {"c_b", k.c_b},
                        {"tau_const", k.tau_const},
                        {"c_tilde", k.c_tilde}};
  }

  json dirichlet = json::array();
  for (double time : t["t"].get<std::vector<double>>()) {
    const auto r = transfer::is_dirichlet_at_t(sys, psi, time);
    dirichlet.push_back({{"t", time},
                         {"solvable", r.solvable},
                         {"witness", r.witness ? json(*r.witness) : json(nullptr)}});
  }
  out["dirichlet"] = dirichlet;

  const std::int64_t u_range = t["u_range"];
  if (!t["c"].is_null() && !t["witness_t"].is_null()) {
    const double c = t["c"];
    const double wt = t["witness_t"];
    const auto witness = transfer::find_witness(sys, {c, wt, false});
    json forward = {{"c", c}, {"t", wt}, {"witness", witness ? json(*witness) : json(nullptr)}};
    if (witness) {
      std::int64_t checked = 0;
      std::int64_t violations = 0;
      json first = nullptr;
      for (std::int64_t r = 1; r <= u_range; ++r) {
        for_each_in_shell(static_cast<int>(sys.m()), r, [&](const IntegerVector& u) {
          ++checked;
          if (!transfer::forward_transference_holds(sys, c, wt, u)) {
            if (violations++ == 0) first = vector_json(u);
          }
        });
      }
      forward["checked"] = checked;
      forward["violations"] = violations;
      forward["first_violation"] = first;
      if (violations > 0) {
        res.exit_code = kInvariantViolation;
        res.message = "forward transference inequality violated";
      }
    }
    out["forward"] = forward;

    const auto scan = transfer::cassels_backward_scan(sys, c, wt, u_range);
    out["backward"] = {
        {"range", scan.range},
        {"hypothesis_holds_on_range", scan.hypothesis_holds_on_range},
        {"counterexample", scan.counterexample ? vector_json(*scan.counterexample) : json(nullptr)},
        {"conclusion_found", scan.conclusion_found ? json(*scan.conclusion_found) : json(nullptr)},
        {"range_artifact", scan.range_artifact}};
  }

  json duals = json::array();
  for (const auto& entries : t["u"]) {
    const IntegerVector u(entries.get<std::vector<std::int64_t>>());
    const double d = transfer::dual_distance(u, sys.b);
    json row = {{"u", entries}, {"distance", d}};
    if (lambda && d > 0.0) row["tau"] = transfer::tau_b_u(sys.b, u, *lambda, sys.alpha, n);
    row["shift_to_active"] = vector_json(transfer::shift_to_active(u, sys.b));
    if (!t["c"].is_null()) row["dual_condition"] = transfer::dual_condition(sys, psi, u, t["c"], 1.0);
    duals.push_back(row);
  }
  out["dual"] = duals;
  return out;
}

json run_limsup(const json& cfg, int workers, RunResult& res) {
  const json& l = cfg["limsup"];
  const limsup::DivergenceSetup setup(make_problem(cfg), cfg["b"].get<std::vector<double>>());
  const std::int64_t r_max = cfg["r_max"];
  const std::int64_t scan_r_max = l["scan_r_max"];
  const std::uint64_t seed = cfg["seed"];

  const auto scan = limsup::phi_scan(setup, scan_r_max, workers);
  const auto sel = limsup::lambda_selection(setup, r_max, l["a"], workers);
  const auto pairs = limsup::qi_pairs(setup, l["pair_r_max"], l["pairs"], seed);
  const auto qi = limsup::quasi_independence_scan(setup, pairs, cfg["samples"], seed, workers);

  json out;
  out["constants"] = {{"lambda", setup.lambda},
                      {"eps_b", setup.constants.eps_b},
                      {"c_b", setup.constants.c_b},
                      {"tau_const", setup.constants.tau_const},
                      {"c_tilde", setup.c_tilde()}};
  out["phi_scan"] = {
      {"r_max", scan_r_max},
      {"active", scan.active},
      {"inactive", scan.inactive},
      {"no_rung", scan.no_rung},
      {"violations", scan.violations},
      {"worst_product_error", scan.worst_product_error},
      {"min_content_ratio", scan.min_content_ratio ? json(*scan.min_content_ratio) : json(nullptr)},
      {"first_violation", scan.first_violation ? vector_json(*scan.first_violation) : json(nullptr)}};
  json blocks = json::array();
  for (const auto& [block, count] : sel.block_counts) blocks.push_back({{"block", block}, {"count", count}});
  out["lambda"] = {{"a", sel.a},
                   {"members", sel.members.size()},
                   {"density", sel.density},
                   {"lambda_sum", sel.lambda_sum},
                   {"full_sum", sel.full_sum},
                   {"ratio", sel.ratio},
                   {"block_counts", blocks},
                   {"skipped_no_rung", sel.skipped_no_rung}};
  json entries = json::array();
  for (const auto& e : qi.entries) {
    entries.push_back({{"u1", vector_json(e.u1)},
                       {"u2", vector_json(e.u2)},
                       {"measure1", e.measure1},
                       {"measure2", e.measure2},
                       {"intersection", e.intersection},
                       {"ratio", e.ratio},
                       {"sandwich_ok", e.sandwich_ok}});
  }
  out["quasi_independence"] = {{"method", limsup::to_string(qi.method)},
                               {"pairs", entries},
                               {"max_ratio", qi.max_ratio},
                               {"skipped_degenerate", qi.skipped_degenerate},
                               {"skipped_wide", qi.skipped_wide},
                               {"sandwich_violations", qi.sandwich_violations}};

  // Per-radius table: QI ratios are filed under the larger of the two norms.
  const std::int64_t rows = std::max(r_max, scan_r_max);
  std::vector<std::optional<double>> qi_by_r(static_cast<std::size_t>(rows + 1));
  for (const auto& e : qi.entries) {
    const auto r = static_cast<std::size_t>(std::max(e.u1.sup_norm(), e.u2.sup_norm()));
    if (r < qi_by_r.size()) qi_by_r[r] = std::max(qi_by_r[r].value_or(e.ratio), e.ratio);
  }
  std::ostringstream csv;
  csv << "r,shell_sum,lambda_member,min_content_ratio,qi_ratio_max\n";
  for (std::int64_t r = 1; r <= rows; ++r) {
    const auto idx = static_cast<std::size_t>(r - 1);
    csv << r << ',';
    if (r <= r_max) csv << csv_number(sel.rows[idx].shell_sum);
    csv << ',';
    if (r <= r_max) csv << (sel.rows[idx].member ? 1 : 0);
    csv << ',';
    if (r <= scan_r_max && scan.rows[idx].min_content_ratio) csv << csv_number(*scan.rows[idx].min_content_ratio);
    csv << ',';
    if (qi_by_r[static_cast<std::size_t>(r)]) csv << csv_number(*qi_by_r[static_cast<std::size_t>(r)]);
    csv << '\n';
  }
  res.csv = csv.str();

  if (scan.violations > 0 || qi.sandwich_violations > 0) {
    res.exit_code = kInvariantViolation;
    res.message = scan.violations > 0 ? "Phi profile invariant violated" : "R' measure sandwich violated";
  }
  return out;
}

json run_baseline(const json& cfg) {
  const ApproxFunction psi = make_psi(cfg["psi"]);
  const int m = cfg["m"];
  const int n = cfg["n"];
  const std::int64_t Q = cfg["baseline"]["Q"];
  std::vector<std::int64_t> checkpoints;
  for (std::int64_t q = 16; q < Q; q *= 2) checkpoints.push_back(q);
  checkpoints.push_back(Q);

  json out;
  json kg = json::array();
  for (auto q : checkpoints) kg.push_back({{"Q", q}, {"sum", series::khintchine_groshev_partial(psi, m, n, q)}});
  out["khintchine_groshev"] = kg;
  if (cfg.contains("f")) {
    const DimensionFunction f = make_f(cfg["f"]);
    try {
      json jarnik = json::array();
      for (auto q : checkpoints) jarnik.push_back({{"Q", q}, {"sum", series::jarnik_partial(psi, f, m, n, q)}});
      out["jarnik"] = jarnik;
    } catch (const BracketError& e) {
      out["jarnik"] = {{"skipped", e.what()}};
    }
  }
  return out;
}

}  // namespace

bool is_subcommand(std::string_view name) {
  return std::find(kSubcommands.begin(), kSubcommands.end(), name) != kSubcommands.end();
}

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ValidationError("config: top level must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    const auto offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
    throw ValidationError("config line " + std::to_string(line) + ": " + e.what());
  }
}

json resolve_config(const json& raw, std::string_view subcommand,
                    std::optional<std::uint64_t> seed_override) {
  if (!is_subcommand(subcommand)) fail("subcommand", "unknown subcommand " + std::string(subcommand));
  if (!raw.is_object()) throw ValidationError("config: top level must be a JSON object");
  const bool needs_dims = subcommand != "content";
  const bool needs_f = subcommand == "verdict" || subcommand == "content" || subcommand == "limsup";
  const bool needs_b = subcommand == "transfer" || subcommand == "limsup";

  json cfg;
  cfg["subcommand"] = subcommand;
  std::uint64_t seed = 0;
  if (const json* s = find(raw, "seed")) {
    if (!s->is_number_unsigned() && !(s->is_number_integer() && s->get<std::int64_t>() >= 0)) fail("seed", "expected a non-negative 64-bit integer");
    seed = s->get<std::uint64_t>();
  }
  cfg["seed"] = seed_override.value_or(seed);
  cfg["samples"] = positive(raw, "samples", "", 100000);

  if (needs_dims) {
    const std::int64_t m = positive(raw, "m", "");
    const std::int64_t n = positive(raw, "n", "");
    cfg["m"] = m;
    cfg["n"] = n;
    cfg["alpha"] = weights(raw, "alpha", static_cast<std::size_t>(m));
    cfg["beta"] = weights(raw, "beta", static_cast<std::size_t>(n));
    cfg["psi"] = resolve_psi(raw);
  }
  if (needs_f || (subcommand == "baseline" && find(raw, "f") != nullptr)) cfg["f"] = resolve_f(raw);
  if (needs_b) {
    const json* b = find(raw, "b");
    if (b == nullptr) fail("b", "required array is missing");
    auto values = numbers(*b, "b");
    if (values.size() != cfg["m"].get<std::size_t>()) fail("b", "expected m entries");
    cfg["b"] = values;
  }
  if (subcommand == "verdict") cfg["r_max"] = positive(raw, "r_max", "", 4096);
  if (subcommand == "limsup") cfg["r_max"] = positive(raw, "r_max", "", 512);

  const json empty = json::object();
  auto section = [&](std::string_view key) -> const json& {
    const json* s = find(raw, key);
    if (s == nullptr) return empty;
    if (!s->is_object()) fail(std::string(key), "expected an object");
    return *s;
  };

  if (subcommand == "content") {
    const json& c = section("content");
    const json* sides = find(c, "sides");
    if (sides == nullptr) fail("content.sides", "required array is missing");
    auto values = numbers(*sides, "content.sides");
    const bool oracle_default = values.size() <= 3;
    bool oracle = oracle_default;
    if (const json* o = find(c, "oracle")) {
      if (!o->is_boolean()) fail("content.oracle", "expected true or false");
      oracle = o->get<bool>();
    }
    cfg["content"] = {{"sides", values}, {"oracle", oracle}, {"per_octave", positive(c, "per_octave", "content", 4)}};
  } else if (subcommand == "transfer") {
    const json& t = section("transfer");
    const std::string path = "transfer";
    const json* a = find(t, "A");
    if (a == nullptr || !a->is_array()) fail("transfer.A", "required m x n array of rows");
    json rows = json::array();
    for (std::size_t i = 0; i < a->size(); ++i) {
      auto row = numbers((*a)[i], "transfer.A[" + std::to_string(i) + "]");
      if (row.size() != cfg["n"].get<std::size_t>()) fail("transfer.A[" + std::to_string(i) + "]", "expected n entries");
      rows.push_back(row);
    }
    if (rows.size() != cfg["m"].get<std::size_t>()) fail("transfer.A", "expected m rows");
    json out = {{"A", rows}, {"u_range", positive(t, "u_range", path, 10)}};
    out["t"] = find(t, "t") ? numbers(t["t"], "transfer.t") : std::vector<double>{};
    out["c"] = find(t, "c") ? json(number(t, "c", path)) : json(nullptr);
    out["witness_t"] = find(t, "witness_t") ? json(number(t, "witness_t", path)) : json(nullptr);
    json us = json::array();
    if (const json* u = find(t, "u")) {
      if (!u->is_array()) fail("transfer.u", "expected an array of integer vectors");
      for (std::size_t i = 0; i < u->size(); ++i) {
        auto entries = integers((*u)[i], "transfer.u[" + std::to_string(i) + "]");
        if (entries.size() != cfg["m"].get<std::size_t>()) fail("transfer.u[" + std::to_string(i) + "]", "expected m entries");
        us.push_back(entries);
      }
    }
    out["u"] = us;
    cfg["transfer"] = out;
  } else if (subcommand == "limsup") {
    const json& l = section("limsup");
    cfg["limsup"] = {{"a", number(l, "a", "limsup", 4.0)},
                     {"scan_r_max", positive(l, "scan_r_max", "limsup", 512)},
                     {"pairs", positive(l, "pairs", "limsup", 100)},
                     {"pair_r_max", positive(l, "pair_r_max", "limsup", 64)}};
  } else if (subcommand == "baseline") {
    cfg["baseline"] = {{"Q", positive(section("baseline"), "Q", "baseline", 4096)}};
  }
  return cfg;
}

RunResult run(std::string_view subcommand, const json& config, int workers) {
  RunResult res;
  res.report = {{"subcommand", subcommand}, {"config", config}};
  try {
    json result;
    if (subcommand == "verdict") {
      result = run_verdict(config, workers);
    } else if (subcommand == "content") {
      result = run_content(config);
    } else if (subcommand == "transfer") {
      result = run_transfer(config, res);
    } else if (subcommand == "limsup") {
      result = run_limsup(config, workers, res);
    } else if (subcommand == "baseline") {
      result = run_baseline(config);
    } else {
      throw ValidationError("unknown subcommand " + std::string(subcommand));
    }
    res.report["result"] = result;
  } catch (const BudgetError& e) {
    res.exit_code = kBudgetExceeded;
    res.message = e.what();
  } catch (const InvariantViolation& e) {
    res.exit_code = kInvariantViolation;
    res.message = e.what();
  } catch (const Error& e) {
    res.exit_code = kConfigError;
    res.message = e.what();
  }
  if (res.exit_code != kOk) res.report["error"] = {{"exit_code", res.exit_code}, {"message", res.message}};
  res.report["timestamp"] = iso_timestamp();
  return res;
}

json without_timestamp(const json& report) {
  json copy = report;
  copy.erase("timestamp");
  return copy;
}

void write_outputs(const RunResult& result, std::string_view subcommand,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem(subcommand);
  std::ofstream json_out(dir / (stem + ".json"));
  json_out << result.report.dump(2) << '\n';
  if (!json_out) throw Error("cannot write " + (dir / (stem + ".json")).string());
  if (result.csv) {
    std::ofstream csv_out(dir / (stem + ".csv"));
    csv_out << *result.csv;
    if (!csv_out) throw Error("cannot write " + (dir / (stem + ".csv")).string());
  }
}

}  // namespace dnlab::cli
