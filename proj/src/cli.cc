// Copyright 2026 The edfnorm Authors
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

#include "edfnorm/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edfnorm/alternatives.h"
#include "edfnorm/edf_tests.h"
#include "edfnorm/errors.h"
#include "edfnorm/kernels.h"
#include "edfnorm/montecarlo.h"
#include "edfnorm/numerics.h"
#include "edfnorm/slopes.h"
#include "edfnorm/spectral.h"
#include "edfnorm/test_kind.h"
#include "nlohmann/json.hpp"

#ifndef EDFNORM_VERSION
#define EDFNORM_VERSION "0.0.0"
#endif

namespace edfnorm::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

// Invalid flags, config values or input data.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson, kPretty };

struct Options {
  // Shared by every subcommand.
  std::size_t m = 1024;
  std::size_t panels = 40;
  std::size_t panel_nodes = 256;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "pretty";
  std::string out;

  // eigen
  bool validate_simple = false;
  std::size_t count = 3;

  // slopes and simulate
  std::string alt;
  double theta = 0.0;

  // test and simulate
  std::string test;
  std::string input = "-";
  std::size_t replicates = 10000;
  bool unbiased_variance = false;

  // simulate
  std::string process;
  std::size_t n = 2000;
  std::vector<double> grid = {-2.0, -1.0, 0.0, 1.0, 2.0};
};

std::string num(double v, int digits = 10) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  if (s == "pretty") return Format::kPretty;
  throw ConfigError("unknown --format '" + s + "' (csv, json or pretty)");
}

QuadratureRule quadrature(const Options& o) {
  return composite_gauss_legendre(kDomainLo, kDomainHi, o.panels,
                                  o.panel_nodes);
}

DiscretizationConfig discretization(const Options& o) {
  DiscretizationConfig c;
  c.nodes = o.m;
  return c;
}

FamilyPtr family_or_config_error(const std::string& name) {
  try {
    return parse_family(name);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<EdfTest> tests_or_config_error(const std::string& name) {
  if (name == "all") return {kAllTests.begin(), kAllTests.end()};
  try {
    return {parse_test(name)};
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

// Configuration echo shared by all output formats.
Json config_echo(const std::string& command, const Options& o) {
  Json c;
  c["command"] = command;
  c["m"] = o.m;
  c["panels"] = o.panels;
  c["panel_nodes"] = o.panel_nodes;
  c["seed"] = o.seed;
  c["threads"] = o.threads;
  c["format"] = o.format;
  if (command == "eigen") {
    c["validate_simple"] = o.validate_simple;
    c["count"] = o.count;
  } else if (command == "slopes") {
    c["alt"] = o.alt;
  } else if (command == "test") {
    c["input"] = o.input;
    c["test"] = o.test;
    c["replicates"] = o.replicates;
    c["variance_divisor"] = o.unbiased_variance ? "n-1" : "n";
  } else if (command == "simulate") {
    if (!o.process.empty()) {
      c["process"] = o.process;
      c["grid"] = o.grid;
    }
    if (!o.test.empty()) c["test"] = o.test;
    if (!o.alt.empty()) {
      c["alt"] = o.alt;
      c["theta"] = o.theta;
    }
    c["n"] = o.n;
    // The limit check draws one large sample and has no replicates.
    if (o.alt.empty()) c["replicates"] = o.replicates;
  }
  return c;
}

Json document(const std::string& command, const Options& o) {
  Json doc;
  doc["schema"] = kSchema;
  doc["version"] = std::string(version());
  doc["config"] = config_echo(command, o);
  return doc;
}

// "# key=value" lines for CSV output.
std::string csv_echo(const Json& doc) {
  std::ostringstream s;
  s << "# schema=" << kSchema << "\n";
  s << "# version=" << doc["version"].get<std::string>() << "\n";
  for (const auto& [key, value] : doc["config"].items()) {
    s << "# " << key << "=";
    if (value.is_string()) {
      s << value.get<std::string>();
    } else if (value.is_array()) {
      bool first = true;
      for (const auto& v : value) {
        s << (first ? "" : ";") << num(v.get<double>());
        first = false;
      }
    } else {
      s << value.dump();
    }
    s << "\n";
  }
  return s.str();
}

std::string pretty_echo(const Json& doc) {
  std::ostringstream s;
  s << "edfnorm " << doc["version"].get<std::string>() << " ("
    << doc["config"].dump() << ")\n";
  return s.str();
}

std::string_view eigen_symbol(Operator op) {
  switch (op) {
    case Operator::kW:
      return "lambda";
    case Operator::kA:
      return "nu";
    case Operator::kU:
      return "zeta";
  }
  return "?";
}

// Closed-form spectra of the simple-hypothesis validation operators.
double simple_eigenvalue(Operator op, std::size_t k) {
  const double kk = static_cast<double>(k);
  if (op == Operator::kW) return 1.0 / (kk * kk * std::numbers::pi * std::numbers::pi);
  return 1.0 / (kk * (kk + 1.0));
}

std::string run_eigen(const Options& o, Format format) {
  Json doc = document("eigen", o);
  DiscretizationConfig config = discretization(o);
  std::vector<Operator> ops = {Operator::kW, Operator::kA, Operator::kU};
  if (o.validate_simple) {
    config.kernel_override = KernelKind::kBrownianBridge;
    ops = {Operator::kW, Operator::kA};
  }
  Json list = Json::array();
  std::vector<SpectralResult> results;
  for (Operator op : ops) {
    results.push_back(leading_eigenvalue(op, config, o.count));
    const SpectralResult& r = results.back();
    KernelSpec kernel = operator_kernel(op);
    if (config.kernel_override) kernel.kind = *config.kernel_override;
    Json entry;
    entry["operator"] = std::string(to_string(op));
    std::string kernel_name(to_string(kernel.kind));
    if (kernel.weighting == Weighting::kAndersonDarling) {
      kernel_name += "/anderson_darling";
    }
    entry["kernel"] = kernel_name;
    entry["leading_eigenvalues"] = r.leading_eigenvalues;
    if (o.validate_simple) {
      Json exact = Json::array();
      for (std::size_t k = 1; k <= r.leading_eigenvalues.size(); ++k) {
        exact.push_back(simple_eigenvalue(op, k));
      }
      entry["closed_form"] = exact;
    }
    entry["nodes_fine"] = r.config.nodes;
    entry["nodes_coarse"] = r.config.nodes / 2;
    entry["coarse_leading"] = r.coarse_leading;
    entry["refinement_delta"] = r.refinement_delta;
    list.push_back(entry);
  }
  doc["operators"] = list;

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc);
    s << "operator,kernel,index,eigenvalue,refinement_delta\n";
    for (const auto& e : doc["operators"]) {
      const auto& values = e["leading_eigenvalues"];
      for (std::size_t k = 0; k < values.size(); ++k) {
        s << e["operator"].get<std::string>() << ","
          << e["kernel"].get<std::string>() << "," << k + 1 << ","
          << num(values[k].get<double>(), 12) << ","
          << num(e["refinement_delta"].get<double>(), 3) << "\n";
      }
    }
    return s.str();
  }
  s << pretty_echo(doc);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const SpectralResult& r = results[i];
    s << "operator " << to_string(ops[i]) << " ("
      << doc["operators"][i]["kernel"].get<std::string>() << "), m = "
      << r.config.nodes << ", refinement delta " << num(r.refinement_delta, 3)
      << "\n";
    for (std::size_t k = 0; k < r.leading_eigenvalues.size(); ++k) {
      s << "  " << eigen_symbol(ops[i]) << "_" << k + 1 << " = "
        << num(r.leading_eigenvalues[k], 10);
      if (o.validate_simple) {
        s << "  (closed form " << num(simple_eigenvalue(ops[i], k + 1), 10)
          << ")";
      }
      s << "\n";
    }
  }
  return s.str();
}

Json report_json(const SlopeReport& r) {
  Json j;
  j["alternative"] = r.family;
  j["label"] = r.label;
  j["k_lrt"] = r.k_lrt;
  Json k;
  Json e;
  for (EdfTest t : kAllTests) {
    if (!r.per_test.contains(t)) continue;
    k[std::string(to_string(t))] = r.per_test.at(t);
    e[std::string(to_string(t))] = r.efficiency.at(t);
  }
  j["k"] = k;
  j["efficiency"] = e;
  return j;
}

std::string run_slopes(const Options& o, Format format) {
  const FamilyPtr family = family_or_config_error(o.alt);
  Json doc = document("slopes", o);
  const SlopeContext context = compute_slope_context(discretization(o));
  const SlopeReport r = slope_report(family, kAllTests, context, quadrature(o));
  doc["report"] = report_json(r);

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc) << "test,k_T,k_LRT,efficiency\n";
    for (EdfTest t : kAllTests) {
      s << to_string(t) << "," << num(r.per_test.at(t), 10) << ","
        << num(r.k_lrt, 10) << "," << num(r.efficiency.at(t), 10) << "\n";
    }
    return s.str();
  }
  s << pretty_echo(doc) << r.label << "\n  k_LRT = " << num(r.k_lrt, 10)
    << "\n";
  for (EdfTest t : kAllTests) {
    s << "  " << to_string(t) << ": k_T = " << num(r.per_test.at(t), 10)
      << ", efficiency = " << fixed(r.efficiency.at(t), 3) << "\n";
  }
  return s.str();
}

std::string run_table(const Options& o, Format format) {
  Json doc = document("table", o);
  const SlopeContext context = compute_slope_context(discretization(o));
  const auto families = reference_families();
  const auto table =
      efficiency_table(families, kAllTests, context, quadrature(o));
  Json rows = Json::array();
  for (const auto& r : table) rows.push_back(report_json(r));
  doc["rows"] = rows;

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc) << "alternative,D,W2,A2,G,U2\n";
    for (const auto& r : table) {
      s << r.family;
      for (EdfTest t : kAllTests) s << "," << fixed(r.efficiency.at(t), 3);
      s << "\n";
    }
    return s.str();
  }
  s << pretty_echo(doc);
  char line[160];
  std::snprintf(line, sizeof line, "%-38s %6s %6s %6s %6s %6s\n",
                "alternative", "D", "W2", "A2", "G", "U2");
  s << line;
  for (const auto& r : table) {
    std::snprintf(line, sizeof line, "%-38s %6.3f %6.3f %6.3f %6.3f %6.3f\n",
                  r.label.c_str(), r.efficiency.at(EdfTest::kD),
                  r.efficiency.at(EdfTest::kW2), r.efficiency.at(EdfTest::kA2),
                  r.efficiency.at(EdfTest::kG), r.efficiency.at(EdfTest::kU2));
    s << line;
  }
  return s.str();
}

// Newline-delimited reals; '#' starts a comment.
std::vector<double> read_values(std::istream& in, const std::string& source) {
  std::vector<double> values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    double v = 0.0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw ConfigError(source + ":" + std::to_string(number) +
                        ": not a number: '" + token + "'");
    }
    values.push_back(v);
  }
  return values;
}

std::string run_test(Options o, Format format, std::istream& in) {
  if (o.test.empty()) o.test = "all";
  const std::vector<EdfTest> tests = tests_or_config_error(o.test);
  if (o.replicates != 0 && o.replicates < kMinReplicates) {
    throw ConfigError("--replicates must be 0 (no p-values) or at least " +
                      std::to_string(kMinReplicates));
  }
  std::vector<double> values;
  if (o.input == "-") {
    values = read_values(in, "<stdin>");
  } else {
    std::ifstream file(o.input);
    if (!file) throw ConfigError("cannot open input file '" + o.input + "'");
    values = read_values(file, o.input);
  }
  const Sample sample(std::move(values));
  StatisticOptions options;
  options.divisor =
      o.unbiased_variance ? VarianceDivisor::kNMinus1 : VarianceDivisor::kN;

  std::vector<TestOutcome> outcomes;
  if (o.replicates > 0) {
    outcomes = mc_pvalues(tests, sample, o.replicates, o.seed, options,
                          o.threads);
  } else {
    for (EdfTest t : tests) outcomes.push_back(statistic(t, sample, options));
  }

  Json doc = document("test", o);
  doc["n"] = sample.size();
  doc["mu_hat"] = outcomes.front().mu_hat;
  doc["sigma2_hat"] = outcomes.front().sigma2_hat;
  Json list = Json::array();
  for (const auto& out : outcomes) {
    Json j;
    j["test"] = std::string(to_string(out.test));
    j["statistic"] = out.statistic;
    j["p_value"] = out.p_value ? Json(*out.p_value) : Json(nullptr);
    j["mc_replicates"] =
        out.mc_replicates ? Json(*out.mc_replicates) : Json(nullptr);
    j["clamped"] = out.clamped;
    list.push_back(j);
  }
  doc["outcomes"] = list;

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc) << "test,statistic,p_value,clamped\n";
    for (const auto& out : outcomes) {
      s << to_string(out.test) << "," << num(out.statistic, 12) << ","
        << (out.p_value ? num(*out.p_value, 6) : "") << ","
        << (out.clamped ? "true" : "false") << "\n";
    }
    return s.str();
  }
  s << pretty_echo(doc) << "n = " << sample.size()
    << ", mu_hat = " << num(outcomes.front().mu_hat)
    << ", sigma2_hat = " << num(outcomes.front().sigma2_hat) << "\n";
  for (const auto& out : outcomes) {
    s << "  " << to_string(out.test) << " = " << num(out.statistic, 8);
    if (out.p_value) s << ", p = " << num(*out.p_value, 6);
    if (out.clamped) s << " (clamped)";
    s << "\n";
  }
  return s.str();
}

std::string simulate_covariance(const Options& o, Format format) {
  Process process;
  try {
    process = parse_process(o.process);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (o.n < 500) throw ConfigError("--n must be at least 500");
  if (o.replicates < 2000) throw ConfigError("--replicates must be >= 2000");
  for (double x : o.grid) {
    if (!(x >= -3.0 && x <= 3.0)) {
      throw ConfigError("--grid points must lie in [-3, 3]");
    }
  }
  const CovarianceEstimate est = simulate_process_cov(
      process, o.n, o.replicates, o.grid, o.seed, o.threads);
  Json doc = document("simulate", o);
  Json cells = Json::array();
  const auto k = static_cast<Eigen::Index>(o.grid.size());
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double x = o.grid[static_cast<std::size_t>(i)];
      const double y = o.grid[static_cast<std::size_t>(j)];
      Json c;
      c["x"] = x;
      c["y"] = y;
      c["empirical"] = est.empirical_cov(i, j);
      c["se"] = est.se(i, j);
      c["kernel"] = process == Process::kEta ? k_eta(x, y) : k_xi(x, y);
      cells.push_back(c);
    }
  }
  doc["covariance"] = cells;

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc) << "x,y,empirical,se,kernel\n";
  } else {
    s << pretty_echo(doc) << "covariance of sqrt(n) " << o.process
      << "_n: x y empirical se kernel\n";
  }
  const char sep = format == Format::kCsv ? ',' : ' ';
  for (const auto& c : cells) {
    s << (format == Format::kCsv ? "" : "  ") << num(c["x"].get<double>())
      << sep << num(c["y"].get<double>()) << sep
      << num(c["empirical"].get<double>(), 8) << sep
      << num(c["se"].get<double>(), 4) << sep
      << num(c["kernel"].get<double>(), 8) << "\n";
  }
  return s.str();
}

std::string simulate_null(const Options& o, Format format, EdfTest test) {
  if (o.n < 3) throw ConfigError("--n must be at least 3");
  if (o.replicates < 10000) throw ConfigError("--replicates must be >= 10000");
  const std::vector<double> v =
      null_distribution(test, o.n, o.replicates, o.seed, o.threads);
  const double r = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / r;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (r - 1.0));
  auto quantile = [&](double p) {
    const auto idx = static_cast<std::size_t>(std::ceil(p * r)) - 1;
    return v[std::min(idx, v.size() - 1)];
  };
  Json doc = document("simulate", o);
  Json j;
  j["test"] = std::string(to_string(test));
  j["mean"] = mean;
  j["mean_se"] = sd / std::sqrt(r);
  j["sd"] = sd;
  j["q90"] = quantile(0.90);
  j["q95"] = quantile(0.95);
  j["q99"] = quantile(0.99);
  doc["null_distribution"] = j;

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc) << "test,mean,mean_se,sd,q90,q95,q99\n"
      << to_string(test);
    for (const char* key : {"mean", "mean_se", "sd", "q90", "q95", "q99"}) {
      s << "," << num(j[key].get<double>(), 8);
    }
    s << "\n";
    return s.str();
  }
  s << pretty_echo(doc) << "null distribution of " << to_string(test)
    << " at n = " << o.n << "\n";
  for (const char* key : {"mean", "mean_se", "sd", "q90", "q95", "q99"}) {
    s << "  " << key << " = " << num(j[key].get<double>(), 8) << "\n";
  }
  return s.str();
}

std::string simulate_b_limit(const Options& o, Format format, EdfTest test) {
  const FamilyPtr family = family_or_config_error(o.alt);
  if (o.n < 100000) throw ConfigError("--n must be at least 100000");
  try {
    family->check_theta(o.theta);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const BLimitCheck c = validate_b_limit(test, family, o.theta, o.n, o.seed);
  Json doc = document("simulate", o);
  Json j;
  j["test"] = std::string(to_string(test));
  j["alternative"] = family->name();
  j["observed"] = c.observed;
  j["predicted"] = c.predicted;
  j["rel_err"] = c.rel_err;
  doc["b_limit"] = j;

  if (format == Format::kJson) return doc.dump(2) + "\n";
  std::ostringstream s;
  if (format == Format::kCsv) {
    s << csv_echo(doc) << "test,alternative,theta,observed,predicted,rel_err\n"
      << to_string(test) << "," << family->name() << "," << num(o.theta)
      << "," << num(c.observed, 8) << "," << num(c.predicted, 8) << ","
      << num(c.rel_err, 4) << "\n";
    return s.str();
  }
  s << pretty_echo(doc) << to_string(test) << " under " << family->label()
    << ", theta = " << num(o.theta) << ", n = " << o.n
    << "\n  observed = " << num(c.observed, 8)
    << "\n  predicted = " << num(c.predicted, 8)
    << "\n  rel_err = " << num(c.rel_err, 4) << "\n";
  return s.str();
}

std::string run_simulate(const Options& o, Format format) {
  const bool has_process = !o.process.empty();
  const bool has_test = !o.test.empty();
  if (has_process == has_test) {
    throw ConfigError("simulate needs exactly one of --process or --test");
  }
  if (has_process) {
    if (!o.alt.empty()) throw ConfigError("--alt applies only with --test");
    return simulate_covariance(o, format);
  }
  const std::vector<EdfTest> tests = tests_or_config_error(o.test);
  if (tests.size() != 1) throw ConfigError("simulate takes a single --test");
  if (o.alt.empty()) return simulate_null(o, format, tests.front());
  return simulate_b_limit(o, format, tests.front());
}

void check_common(const Options& o) {
  if (o.m < 64 || o.m > 8192) throw ConfigError("--m must be in [64, 8192]");
  if (o.panels < 4 || o.panels > 4000) {
    throw ConfigError("--panels must be in [4, 4000]");
  }
  if (o.panel_nodes < 2 || o.panel_nodes > 1024) {
    throw ConfigError("--panel-nodes must be in [2, 1024]");
  }
  if (o.threads < 1 || o.threads > 256) {
    throw ConfigError("--threads must be in [1, 256]");
  }
  if (o.count < 1 || o.count > 50) {
    throw ConfigError("--count must be in [1, 50]");
  }
}

}  // namespace

std::string_view version() { return EDFNORM_VERSION; }

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"EDF normality tests with estimated parameters: statistics, "
               "limiting spectra and local Bahadur efficiencies",
               "edfnorm"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "",
                 "Read options from a TOML or INI file; command-line flags win");
  app.add_option("--m", o.m, "Nystrom nodes on the coarse grid (fine = 2m)")
      ->capture_default_str();
  app.add_option("--panels", o.panels,
                 "Gauss-Legendre panels on [-10, 10]")
      ->capture_default_str();
  app.add_option("--panel-nodes", o.panel_nodes, "Nodes per panel")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Master random seed")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads")
      ->capture_default_str();
  app.add_option("--format", o.format, "csv, json or pretty")
      ->capture_default_str();
  app.add_option("--out", o.out, "Write output to this file");

  CLI::App* eigen = app.add_subcommand(
      "eigen", "Leading eigenvalues of the W, A and U operators");
  eigen->add_flag("--validate-simple", o.validate_simple,
                  "Use the simple-hypothesis kernel with known spectra");
  eigen->add_option("--count", o.count, "Eigenvalues per operator")
      ->capture_default_str();

  CLI::App* slopes =
      app.add_subcommand("slopes", "Local slopes and efficiencies for one "
                                   "alternative");
  slopes->add_option("--alt", o.alt,
                     "lehmann, lp1, lp2 or contam:<mu>:<sigma2>")
      ->required();

  app.add_subcommand("table", "Efficiency table for the reference "
                              "alternatives");

  CLI::App* test =
      app.add_subcommand("test", "Run the EDF tests on a data file");
  test->add_option("--input", o.input, "Data file, '-' for standard input")
      ->capture_default_str();
  test->add_option("--test", o.test, "D, W2, A2, G, U2 or all (default)");
  test->add_option("--replicates", o.replicates,
                   "Monte Carlo null replicates; 0 skips p-values")
      ->capture_default_str();
  test->add_flag("--unbiased-variance", o.unbiased_variance,
                 "Estimate sigma^2 with divisor n - 1");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo checks of the limiting theory");
  simulate->add_option("--process", o.process,
                       "eta or xi: covariance of the process on --grid");
  simulate->add_option("--test", o.test,
                       "Null distribution of a test, or its limit under "
                       "--alt");
  simulate->add_option("--alt", o.alt, "Alternative for the limit check");
  simulate->add_option("--theta", o.theta, "Alternative parameter");
  simulate->add_option("--n", o.n, "Sample size")->capture_default_str();
  simulate->add_option("--replicates", o.replicates, "Replicates")
      ->capture_default_str();
  simulate->add_option("--grid", o.grid, "Grid points, comma separated")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  try {
    check_common(o);
    const Format format = parse_format(o.format);
    if (command == "eigen") {
      text = run_eigen(o, format);
    } else if (command == "slopes") {
      text = run_slopes(o, format);
    } else if (command == "table") {
      text = run_table(o, format);
    } else if (command == "test") {
      text = run_test(o, format, in);
    } else {
      text = run_simulate(o, format);
    }
  } catch (const ConfigError& e) {
    err << "edfnorm: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DegenerateSampleError& e) {
    err << "edfnorm: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "edfnorm: " << command << " failed: " << e.what() << "\n";
    return kExitFailure;
  }

  if (o.out.empty()) {
    out << text;
    out.flush();
    return out ? kExitOk : kExitFailure;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    err << "edfnorm: cannot open output file '" << o.out << "'\n";
    return kExitConfigError;
  }
  file << text;
  return file ? kExitOk : kExitFailure;
}

}  // namespace edfnorm::cli
