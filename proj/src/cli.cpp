// Copyright 2026 The qcoop Authors
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

#include "qcoop/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "json.hpp"

#include "qcoop/classical.hpp"
#include "qcoop/coalition.hpp"
#include "qcoop/errors.hpp"
#include "qcoop/game.hpp"
#include "qcoop/verify.hpp"

namespace qcoop {

namespace {

using nlohmann::json;

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) {
    throw ConfigError("config field " + where + " must be a number");
  }
  return node.get<double>();
}

ThreeQubitState parse_state(const json& node) {
  if (!node.is_object()) {
    throw ConfigError("config field \"state\" must be an object keyed by "
                      "basis labels");
  }
  if (node.size() != kBasisLabels.size()) {
    throw ConfigError("config field \"state\" must contain exactly the 8 "
                      "basis keys \"111\"..\"222\"");
  }
  std::array<Complex, 8> amps;
  for (int k = 0; k < 8; ++k) {
    const std::string& label = kBasisLabels[k];
    if (!node.contains(label)) {
      throw ConfigError("config field \"state\" is missing basis key \"" +
                        label + "\"");
    }
    const json& pair = node.at(label);
    if (!pair.is_array() || pair.size() != 2) {
      throw ConfigError("state amplitude \"" + label +
                        "\" must be a [re, im] array");
    }
    amps[k] = Complex(number_at(pair[0], "state." + label + "[0]"),
                      number_at(pair[1], "state." + label + "[1]"));
  }
  return make_state(amps);
}

StrategyProfile parse_profile(const json& node) {
  if (!node.is_array() || node.size() != 3) {
    throw ConfigError("config field \"profile\" must be a [p, q, r] array");
  }
  const double p = number_at(node[0], "profile[0]");
  const double q = number_at(node[1], "profile[1]");
  const double r = number_at(node[2], "profile[2]");
  try {
    return StrategyProfile(p, q, r);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config field \"profile\" is invalid: ") +
                      e.what());
  }
}

SweepSpec parse_sweep(const json& node) {
  if (!node.is_object()) {
    throw ConfigError("config field \"sweep\" must be an object");
  }
  SweepSpec spec;
  for (const auto& [key, value] : node.items()) {
    if (key == "start") {
      spec.start = number_at(value, "sweep.start");
    } else if (key == "stop") {
      spec.stop = number_at(value, "sweep.stop");
    } else if (key == "step") {
      spec.step = number_at(value, "sweep.step");
    } else {
      throw ConfigError("unknown key \"" + key + "\" in config field "
                        "\"sweep\"");
    }
  }
  if (!node.contains("step")) {
    throw ConfigError("config field \"sweep\" must provide \"step\"");
  }
  if (!(spec.start >= 0.0 && spec.stop <= 1.0 && spec.start < spec.stop)) {
    throw ConfigError("sweep range must satisfy 0 <= start < stop <= 1");
  }
  if (!(spec.step > 0.0)) {
    throw ConfigError("sweep step must be positive");
  }
  const double range = spec.stop - spec.start;
  const long n = std::lround(range / spec.step);
  if (n < 1 || std::abs(spec.start + n * spec.step - spec.stop) > 1e-9) {
    throw ConfigError("sweep step must divide the range stop - start");
  }
  return spec;
}

std::uint64_t parse_seed(const json& node) {
  if (!node.is_number_unsigned()) {
    throw ConfigError("config field \"seed\" must be an unsigned integer");
  }
  return node.get<std::uint64_t>();
}

// Report lines share the "name = value" shape; keep them via helpers.
void print_weights(const StateWeights& w, std::ostream& out) {
  out << "weights: w1 = " << format_double(w.w1)
      << ", w2 = " << format_double(w.w2)
      << ", w3 = " << format_double(w.w3)
      << ", w4 = " << format_double(w.w4) << "\n";
}

void print_matrix(const CoalitionMatrix& matrix, std::ostream& out) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%8s", "");
  out << buf;
  for (const std::string& label : matrix.col_labels) {
    std::snprintf(buf, sizeof(buf), "%8s", label.c_str());
    out << buf;
  }
  out << "\n";
  for (std::size_t i = 0; i < matrix.entries.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%8s", matrix.row_labels[i].c_str());
    out << buf;
    for (double entry : matrix.entries[i]) {
      std::snprintf(buf, sizeof(buf), "%8s", format_double(entry).c_str());
      out << buf;
    }
    out << "\n";
  }
}

std::uint64_t env_seed_or_default() {
  const char* raw = std::getenv("QCOOP_SEED");
  if (raw == nullptr || raw[0] == '\0') {
    return kDefaultVerifySeed;
  }
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw ConfigError(std::string("QCOOP_SEED is not an unsigned integer: ") +
                      raw);
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  RunConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "state") {
      config.state = parse_state(value);
    } else if (key == "profile") {
      config.profile = parse_profile(value);
    } else if (key == "sweep") {
      config.sweep = parse_sweep(value);
    } else if (key == "output") {
      if (!value.is_string() ||
          (value != "report" && value != "csv")) {
        throw ConfigError("config field \"output\" must be \"report\" or "
                          "\"csv\"");
      }
      config.output = value.get<std::string>();
    } else if (key == "seed") {
      config.seed = parse_seed(value);
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  return config;
}

std::string format_double(double value) {
  if (value == 0.0) {
    value = 0.0;  // squash negative zero
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

int run_payoff(const RunConfig& config, std::ostream& out) {
  if (!config.state.has_value()) {
    throw ConfigError("payoff requires \"state\" in the config; "
                      "usage: qcoop payoff <config.json>");
  }
  if (!config.profile.has_value()) {
    throw ConfigError("payoff requires \"profile\" in the config; "
                      "usage: qcoop payoff <config.json>");
  }
  const ThreeQubitState& state = *config.state;
  const StrategyProfile& profile = *config.profile;
  const PayoffConstants constants = standard_constants();
  const StateWeights weights = state_weights(state);

  out << "profile: p = " << format_double(profile.p())
      << ", q = " << format_double(profile.q())
      << ", r = " << format_double(profile.r()) << "\n";
  print_weights(weights, out);
  double max_discrepancy = 0.0;
  for (Player player : {Player::kA, Player::kB, Player::kC}) {
    const double by_trace = payoff_by_trace(state, profile, constants, player);
    const double by_form = payoff_closed_form(profile, weights, player);
    max_discrepancy = std::max(max_discrepancy, std::abs(by_trace - by_form));
    out << "player " << player_name(player)
        << ": trace = " << format_double(by_trace)
        << ", closed form = " << format_double(by_form) << "\n";
  }
  out << "max discrepancy = " << format_double(max_discrepancy) << "\n";
  return kExitOk;
}

int run_analyze(const RunConfig& config, std::ostream& out) {
  if (!config.state.has_value()) {
    throw ConfigError("analyze requires \"state\" in the config; "
                      "usage: qcoop analyze <config.json>");
  }
  const ThreeQubitState& state = *config.state;
  const StateWeights weights = state_weights(state);
  const SymmetryVerdict symmetry = check_symmetry(state, standard_constants());

  print_weights(weights, out);
  if (!symmetry.admissible) {
    out << "admissible: no\n";
    for (const SymmetryViolation& v : symmetry.violations) {
      out << "violation: " << v.condition << " (magnitude "
          << format_double(v.magnitude) << ")\n";
    }
    return kExitInadmissible;
  }
  out << "admissible: yes\n";
  const CoalitionValueReport report = solve_coalition_value(weights);
  out << "l* = " << format_double(report.l_star) << "\n";
  out << "v_coalition = " << format_double(report.v_coalition) << "\n";
  out << "v_oddman = " << format_double(report.v_oddman) << "\n";
  out << "grid_check_gap = " << format_double(report.grid_check_gap) << "\n";
  out << "verdict: " << motivation_name(report.verdict) << "\n";
  return kExitOk;
}

int run_classical(std::ostream& out) {
  const CoalitionSpec coalition({Player::kB, Player::kC});
  const CoalitionMatrix full = coalition_matrix(coalition);
  const CoalitionMatrix reduced = eliminate_dominated(full);

  out << "coalition " << coalition.label() << " against odd man "
      << player_name(coalition.odd_man()) << "\n";
  print_matrix(full, out);

  out << "eliminated rows:";
  for (const std::string& label : full.row_labels) {
    bool survived = false;
    for (const std::string& kept : reduced.row_labels) {
      survived = survived || kept == label;
    }
    if (!survived) {
      out << " " << label;
    }
  }
  out << "\n";
  out << "reduced matrix:\n";
  print_matrix(reduced, out);

  const std::array<std::array<double, 2>, 2> m = {reduced.entries[0],
                                                  reduced.entries[1]};
  const MixedSolution solution = solve_2x2_zero_sum(m);
  out << "optimal row mixture: " << format_double(solution.row_mixture[0])
      << " " << reduced.row_labels[0] << " + "
      << format_double(solution.row_mixture[1]) << " "
      << reduced.row_labels[1] << "\n";
  out << "optimal column mixture: " << format_double(solution.col_mixture[0])
      << " " << reduced.col_labels[0] << " + "
      << format_double(solution.col_mixture[1]) << " "
      << reduced.col_labels[1] << "\n";
  out << "value = " << format_double(solution.value) << "\n";

  out << "coalition values:\n";
  const auto values = classical_coalition_values();
  for (int size : {1, 2}) {
    for (const auto& [spec, value] : values) {
      if (spec.size() == size) {
        out << "  v(" << spec.label() << ") = " << format_double(value)
            << "\n";
      }
    }
  }
  return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
  if (!config.sweep.has_value()) {
    throw ConfigError("sweep requires \"sweep\" in the config; "
                      "usage: qcoop sweep <config.json>");
  }
  const SweepSpec& spec = *config.sweep;
  const long n = std::lround((spec.stop - spec.start) / spec.step);
  out << "t,w1,w2,v_coalition,v_oddman,verdict,deficit_at_origin\n";
  for (long i = 0; i <= n; ++i) {
    const double t =
        (i == n) ? spec.stop : spec.start + static_cast<double>(i) * spec.step;
    std::array<Complex, 8> amps{};
    amps[0] = std::sqrt(1.0 - t);  // c111
    amps[4] = std::sqrt(t);        // c211
    const ThreeQubitState state = make_state(amps);
    const StateWeights weights = state_weights(state);
    const CoalitionValueReport report = solve_coalition_value(weights);
    const double deficit =
        zero_sum_deficit(StrategyProfile(0.0, 0.0, 0.0), weights);
    out << format_double(t) << "," << format_double(weights.w1) << ","
        << format_double(weights.w2) << ","
        << format_double(report.v_coalition) << ","
        << format_double(report.v_oddman) << ","
        << motivation_name(report.verdict) << "," << format_double(deficit)
        << "\n";
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, const VerifyOptions& options,
               std::ostream& out) {
  std::uint64_t seed = kDefaultVerifySeed;
  if (options.seed_flag.has_value()) {
    seed = *options.seed_flag;
  } else if (config.seed.has_value()) {
    seed = *config.seed;
  } else {
    seed = env_seed_or_default();
  }

  PayoffConstants constants = standard_constants();
  if (options.corrupt_constants) {
    constants.alpha[2] += 0.5;
    constants.symmetric = false;
    out << "constants corrupted for negative control\n";
  }

  out << "seed: " << seed << "\n";
  bool all_passed = true;
  for (const PropertyResult& result : run_property_suite(seed, constants)) {
    all_passed = all_passed && result.passed;
    out << result.name << " (" << result.trials << " trials): "
        << (result.passed ? "PASS" : "FAIL") << " (max gap "
        << format_double(result.max_gap) << ", tolerance "
        << format_double(result.tolerance) << ")\n";
  }
  out << (all_passed ? "all properties passed\n" : "property failure\n");
  return all_passed ? kExitOk : kExitPropertyFailure;
}

}  // namespace qcoop
