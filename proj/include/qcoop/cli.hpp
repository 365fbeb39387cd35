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

#ifndef QCOOP_CLI_HPP_
#define QCOOP_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qcoop/channel.hpp"

namespace qcoop {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitStateValidation = 2;
inline constexpr int kExitConfigParse = 3;
inline constexpr int kExitInadmissible = 4;

inline constexpr std::uint64_t kDefaultVerifySeed = 12345;

// Grid over the entanglement parameter t; stop is emitted exactly.
struct SweepSpec {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.1;
};

struct RunConfig {
  std::optional<ThreeQubitState> state;
  std::optional<StrategyProfile> profile;
  std::optional<SweepSpec> sweep;
  std::string output = "report";
  std::optional<std::uint64_t> seed;
};

struct VerifyOptions {
  std::optional<std::uint64_t> seed_flag;
  // Negative control: perturbs the payoff constants so that the oracle
  // equivalence property must fail.
  bool corrupt_constants = false;
};

// Parses the JSON config document. Structural problems raise ConfigError;
// state amplitude validation errors propagate from make_state.
RunConfig parse_config(const std::string& json_text);

// %.12g with negative zero normalized away.
std::string format_double(double value);

int run_payoff(const RunConfig& config, std::ostream& out);
int run_analyze(const RunConfig& config, std::ostream& out);
int run_classical(std::ostream& out);
int run_sweep(const RunConfig& config, std::ostream& out);
int run_verify(const RunConfig& config, const VerifyOptions& options,
               std::ostream& out);

}  // namespace qcoop

#endif  // QCOOP_CLI_HPP_
