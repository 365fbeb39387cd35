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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qcoop/cli.hpp"
#include "qcoop/errors.hpp"

namespace {

// "-" selects standard input.
std::string read_config_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw qcoop::ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-player quantum cooperative game calculator"};
  app.require_subcommand(1);

  std::string payoff_config;
  CLI::App* payoff = app.add_subcommand(
      "payoff", "Evaluate per-player payoffs by trace and closed form");
  payoff->add_option("config", payoff_config, "JSON config path or -")
      ->required();

  std::string analyze_config;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Coalition analysis of an initial state");
  analyze->add_option("config", analyze_config, "JSON config path or -")
      ->required();

  app.add_subcommand("classical",
                     "Solve the classical coalition form of the game");

  std::string sweep_config;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV sweep over the entanglement parameter t");
  sweep->add_option("config", sweep_config, "JSON config path or -")
      ->required();

  std::string verify_config;
  qcoop::VerifyOptions verify_options;
  std::uint64_t seed_flag = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the randomized property suite");
  verify->add_option("config", verify_config, "JSON config path or -");
  CLI::Option* seed_option =
      verify->add_option("--seed", seed_flag, "Seed for the property suite");
  verify->add_flag("--corrupt-constants", verify_options.corrupt_constants,
                   "Negative control: perturb the payoff constants so the "
                   "oracle equivalence property fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return qcoop::kExitConfigParse;
  }

  try {
    if (payoff->parsed()) {
      return qcoop::run_payoff(qcoop::parse_config(read_config_text(payoff_config)),
                               std::cout);
    }
    if (analyze->parsed()) {
      return qcoop::run_analyze(
          qcoop::parse_config(read_config_text(analyze_config)), std::cout);
    }
    if (app.get_subcommand("classical")->parsed()) {
      return qcoop::run_classical(std::cout);
    }
    if (sweep->parsed()) {
      return qcoop::run_sweep(qcoop::parse_config(read_config_text(sweep_config)),
                              std::cout);
    }
    if (verify->parsed()) {
      qcoop::RunConfig config;
      if (!verify_config.empty()) {
        config = qcoop::parse_config(read_config_text(verify_config));
      }
      if (seed_option->count() > 0) {
        verify_options.seed_flag = seed_flag;
      }
      return qcoop::run_verify(config, verify_options, std::cout);
    }
  } catch (const qcoop::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcoop::kExitConfigParse;
  } catch (const qcoop::AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcoop::kExitInadmissible;
  } catch (const qcoop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcoop::kExitStateValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcoop::kExitPropertyFailure;
  }
  return qcoop::kExitConfigParse;
}
