/*
   Copyright 2026 The sempilot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sempilot/pilot.hpp"
#include "sempilot/semantic_pilot.hpp"

namespace sempilot {

/// The worked selection example: a sentence, a noisy decode of it, and a
/// corrector output that repairs the first part and masks the rest.
struct Table1Example {
  std::string transmitted;
  std::string decoded;
  std::string corrected;
  std::vector<bool> matches;  ///< per character: decoded == corrected
  SemanticPilot pilot;
};

Table1Example table1_example();
void print_table1(const Table1Example& example, std::ostream& out);

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Mean |h_LS - h|^2 over `trials` noisy pilot observations against sigma2 / M.
CheckResult check_ls_variance(std::size_t trials, double sigma2, const PilotConfig& pilot, std::uint64_t seed,
                              double rel_tol = 0.02);

/// Mean |h_r - h|^2 with an error-free semantic pilot of `semantic_symbols`
/// symbols against sigma2 / (M + N).
CheckResult check_refine_variance(std::size_t trials, double sigma2, const PilotConfig& pilot,
                                  std::size_t semantic_symbols, std::uint64_t seed, double rel_tol = 0.02);

/// Refinement and scaling over the same full decided set give gamma = 1.
CheckResult check_gamma_identity(std::size_t trials, std::uint64_t seed, double abs_tol = 1e-12);

/// Perturbing the refined estimate (8 complex directions) or gamma (2 real
/// directions) by `eps` never lowers the corresponding objective.
CheckResult check_closed_form_optimality(std::size_t trials, std::uint64_t seed, double eps = 1e-4);

struct VerifyOptions {
  std::size_t variance_trials = 100000;
  std::size_t identity_trials = 1000;
  double sigma2 = 0.1;
  std::size_t semantic_symbols = 48;
  std::uint64_t seed = 2024;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace sempilot
