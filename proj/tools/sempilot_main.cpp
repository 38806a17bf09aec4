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

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sempilot/config.hpp"
#include "sempilot/error.hpp"
#include "sempilot/harness.hpp"
#include "sempilot/report.hpp"
#include "sempilot/verify.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& snr, long long trials, long long seed,
                const std::string& corrector, const std::string& endpoint, const std::string& cache_dir,
                const std::string& out_dir, long long workers) {
  sempilot::ExperimentConfig cfg;
  if (!config_path.empty()) cfg = sempilot::load_config(config_path);

  // Command-line flags override the file.
  sempilot::ConfigMap overrides;
  if (!snr.empty()) overrides["snr_db"] = snr;
  if (trials >= 0) overrides["trials"] = std::to_string(trials);
  if (seed >= 0) overrides["master_seed"] = std::to_string(seed);
  if (!corrector.empty()) overrides["corrector.kind"] = corrector;
  if (!endpoint.empty()) overrides["corrector.endpoint"] = endpoint;
  if (!cache_dir.empty()) overrides["corrector.cache_dir"] = cache_dir;
  if (!out_dir.empty()) overrides["output_dir"] = out_dir;
  if (workers >= 0) overrides["workers"] = std::to_string(workers);
  sempilot::apply_config(cfg, overrides);
  cfg.validate();

  const auto start = std::chrono::steady_clock::now();
  const sempilot::ExperimentResult result = sempilot::run_experiment(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (result.corpus_substitutions > 0) {
    std::clog << "corpus: replaced " << result.corpus_substitutions << " out-of-alphabet characters with spaces\n";
  }
  for (const auto& path : sempilot::write_outputs(result, cfg.output_dir)) std::cout << "wrote " << path.string() << '\n';
  sempilot::write_markdown_summary(result, std::cout);
  std::cout << "elapsed: " << secs << " s\n";
  return 0;
}

int verify_command(long long trials, long long seed) {
  sempilot::VerifyOptions opts;
  if (trials > 0) opts.variance_trials = static_cast<std::size_t>(trials);
  if (seed >= 0) opts.seed = static_cast<std::uint64_t>(seed);
  bool ok = true;
  for (const auto& r : sempilot::run_verification(opts)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic-pilot data-aided channel estimation simulator"};
  app.require_subcommand(1);

  std::string config_path, snr, corrector, endpoint, cache_dir, out_dir;
  long long trials = -1, seed = -1, workers = -1;
  auto* run = app.add_subcommand("run", "Benchmark every estimation scheme across SNR");
  run->add_option("--config", config_path, "Key-value config file")->check(CLI::ExistingFile);
  run->add_option("--snr", snr, "Comma-separated SNR points in dB, e.g. 7,8,9,10");
  run->add_option("--trials", trials, "Trials per SNR point");
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--corrector", corrector, "oracle | identity | stochastic | remote");
  run->add_option("--endpoint", endpoint, "Chat-completions URL for the remote corrector");
  run->add_option("--cache-dir", cache_dir, "Response cache directory for the remote corrector");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* demo = app.add_subcommand("demo-table1", "Print the worked semantic-pilot selection example");

  long long verify_trials = -1, verify_seed = -1;
  auto* verify = app.add_subcommand("verify", "Run the analytic estimator checks");
  verify->add_option("--trials", verify_trials, "Monte Carlo trials for the variance laws");
  verify->add_option("--seed", verify_seed, "Seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(config_path, snr, trials, seed, corrector, endpoint, cache_dir, out_dir, workers);
    if (*demo) {
      sempilot::print_table1(sempilot::table1_example(), std::cout);
      return 0;
    }
    if (*verify) return verify_command(verify_trials, verify_seed);
  } catch (const sempilot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
