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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sempilot/channel.hpp"
#include "sempilot/corrector.hpp"
#include "sempilot/estimator.hpp"
#include "sempilot/llmclient.hpp"
#include "sempilot/metrics.hpp"
#include "sempilot/pilot.hpp"
#include "sempilot/semantic_pilot.hpp"

namespace sempilot {

enum class CorrectorKind { Oracle, Identity, Stochastic, Remote };

struct CorrectorConfig {
  CorrectorKind kind = CorrectorKind::Stochastic;
  StochasticParams stochastic;
  RemoteConfig remote;
};

struct ExperimentConfig {
  std::vector<double> snr_db = {7.0, 8.0, 9.0, 10.0};
  std::size_t trials = 1000;
  std::uint64_t master_seed = 1;
  std::size_t text_length = 30;
  /// Empty selects the bundled corpus.
  std::filesystem::path corpus;
  /// Empty selects the standard alphabet.
  std::filesystem::path alphabet;
  PilotConfig pilot;
  /// Rician K in dB; 10 dB is K = 10.
  double k_factor_db = 10.0;
  std::optional<double> los_phase;
  CorrectorConfig corrector;
  SelectionOptions selection;
  /// How selection metrics judge a decided symbol error-free.
  ErrorGranularity metric_granularity = ErrorGranularity::Character;
  bool llm_scaling_uses_corrected = false;
  std::vector<SchemeId> schemes{kAllSchemes.begin(), kAllSchemes.end()};
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;
  std::filesystem::path output_dir = "results";

  ChannelConfig channel() const;
  /// Throws ConfigError on an inconsistent configuration.
  void validate() const;
};

/// Flat `key = value` lines; `#` starts a comment. Lists are comma-separated.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(std::string_view text);
ConfigMap read_config_file(const std::filesystem::path& path);

/// Apply known keys to `cfg`. Throws ConfigError on unknown keys or bad values.
void apply_config(ExperimentConfig& cfg, const ConfigMap& entries);

ExperimentConfig load_config(const std::filesystem::path& path);

std::optional<CorrectorKind> parse_corrector_kind(std::string_view name) noexcept;
std::string_view corrector_kind_name(CorrectorKind kind) noexcept;

std::vector<double> parse_double_list(std::string_view text);

}  // namespace sempilot
