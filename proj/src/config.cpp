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

#include "sempilot/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "sempilot/error.hpp"

namespace sempilot {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = trim(text.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
  }
}

std::uint64_t to_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    if (!value.empty() && value.front() == '-') throw std::invalid_argument(value);
    const auto v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a non-negative integer, got '" + value + "'");
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

}  // namespace

ChannelConfig ExperimentConfig::channel() const { return {db_to_linear(k_factor_db), los_phase}; }

void ExperimentConfig::validate() const {
  if (snr_db.empty()) throw ConfigError("snr_db list is empty");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (text_length < 1) throw ConfigError("text_length must be at least 1");
  if (schemes.empty()) throw ConfigError("scheme list is empty");
  if (pilot.length < 1) throw ConfigError("pilot.length must be at least 1");
  if (std::gcd(pilot.root, pilot.length) != 1 || pilot.root == 0) {
    throw ConfigError("pilot.root must be coprime with pilot.length");
  }
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(to_double("list", item));
  return out;
}

std::optional<CorrectorKind> parse_corrector_kind(std::string_view name) noexcept {
  if (name == "oracle") return CorrectorKind::Oracle;
  if (name == "identity") return CorrectorKind::Identity;
  if (name == "stochastic") return CorrectorKind::Stochastic;
  if (name == "remote") return CorrectorKind::Remote;
  return std::nullopt;
}

std::string_view corrector_kind_name(CorrectorKind kind) noexcept {
  switch (kind) {
    case CorrectorKind::Oracle:
      return "oracle";
    case CorrectorKind::Identity:
      return "identity";
    case CorrectorKind::Stochastic:
      return "stochastic";
    case CorrectorKind::Remote:
      return "remote";
  }
  return "unknown";
}

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    entries[key] = std::string(trim(line.substr(eq + 1)));
  }
  return entries;
}

ConfigMap read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_config(ExperimentConfig& cfg, const ConfigMap& entries) {
  using Setter = std::function<void(const std::string& key, const std::string& value)>;
  auto& st = cfg.corrector.stochastic;
  auto& rm = cfg.corrector.remote;
  const std::map<std::string, Setter> setters = {
      {"snr_db",
       [&](const auto& k, const auto& v) {
         cfg.snr_db.clear();
         for (const auto& item : split_list(v)) cfg.snr_db.push_back(to_double(k, item));
       }},
      {"trials", [&](const auto& k, const auto& v) { cfg.trials = to_uint(k, v); }},
      {"master_seed", [&](const auto& k, const auto& v) { cfg.master_seed = to_uint(k, v); }},
      {"text_length", [&](const auto& k, const auto& v) { cfg.text_length = to_uint(k, v); }},
      {"corpus", [&](const auto&, const auto& v) { cfg.corpus = v; }},
      {"alphabet", [&](const auto&, const auto& v) { cfg.alphabet = v; }},
      {"workers", [&](const auto& k, const auto& v) { cfg.workers = to_uint(k, v); }},
      {"output_dir", [&](const auto&, const auto& v) { cfg.output_dir = v; }},
      {"pilot.length", [&](const auto& k, const auto& v) { cfg.pilot.length = to_uint(k, v); }},
      {"pilot.root", [&](const auto& k, const auto& v) { cfg.pilot.root = to_uint(k, v); }},
      {"channel.k_factor_db", [&](const auto& k, const auto& v) { cfg.k_factor_db = to_double(k, v); }},
      {"channel.los_phase",
       [&](const auto& k, const auto& v) {
         if (v.empty() || v == "random") {
           cfg.los_phase.reset();
         } else {
           cfg.los_phase = to_double(k, v);
         }
       }},
      {"corrector.kind",
       [&](const auto& k, const auto& v) {
         const auto kind = parse_corrector_kind(v);
         if (!kind) throw ConfigError("config key '" + k + "': unknown corrector '" + v + "'");
         cfg.corrector.kind = *kind;
       }},
      {"corrector.p_fix", [&](const auto& k, const auto& v) { st.p_fix = to_double(k, v); }},
      {"corrector.p_mask", [&](const auto& k, const auto& v) { st.p_mask = to_double(k, v); }},
      {"corrector.p_miscorrect", [&](const auto& k, const auto& v) { st.p_miscorrect = to_double(k, v); }},
      {"corrector.p_mask_run", [&](const auto& k, const auto& v) { st.p_mask_run = to_double(k, v); }},
      {"corrector.mask_span",
       [&](const auto& k, const auto& v) {
         if (v == "word") {
           st.mask_span = MaskSpan::Word;
         } else if (v == "error_run") {
           st.mask_span = MaskSpan::ErrorRun;
         } else {
           throw ConfigError("config key '" + k + "': expected word or error_run, got '" + v + "'");
         }
       }},
      {"corrector.endpoint", [&](const auto&, const auto& v) { rm.endpoint = v; }},
      {"corrector.model", [&](const auto&, const auto& v) { rm.model = v; }},
      {"corrector.api_key_env", [&](const auto&, const auto& v) { rm.api_key_env = v; }},
      {"corrector.timeout", [&](const auto& k, const auto& v) { rm.timeout_seconds = to_double(k, v); }},
      {"corrector.max_retries",
       [&](const auto& k, const auto& v) { rm.max_retries = static_cast<int>(to_uint(k, v)); }},
      {"corrector.retry_backoff_ms",
       [&](const auto& k, const auto& v) { rm.retry_backoff_ms = static_cast<int>(to_uint(k, v)); }},
      {"corrector.max_in_flight",
       [&](const auto& k, const auto& v) { rm.max_in_flight = static_cast<int>(to_uint(k, v)); }},
      {"corrector.cache_dir", [&](const auto&, const auto& v) { rm.cache_dir = v; }},
      {"selection.exclude_mask_matches",
       [&](const auto& k, const auto& v) { cfg.selection.exclude_mask_matches = to_bool(k, v); }},
      {"selection.metric_granularity",
       [&](const auto& k, const auto& v) {
         if (v == "character") {
           cfg.metric_granularity = ErrorGranularity::Character;
         } else if (v == "symbol") {
           cfg.metric_granularity = ErrorGranularity::Symbol;
         } else {
           throw ConfigError("config key '" + k + "': expected character or symbol, got '" + v + "'");
         }
       }},
      {"estimator.llm_scaling_uses_corrected",
       [&](const auto& k, const auto& v) { cfg.llm_scaling_uses_corrected = to_bool(k, v); }},
      {"schemes",
       [&](const auto& k, const auto& v) {
         cfg.schemes.clear();
         for (const auto& item : split_list(v)) {
           const auto id = parse_scheme(item);
           if (!id) throw ConfigError("config key '" + k + "': unknown scheme '" + item + "'");
           cfg.schemes.push_back(*id);
         }
       }},
  };
  for (const auto& [key, value] : entries) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(key, value);
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  ExperimentConfig cfg;
  apply_config(cfg, read_config_file(path));
  cfg.validate();
  return cfg;
}

}  // namespace sempilot
