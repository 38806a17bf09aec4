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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sempilot/config.hpp"
#include "sempilot/corpus.hpp"
#include "sempilot/corrector.hpp"
#include "sempilot/estimator.hpp"
#include "sempilot/metrics.hpp"

namespace sempilot {

/// Stream id of the corrector's random stream within a trial.
inline constexpr std::uint64_t kCorrectorStream = 0xC0;

struct SchemeTrial {
  SchemeId scheme = SchemeId::Pilot;
  EstimateSet estimate;
  double nmse = 0.0;
  double phase_error = 0.0;
  std::size_t bit_errors = 0;
  std::size_t bits = 0;
  /// Quality of the data symbols the scheme reused as pilots; only for
  /// schemes that select from the decided payload.
  std::optional<SelectionMetrics> selection;

  double ber() const noexcept { return bits == 0 ? 0.0 : static_cast<double>(bit_errors) / static_cast<double>(bits); }
};

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t snr_index = 0;
  double snr_db = 0.0;
  std::uint64_t seed = 0;
  Complex h;
  double sigma2 = 0.0;
  std::string transmitted;
  std::string decoded;
  std::string corrected;
  std::size_t payload_symbols = 0;   ///< K
  std::size_t semantic_symbols = 0;  ///< N
  bool length_repaired = false;
  bool corrector_fallback = false;
  int corrector_retries = 0;
  std::vector<SchemeTrial> schemes;

  const SchemeTrial* find(SchemeId id) const noexcept;
};

/// Per-(scheme, SNR) aggregate.
struct SchemeSummary {
  SchemeId scheme = SchemeId::Pilot;
  double snr_db = 0.0;
  std::size_t trials = 0;
  MeanAccumulator nmse;
  MeanAccumulator phase_error;
  MeanAccumulator trial_ber;
  std::size_t bit_errors = 0;
  std::size_t bits = 0;
  bool has_selection = false;
  MeanAccumulator reliability;
  MeanAccumulator detection;
  MeanAccumulator selection;
  std::size_t reliability_undefined = 0;
  std::size_t detection_undefined = 0;
  std::size_t gamma_nonpositive = 0;
  std::size_t corrector_fallbacks = 0;
  std::size_t length_repairs = 0;

  /// Total bit errors over total bits.
  double ber() const noexcept { return bits == 0 ? 0.0 : static_cast<double>(bit_errors) / static_cast<double>(bits); }
  void add(const TrialRecord& rec, const SchemeTrial& st);
};

struct ExperimentResult {
  ExperimentConfig config;
  /// snr-major, then the configured scheme order.
  std::vector<SchemeSummary> summaries;
  /// Filled only when requested.
  std::vector<TrialRecord> records;
  std::size_t corpus_substitutions = 0;

  const SchemeSummary* find(SchemeId id, double snr_db) const noexcept;
};

std::unique_ptr<Corrector> make_corrector(const CorrectorConfig& cfg, const Alphabet& alphabet = Alphabet::standard());

/// Runs paired trials: every scheme in a trial sees the same text, channel
/// and noise. Thread-safe; results do not depend on worker count.
class Simulator {
 public:
  explicit Simulator(ExperimentConfig cfg);
  Simulator(ExperimentConfig cfg, std::shared_ptr<const Corrector> corrector);

  TrialRecord run_trial(std::size_t snr_index, std::size_t trial) const;
  ExperimentResult run(bool keep_records = false) const;

  const ExperimentConfig& config() const noexcept { return cfg_; }
  const Corpus& corpus() const noexcept { return corpus_; }
  std::uint64_t trial_seed(std::size_t snr_index, std::size_t trial) const noexcept;

 private:
  ExperimentConfig cfg_;
  std::shared_ptr<const Alphabet> alphabet_;
  Corpus corpus_;
  SymbolVector pilot_;
  std::shared_ptr<const Corrector> corrector_;
  IdentityCorrector fallback_;
};

inline ExperimentResult run_experiment(const ExperimentConfig& cfg, bool keep_records = false) {
  return Simulator(cfg).run(keep_records);
}

}  // namespace sempilot
