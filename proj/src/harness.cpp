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

#include "sempilot/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <thread>

#include "sempilot/error.hpp"
#include "sempilot/modem.hpp"
#include "sempilot/pilot.hpp"

namespace sempilot {

namespace {

bool uses_decided_payload(SchemeId id) {
  return id == SchemeId::Decoded || id == SchemeId::ProposedNoScaling || id == SchemeId::Proposed;
}

std::shared_ptr<const Alphabet> load_alphabet(const ExperimentConfig& cfg) {
  auto a = std::make_shared<const Alphabet>(cfg.alphabet.empty() ? Alphabet::standard()
                                                                 : Alphabet::from_file(cfg.alphabet));
  if (!a->contains(kMaskChar)) throw BadAlphabet("alphabet must contain the mask character 'X'");
  return a;
}

// Runs body(i) for i in [0, n) on `workers` threads. The first exception wins.
template <typename Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

const SchemeTrial* TrialRecord::find(SchemeId id) const noexcept {
  for (const auto& s : schemes) {
    if (s.scheme == id) return &s;
  }
  return nullptr;
}

void SchemeSummary::add(const TrialRecord& rec, const SchemeTrial& st) {
  ++trials;
  nmse.add(st.nmse);
  phase_error.add(st.phase_error);
  trial_ber.add(st.ber());
  bit_errors += st.bit_errors;
  bits += st.bits;
  if (st.selection) {
    has_selection = true;
    if (st.selection->reliability) {
      reliability.add(*st.selection->reliability);
    } else {
      ++reliability_undefined;
    }
    if (st.selection->detection_rate) {
      detection.add(*st.selection->detection_rate);
    } else {
      ++detection_undefined;
    }
    selection.add(st.selection->selection_ratio);
  }
  if (st.estimate.gamma <= 0.0) ++gamma_nonpositive;
  if (rec.corrector_fallback) ++corrector_fallbacks;
  if (rec.length_repaired) ++length_repairs;
}

const SchemeSummary* ExperimentResult::find(SchemeId id, double snr_db) const noexcept {
  for (const auto& s : summaries) {
    if (s.scheme == id && s.snr_db == snr_db) return &s;
  }
  return nullptr;
}

std::unique_ptr<Corrector> make_corrector(const CorrectorConfig& cfg, const Alphabet& alphabet) {
  switch (cfg.kind) {
    case CorrectorKind::Oracle:
      return std::make_unique<OracleCorrector>();
    case CorrectorKind::Identity:
      return std::make_unique<IdentityCorrector>();
    case CorrectorKind::Stochastic:
      return std::make_unique<StochasticCorrector>(cfg.stochastic, alphabet);
    case CorrectorKind::Remote:
      return std::make_unique<RemoteCorrector>(cfg.remote, PromptTemplate::standard(), alphabet);
  }
  throw ConfigError("unknown corrector kind");
}

Simulator::Simulator(ExperimentConfig cfg) : Simulator(cfg, nullptr) {}

Simulator::Simulator(ExperimentConfig cfg, std::shared_ptr<const Corrector> corrector)
    : cfg_(std::move(cfg)), alphabet_(load_alphabet(cfg_)) {
  cfg_.validate();
  corpus_ = cfg_.corpus.empty() ? Corpus::builtin(*alphabet_) : Corpus::load(cfg_.corpus, *alphabet_);
  if (corpus_.text().size() < cfg_.text_length) {
    throw EmptyCorpus("corpus is shorter than the configured text length");
  }
  pilot_ = zadoff_chu(cfg_.pilot);
  corrector_ = corrector ? std::move(corrector) : std::shared_ptr<const Corrector>(make_corrector(cfg_.corrector, *alphabet_));
}

std::uint64_t Simulator::trial_seed(std::size_t snr_index, std::size_t trial) const noexcept {
  return derive_seed(cfg_.master_seed, snr_index, trial);
}

TrialRecord Simulator::run_trial(std::size_t snr_index, std::size_t trial) const {
  const Alphabet& alphabet = *alphabet_;
  TrialRecord rec;
  rec.trial = trial;
  rec.snr_index = snr_index;
  rec.snr_db = cfg_.snr_db.at(snr_index);
  rec.seed = trial_seed(snr_index, trial);
  rec.sigma2 = snr_to_sigma2(rec.snr_db);

  Rng rng(rec.seed);
  rec.transmitted = corpus_.sample_window(cfg_.text_length, rng);
  const BitVector tx_bits = encode_text(rec.transmitted, alphabet);
  const SymbolVector tx_symbols = qpsk_modulate(tx_bits);
  rec.h = draw_channel(cfg_.channel(), rng);
  const ReceivedFrame frame = transmit_frame(pilot_, tx_symbols, rec.h, rec.sigma2, rng);
  rec.payload_symbols = frame.text.size();

  // Initial pilot-only decode.
  const Complex h_ls = ls_estimate(pilot_, frame.pilot);
  const Decisions decided = qpsk_decide(zf_equalize(frame.text, h_ls));
  rec.decoded = decode_text(decided.bits, alphabet);

  const CorrectionContext ctx{rec.transmitted, derive_seed(rec.seed, kCorrectorStream)};
  CorrectionResult correction;
  try {
    correction = corrector_->correct(rec.decoded, ctx);
  } catch (const Error&) {
    correction = fallback_.correct(rec.decoded, ctx);
    rec.corrector_fallback = true;
  }
  rec.corrected = std::move(correction.corrected);
  rec.length_repaired = correction.length_repaired;
  rec.corrector_retries = correction.retries;

  const SymbolVector corrected_symbols = qpsk_modulate(encode_text(rec.corrected, alphabet));
  const SemanticPilot semantic = select_semantic_pilot(rec.decoded, rec.corrected, decided.symbols, cfg_.selection);
  rec.semantic_symbols = semantic.size();

  SchemeInputs in;
  in.h_true = rec.h;
  in.pilot = pilot_;
  in.frame = &frame;
  in.decoded_symbols = decided.symbols;
  in.corrected_symbols = corrected_symbols;
  in.semantic = &semantic;
  in.llm_scaling_uses_corrected = cfg_.llm_scaling_uses_corrected;

  for (SchemeId id : cfg_.schemes) {
    SchemeResult r = run_scheme(id, in);
    SchemeTrial st;
    st.scheme = id;
    st.estimate = r.estimate;
    st.nmse = nmse(rec.h, r.estimate.final_estimate());
    st.phase_error = phase_error(rec.h, r.estimate.final_estimate());
    st.bit_errors = bit_errors(tx_bits, r.bits);
    st.bits = tx_bits.size();
    if (uses_decided_payload(id)) {
      const SemanticPilot& used = id == SchemeId::Decoded ? SemanticPilot::all(decided.symbols) : semantic;
      st.selection = selection_metrics(used, tx_symbols, decided.symbols, cfg_.metric_granularity);
    }
    rec.schemes.push_back(std::move(st));
  }
  return rec;
}

ExperimentResult Simulator::run(bool keep_records) const {
  ExperimentResult result;
  result.config = cfg_;
  result.corpus_substitutions = corpus_.substitutions();
  const std::size_t workers =
      cfg_.workers == 0 ? std::max<std::size_t>(1, std::thread::hardware_concurrency()) : cfg_.workers;

  for (std::size_t s = 0; s < cfg_.snr_db.size(); ++s) {
    std::vector<TrialRecord> records(cfg_.trials);
    parallel_for(cfg_.trials, workers, [&](std::size_t t) { records[t] = run_trial(s, t); });

    // Merge in trial order so the aggregate is independent of scheduling.
    const std::size_t first = result.summaries.size();
    for (SchemeId id : cfg_.schemes) {
      SchemeSummary summary;
      summary.scheme = id;
      summary.snr_db = cfg_.snr_db[s];
      result.summaries.push_back(summary);
    }
    for (const auto& rec : records) {
      for (std::size_t k = 0; k < rec.schemes.size(); ++k) result.summaries[first + k].add(rec, rec.schemes[k]);
    }
    if (keep_records) {
      std::move(records.begin(), records.end(), std::back_inserter(result.records));
    }
  }
  return result;
}

}  // namespace sempilot
