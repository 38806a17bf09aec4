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

#include <algorithm>
#include <string>

#include "sempilot/corrector.hpp"
#include "sempilot/error.hpp"
#include "sempilot/modem.hpp"
#include "sempilot/semantic_pilot.hpp"

namespace sempilot {

SemanticPilot SemanticPilot::all(std::span<const Complex> symbols) {
  SemanticPilot p;
  p.indices.resize(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) p.indices[i] = i;
  p.symbols.assign(symbols.begin(), symbols.end());
  return p;
}

SemanticPilot select_semantic_pilot(std::string_view decoded, std::string_view corrected,
                                    std::span<const Complex> decided_symbols, SelectionOptions options) {
  if (decoded.size() != corrected.size()) {
    throw LengthMismatch("decoded and corrected text differ in length: " + std::to_string(decoded.size()) +
                         " vs " + std::to_string(corrected.size()));
  }
  if (decided_symbols.size() != decoded.size() * kSymbolsPerChar) {
    throw LengthMismatch("expected " + std::to_string(decoded.size() * kSymbolsPerChar) +
                         " decided symbols, got " + std::to_string(decided_symbols.size()));
  }
  SemanticPilot pilot;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    if (decoded[i] != corrected[i]) continue;
    if (options.exclude_mask_matches && decoded[i] == kMaskChar) continue;
    const auto span = char_symbols(i, decided_symbols);
    for (std::size_t k = 0; k < span.size(); ++k) {
      pilot.indices.push_back(i * kSymbolsPerChar + k);
      pilot.symbols.push_back(span[k]);
    }
  }
  return pilot;
}

std::string_view corrector_source_name(CorrectorSource s) noexcept {
  switch (s) {
    case CorrectorSource::Oracle:
      return "oracle";
    case CorrectorSource::Identity:
      return "identity";
    case CorrectorSource::Stochastic:
      return "stochastic";
    case CorrectorSource::Remote:
      return "remote";
  }
  return "unknown";
}

CorrectionResult normalize_correction(std::string_view raw, std::size_t length, const Alphabet& alphabet) {
  CorrectionResult r;
  r.source = CorrectorSource::Remote;
  const std::size_t substitutions = normalize_to_alphabet(raw, alphabet, kMaskChar, r.corrected);
  const std::size_t n = r.corrected.size();
  if (n > length) r.corrected.resize(length);
  if (n < length) r.corrected.append(length - n, kMaskChar);
  r.length_repaired = substitutions > 0 || n != length;
  return r;
}

CorrectionResult oracle_corrector(std::string_view decoded, std::string_view truth) {
  if (decoded.size() != truth.size()) {
    throw LengthMismatch("oracle corrector: decoded and true text differ in length");
  }
  return {std::string(truth), false, CorrectorSource::Oracle, 0};
}

namespace {

char random_char_excluding(const Alphabet& alphabet, char a, char b, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabetSize - 1);
  for (;;) {
    const char c = alphabet.at(pick(rng));
    if (c != a && c != b) return c;
  }
}

void validate(const StochasticParams& p) {
  for (double v : {p.p_fix, p.p_mask, p.p_miscorrect, p.p_mask_run}) {
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("stochastic corrector probabilities must lie in [0, 1]");
  }
  if (p.p_fix + p.p_mask + p.p_miscorrect > 1.0 + 1e-12) {
    throw ConfigError("p_fix + p_mask + p_miscorrect must not exceed 1");
  }
}

}  // namespace

CorrectionResult stochastic_corrector(std::string_view decoded, std::string_view truth,
                                      const StochasticParams& params, Rng& rng, const Alphabet& alphabet) {
  if (decoded.size() != truth.size()) {
    throw LengthMismatch("stochastic corrector: decoded and true text differ in length");
  }
  validate(params);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  CorrectionResult r;
  r.source = CorrectorSource::Stochastic;
  r.corrected.assign(decoded);
  std::vector<std::size_t> mask_events;

  for (std::size_t i = 0; i < decoded.size(); ++i) {
    const double u = u01(rng);
    if (decoded[i] == truth[i]) {
      if (u < params.p_miscorrect) r.corrected[i] = random_char_excluding(alphabet, decoded[i], decoded[i], rng);
      continue;
    }
    if (u < params.p_fix) {
      r.corrected[i] = truth[i];
    } else if (u < params.p_fix + params.p_mask) {
      r.corrected[i] = kMaskChar;
      mask_events.push_back(i);
    } else if (u < params.p_fix + params.p_mask + params.p_miscorrect) {
      r.corrected[i] = random_char_excluding(alphabet, truth[i], decoded[i], rng);
    }
  }

  // A mask may spread over the corrupted segment around it.
  const auto inside = [&](std::size_t k) {
    return params.mask_span == MaskSpan::Word ? decoded[k] != ' ' : decoded[k] != truth[k];
  };
  for (std::size_t i : mask_events) {
    if (u01(rng) >= params.p_mask_run) continue;
    std::size_t lo = i;
    while (lo > 0 && inside(lo - 1)) --lo;
    std::size_t hi = i;
    while (hi + 1 < decoded.size() && inside(hi + 1)) ++hi;
    std::fill(r.corrected.begin() + static_cast<std::ptrdiff_t>(lo),
              r.corrected.begin() + static_cast<std::ptrdiff_t>(hi + 1), kMaskChar);
  }
  return r;
}

CorrectionResult IdentityCorrector::correct(std::string_view decoded, const CorrectionContext&) const {
  return {std::string(decoded), false, CorrectorSource::Identity, 0};
}

CorrectionResult OracleCorrector::correct(std::string_view decoded, const CorrectionContext& ctx) const {
  return oracle_corrector(decoded, ctx.truth);
}

StochasticCorrector::StochasticCorrector(StochasticParams params, const Alphabet& alphabet)
    : params_(params), alphabet_(&alphabet) {
  validate(params_);
}

CorrectionResult StochasticCorrector::correct(std::string_view decoded, const CorrectionContext& ctx) const {
  Rng rng(ctx.seed);
  return stochastic_corrector(decoded, ctx.truth, params_, rng, *alphabet_);
}

}  // namespace sempilot
