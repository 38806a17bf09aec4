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

#include "sempilot/estimator.hpp"

#include <complex>
#include <string>

#include "sempilot/error.hpp"
#include "sempilot/modem.hpp"

namespace sempilot {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw LengthMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Sum of conj(x) y and |x|^2 over the pilot sequence.
struct Correlation {
  Complex cross{0.0, 0.0};
  double energy = 0.0;
};

Correlation pilot_correlation(std::span<const Complex> pilot, std::span<const Complex> rx_pilot) {
  require_same_size(pilot.size(), rx_pilot.size(), "pilot vs received pilot");
  Correlation c;
  for (std::size_t i = 0; i < pilot.size(); ++i) {
    c.cross += std::conj(pilot[i]) * rx_pilot[i];
    c.energy += std::norm(pilot[i]);
  }
  return c;
}

}  // namespace

Complex ls_estimate(std::span<const Complex> pilot, std::span<const Complex> rx_pilot) {
  const Correlation c = pilot_correlation(pilot, rx_pilot);
  if (c.energy <= 0.0) throw ZeroPilotEnergy("pilot sequence has zero energy");
  return c.cross / c.energy;
}

SymbolVector zf_equalize(std::span<const Complex> rx, Complex h_hat) {
  if (h_hat == Complex{0.0, 0.0}) throw ZeroChannelEstimate("cannot equalize with a zero channel estimate");
  SymbolVector out;
  out.reserve(rx.size());
  for (const Complex& y : rx) out.push_back(y / h_hat);
  return out;
}

Complex refine_phase(std::span<const Complex> pilot, std::span<const Complex> rx_pilot,
                     const SemanticPilot& semantic, std::span<const Complex> rx_text) {
  require_same_size(semantic.indices.size(), semantic.symbols.size(), "semantic pilot indices vs symbols");
  Correlation c = pilot_correlation(pilot, rx_pilot);
  for (std::size_t j = 0; j < semantic.size(); ++j) {
    const std::size_t idx = semantic.indices[j];
    if (idx >= rx_text.size()) {
      throw IndexOutOfRange("semantic pilot index " + std::to_string(idx) + " outside payload of " +
                            std::to_string(rx_text.size()));
    }
    c.cross += std::conj(semantic.symbols[j]) * rx_text[idx];
    c.energy += std::norm(semantic.symbols[j]);
  }
  if (c.energy <= 0.0) throw EmptyPilotSet("pilot and semantic pilot carry no energy");
  return c.cross / c.energy;
}

double magnitude_scale(Complex h_r, std::span<const Complex> pilot, std::span<const Complex> rx_pilot,
                       std::span<const Complex> decided_text, std::span<const Complex> rx_text) {
  require_same_size(pilot.size(), rx_pilot.size(), "pilot vs received pilot");
  require_same_size(decided_text.size(), rx_text.size(), "decided vs received payload");
  double num = 0.0;
  double den = 0.0;
  auto accumulate = [&](std::span<const Complex> x, std::span<const Complex> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Complex ref = h_r * x[i];
      num += (std::conj(ref) * y[i]).real();
      den += std::norm(ref);
    }
  };
  accumulate(pilot, rx_pilot);
  accumulate(decided_text, rx_text);
  if (den <= 0.0) throw ZeroDenominator("magnitude scaling has zero reference energy");
  return num / den;
}

double phase_objective(Complex h, std::span<const Complex> pilot, std::span<const Complex> rx_pilot,
                       const SemanticPilot& semantic, std::span<const Complex> rx_text) {
  double cost = 0.0;
  for (std::size_t i = 0; i < pilot.size(); ++i) cost += std::norm(rx_pilot[i] - h * pilot[i]);
  for (std::size_t j = 0; j < semantic.size(); ++j) {
    cost += std::norm(rx_text[semantic.indices[j]] - h * semantic.symbols[j]);
  }
  return cost;
}

double scaling_objective(double gamma, Complex h_r, std::span<const Complex> pilot,
                         std::span<const Complex> rx_pilot, std::span<const Complex> decided_text,
                         std::span<const Complex> rx_text) {
  double cost = 0.0;
  const Complex g = gamma * h_r;
  for (std::size_t i = 0; i < pilot.size(); ++i) cost += std::norm(rx_pilot[i] - g * pilot[i]);
  for (std::size_t j = 0; j < decided_text.size(); ++j) cost += std::norm(rx_text[j] - g * decided_text[j]);
  return cost;
}

std::string_view scheme_name(SchemeId id) noexcept {
  switch (id) {
    case SchemeId::Pilot:
      return "pilot";
    case SchemeId::Decoded:
      return "decoded";
    case SchemeId::LlmCorrected:
      return "llm_corrected";
    case SchemeId::ProposedNoScaling:
      return "proposed_no_scaling";
    case SchemeId::Proposed:
      return "proposed";
  }
  return "unknown";
}

std::optional<SchemeId> parse_scheme(std::string_view name) noexcept {
  for (SchemeId id : kAllSchemes) {
    if (scheme_name(id) == name) return id;
  }
  return std::nullopt;
}

SchemeResult run_scheme(SchemeId id, const SchemeInputs& in) {
  if (in.frame == nullptr) throw Error("run_scheme: missing received frame");
  const ReceivedFrame& frame = *in.frame;
  require_same_size(in.decoded_symbols.size(), frame.text.size(), "decoded symbols vs payload");

  EstimateSet est;
  est.h_true = in.h_true;
  est.h_ls = ls_estimate(in.pilot, frame.pilot);

  switch (id) {
    case SchemeId::Pilot:
      est.h_r = est.h_ls;
      break;
    case SchemeId::Decoded:
      // Refinement over every decided symbol; a scaling fit over the same
      // set would return exactly 1, so it is skipped.
      est.h_r = refine_phase(in.pilot, frame.pilot, SemanticPilot::all(in.decoded_symbols), frame.text);
      break;
    case SchemeId::LlmCorrected: {
      require_same_size(in.corrected_symbols.size(), frame.text.size(), "corrected symbols vs payload");
      est.h_r = refine_phase(in.pilot, frame.pilot, SemanticPilot::all(in.corrected_symbols), frame.text);
      const auto scale_set = in.llm_scaling_uses_corrected ? in.corrected_symbols : in.decoded_symbols;
      est.gamma = magnitude_scale(est.h_r, in.pilot, frame.pilot, scale_set, frame.text);
      break;
    }
    case SchemeId::ProposedNoScaling:
    case SchemeId::Proposed: {
      if (in.semantic == nullptr) throw Error("run_scheme: proposed schemes need a semantic pilot");
      est.h_r = refine_phase(in.pilot, frame.pilot, *in.semantic, frame.text);
      if (id == SchemeId::Proposed) {
        est.gamma = magnitude_scale(est.h_r, in.pilot, frame.pilot, in.decoded_symbols, frame.text);
      }
      break;
    }
  }
  est.h_llm = est.gamma * est.h_r;

  SchemeResult result;
  result.estimate = est;
  result.bits = qpsk_decide(zf_equalize(frame.text, est.final_estimate())).bits;
  return result;
}

}  // namespace sempilot
