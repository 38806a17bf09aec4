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

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "sempilot/channel.hpp"
#include "sempilot/semantic_pilot.hpp"
#include "sempilot/types.hpp"

namespace sempilot {

/// Pilot-only least squares: x_p^H y_p / ||x_p||^2. Throws ZeroPilotEnergy.
Complex ls_estimate(std::span<const Complex> pilot, std::span<const Complex> rx_pilot);

/// Zero-forcing: y_t / h_hat. Throws ZeroChannelEstimate.
SymbolVector zf_equalize(std::span<const Complex> rx, Complex h_hat);

/// Joint LS over the pilot sequence and the semantic pilot. The received
/// sample of each semantic symbol is gathered from `rx_text` by index.
/// With an empty semantic pilot this is exactly ls_estimate.
/// Throws EmptyPilotSet if the combined energy is zero, IndexOutOfRange if a
/// semantic index does not address `rx_text`.
Complex refine_phase(std::span<const Complex> pilot, std::span<const Complex> rx_pilot,
                     const SemanticPilot& semantic, std::span<const Complex> rx_text);

/// Real gain correction for a phase-refined estimate, fitted over the pilot
/// and the entire decided payload:
///
///   gamma = Re{ sum (h_r x_p)^* y_p + sum (h_r x̂_t)^* y_t }
///           / ( sum |h_r x_p|^2 + sum |h_r x̂_t|^2 )
///
/// Throws ZeroDenominator when h_r or all symbols are zero, LengthMismatch
/// when |x̂_t| != |y_t|.
double magnitude_scale(Complex h_r, std::span<const Complex> pilot, std::span<const Complex> rx_pilot,
                       std::span<const Complex> decided_text, std::span<const Complex> rx_text);

/// Objective minimised by refine_phase.
double phase_objective(Complex h, std::span<const Complex> pilot, std::span<const Complex> rx_pilot,
                       const SemanticPilot& semantic, std::span<const Complex> rx_text);

/// Objective minimised by magnitude_scale.
double scaling_objective(double gamma, Complex h_r, std::span<const Complex> pilot,
                         std::span<const Complex> rx_pilot, std::span<const Complex> decided_text,
                         std::span<const Complex> rx_text);

enum class SchemeId { Pilot, Decoded, LlmCorrected, ProposedNoScaling, Proposed };

inline constexpr std::array<SchemeId, 5> kAllSchemes = {SchemeId::Pilot, SchemeId::Decoded,
                                                        SchemeId::LlmCorrected, SchemeId::ProposedNoScaling,
                                                        SchemeId::Proposed};

std::string_view scheme_name(SchemeId id) noexcept;
std::optional<SchemeId> parse_scheme(std::string_view name) noexcept;

/// Channel truth and every intermediate estimate of one scheme in one trial.
/// Invariant: h_llm == gamma * h_r.
struct EstimateSet {
  Complex h_true;
  Complex h_ls;
  Complex h_r;
  double gamma = 1.0;
  Complex h_llm;

  Complex final_estimate() const noexcept { return h_llm; }
};

/// Everything the schemes consume. Spans must outlive the call.
struct SchemeInputs {
  Complex h_true;
  std::span<const Complex> pilot;
  const ReceivedFrame* frame = nullptr;
  std::span<const Complex> decoded_symbols;    ///< x̂_t
  std::span<const Complex> corrected_symbols;  ///< x̂_LLM (re-encoded corrector output)
  const SemanticPilot* semantic = nullptr;
  /// LlmCorrected scaling fits x̂_LLM instead of x̂_t when set.
  bool llm_scaling_uses_corrected = false;
};

struct SchemeResult {
  EstimateSet estimate;
  /// Payload bits re-decided with the scheme's final estimate.
  BitVector bits;
};

SchemeResult run_scheme(SchemeId id, const SchemeInputs& in);

}  // namespace sempilot
