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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "sempilot/textcodec.hpp"
#include "sempilot/types.hpp"

namespace sempilot {

enum class CorrectorSource { Oracle, Identity, Stochastic, Remote };

std::string_view corrector_source_name(CorrectorSource s) noexcept;

struct CorrectionResult {
  std::string corrected;
  bool length_repaired = false;
  CorrectorSource source = CorrectorSource::Identity;
  /// Attempts beyond the first (remote corrector only).
  int retries = 0;
};

/// What a corrector may see for one trial. Only the oracle and stochastic
/// stand-ins read `truth`; `seed` drives per-trial randomness.
struct CorrectionContext {
  std::string_view truth;
  std::uint64_t seed = 0;
};

/// A text corrector: same-length output, substitutions only, 'X' runs for
/// segments it cannot recover. Implementations must be safe to call
/// concurrently from several trials.
class Corrector {
 public:
  virtual ~Corrector() = default;
  virtual CorrectionResult correct(std::string_view decoded, const CorrectionContext& ctx) const = 0;
  virtual CorrectorSource source() const noexcept = 0;
};

/// Enforce the same-length contract on raw corrector output: truncate or pad
/// with 'X' to `length` code points; out-of-alphabet code points become 'X'.
CorrectionResult normalize_correction(std::string_view raw, std::size_t length,
                                      const Alphabet& alphabet = Alphabet::standard());

/// Returns the ground truth. Throws LengthMismatch.
CorrectionResult oracle_corrector(std::string_view decoded, std::string_view truth);

/// Extent of an expanded mask event.
enum class MaskSpan {
  /// The decoded word around the error (run of non-space characters),
  /// including correct characters inside it.
  Word,
  /// Only the contiguous run of erroneous characters.
  ErrorRun,
};

struct StochasticParams {
  double p_fix = 0.9;
  double p_mask = 0.07;
  double p_miscorrect = 0.01;
  /// Chance that a mask event is expanded to `mask_span`.
  double p_mask_run = 0.5;
  MaskSpan mask_span = MaskSpan::Word;
};

/// Imperfect-corrector model. Per erroneous character: fix w.p. p_fix, mask
/// w.p. p_mask, replace with another wrong character w.p. p_miscorrect, else
/// leave. Correct characters are miscorrected w.p. p_miscorrect.
CorrectionResult stochastic_corrector(std::string_view decoded, std::string_view truth,
                                      const StochasticParams& params, Rng& rng,
                                      const Alphabet& alphabet = Alphabet::standard());

class IdentityCorrector final : public Corrector {
 public:
  CorrectionResult correct(std::string_view decoded, const CorrectionContext& ctx) const override;
  CorrectorSource source() const noexcept override { return CorrectorSource::Identity; }
};

class OracleCorrector final : public Corrector {
 public:
  CorrectionResult correct(std::string_view decoded, const CorrectionContext& ctx) const override;
  CorrectorSource source() const noexcept override { return CorrectorSource::Oracle; }
};

class StochasticCorrector final : public Corrector {
 public:
  explicit StochasticCorrector(StochasticParams params, const Alphabet& alphabet = Alphabet::standard());
  CorrectionResult correct(std::string_view decoded, const CorrectionContext& ctx) const override;
  CorrectorSource source() const noexcept override { return CorrectorSource::Stochastic; }
  const StochasticParams& params() const noexcept { return params_; }

 private:
  StochasticParams params_;
  const Alphabet* alphabet_;
};

}  // namespace sempilot
