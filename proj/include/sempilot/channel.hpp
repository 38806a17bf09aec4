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

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

#include "sempilot/types.hpp"

namespace sempilot {

/// K-factors at or above this are treated as a pure line-of-sight channel.
inline constexpr double kPureLosKFactor = 1e12;

struct ChannelConfig {
  /// Rician K-factor, linear.
  double k_factor = 10.0;
  /// Fixed LoS phase in radians; drawn uniformly per trial when empty.
  std::optional<double> los_phase;
};

/// One trial's channel: coefficient, noise variance and the draw's provenance.
struct ChannelRealization {
  Complex h;
  double sigma2 = 0.0;
  double k_factor = 0.0;
  std::uint64_t seed = 0;
};

struct ReceivedFrame {
  SymbolVector pilot;  ///< y_p, length M
  SymbolVector text;   ///< y_t, length K = 3 L
};

/// h = sqrt(K/(K+1)) e^{j theta} + sqrt(1/(K+1)) g, with E|h|^2 = 1.
Complex draw_channel(const ChannelConfig& cfg, Rng& rng);

inline Complex draw_channel(double k_factor, Rng& rng) { return draw_channel(ChannelConfig{k_factor, {}}, rng); }

/// Circularly-symmetric complex Gaussian, variance sigma2 per complex sample.
Complex complex_gaussian(double sigma2, Rng& rng);

/// y[i] = h x[i] + n[i].
SymbolVector transmit(std::span<const Complex> x, Complex h, double sigma2, Rng& rng);

/// Pilot first, then text, both through the same h.
ReceivedFrame transmit_frame(std::span<const Complex> pilot, std::span<const Complex> text, Complex h,
                             double sigma2, Rng& rng);

/// 10^(-snr_db / 10) for unit symbol energy and unit average channel gain.
double snr_to_sigma2(double snr_db);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace sempilot
