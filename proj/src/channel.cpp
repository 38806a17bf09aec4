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

#include "sempilot/channel.hpp"

#include <cmath>
#include <numbers>

namespace sempilot {

Complex complex_gaussian(double sigma2, Rng& rng) {
  if (sigma2 <= 0.0) return {0.0, 0.0};
  std::normal_distribution<double> n(0.0, std::sqrt(sigma2 / 2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

Complex draw_channel(const ChannelConfig& cfg, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double theta = cfg.los_phase ? *cfg.los_phase : angle(rng);
  const double k = cfg.k_factor;
  if (k >= kPureLosKFactor) return std::polar(1.0, theta);
  const Complex los = std::polar(std::sqrt(k / (k + 1.0)), theta);
  const Complex scatter = complex_gaussian(1.0, rng) * std::sqrt(1.0 / (k + 1.0));
  return los + scatter;
}

SymbolVector transmit(std::span<const Complex> x, Complex h, double sigma2, Rng& rng) {
  SymbolVector y;
  y.reserve(x.size());
  for (const Complex& s : x) y.push_back(h * s + complex_gaussian(sigma2, rng));
  return y;
}

ReceivedFrame transmit_frame(std::span<const Complex> pilot, std::span<const Complex> text, Complex h,
                             double sigma2, Rng& rng) {
  ReceivedFrame frame;
  frame.pilot = transmit(pilot, h, sigma2, rng);
  frame.text = transmit(text, h, sigma2, rng);
  return frame;
}

double snr_to_sigma2(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

}  // namespace sempilot
