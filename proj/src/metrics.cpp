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

#include "sempilot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sempilot/error.hpp"
#include "sempilot/modem.hpp"

namespace sempilot {

double nmse(Complex h, Complex h_hat) {
  const double power = std::norm(h);
  if (power == 0.0) throw ZeroTrueChannel("NMSE is undefined for a zero true channel");
  return std::norm(h - h_hat) / power;
}

double phase_error(Complex h, Complex h_hat) {
  if (h == Complex{} || h_hat == Complex{}) throw ZeroChannel("phase of a zero channel is undefined");
  double d = std::remainder(std::arg(h) - std::arg(h_hat), 2.0 * std::numbers::pi);
  return std::min(std::fabs(d), std::numbers::pi);
}

std::size_t bit_errors(const BitVector& truth, const BitVector& decoded) {
  if (truth.size() != decoded.size()) {
    throw LengthMismatch("bit vectors differ in length: " + std::to_string(truth.size()) + " vs " +
                         std::to_string(decoded.size()));
  }
  std::size_t errors = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) errors += (truth[i] != decoded[i]);
  return errors;
}

double ber(const BitVector& truth, const BitVector& decoded) {
  const std::size_t errors = bit_errors(truth, decoded);
  if (truth.empty()) return 0.0;
  return static_cast<double>(errors) / static_cast<double>(truth.size());
}

SelectionMetrics selection_metrics(const SemanticPilot& pilot, std::span<const Complex> transmitted,
                                   std::span<const Complex> decided, ErrorGranularity granularity) {
  if (transmitted.size() != decided.size()) {
    throw LengthMismatch("transmitted and decided payloads differ in length");
  }
  std::vector<bool> error_free(decided.size());
  for (std::size_t j = 0; j < decided.size(); ++j) error_free[j] = decided[j] == transmitted[j];
  if (granularity == ErrorGranularity::Character) {
    if (decided.size() % kSymbolsPerChar != 0) {
      throw LengthMismatch("payload is not a whole number of characters");
    }
    for (std::size_t c = 0; c < decided.size(); c += kSymbolsPerChar) {
      const bool ok = error_free[c] && error_free[c + 1] && error_free[c + 2];
      error_free[c] = error_free[c + 1] = error_free[c + 2] = ok;
    }
  }
  SelectionMetrics m;
  for (std::size_t j = 0; j < decided.size(); ++j) m.decoded_error_free += error_free[j];
  for (std::size_t idx : pilot.indices) {
    if (idx >= decided.size()) throw IndexOutOfRange("semantic pilot index outside payload");
    m.selected_error_free += error_free[idx];
  }
  m.selected = pilot.size();
  if (m.selected > 0) {
    m.reliability = static_cast<double>(m.selected_error_free) / static_cast<double>(m.selected);
  }
  if (m.decoded_error_free > 0) {
    m.detection_rate = static_cast<double>(m.selected_error_free) / static_cast<double>(m.decoded_error_free);
  }
  if (!decided.empty()) {
    m.selection_ratio = static_cast<double>(m.selected) / static_cast<double>(decided.size());
  }
  return m;
}

void MeanAccumulator::kahan_add(double& sum, double& comp, double x) noexcept {
  const double t = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

void MeanAccumulator::add(double x) noexcept {
  ++n_;
  kahan_add(sum_, comp_, x);
  kahan_add(sq_sum_, sq_comp_, x * x);
}

void MeanAccumulator::merge(const MeanAccumulator& other) noexcept {
  n_ += other.n_;
  kahan_add(sum_, comp_, other.sum_);
  kahan_add(sum_, comp_, other.comp_);
  kahan_add(sq_sum_, sq_comp_, other.sq_sum_);
  kahan_add(sq_sum_, sq_comp_, other.sq_comp_);
}

double MeanAccumulator::mean() const noexcept {
  return n_ == 0 ? 0.0 : (sum_ + comp_) / static_cast<double>(n_);
}

double MeanAccumulator::standard_error() const noexcept {
  if (n_ < 2) return 0.0;
  const double n = static_cast<double>(n_);
  const double m = mean();
  const double var = std::max(0.0, ((sq_sum_ + sq_comp_) - n * m * m) / (n - 1.0));
  return std::sqrt(var / n);
}

}  // namespace sempilot
