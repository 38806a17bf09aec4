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
#include <optional>
#include <span>

#include "sempilot/semantic_pilot.hpp"
#include "sempilot/types.hpp"

namespace sempilot {

/// |h - h_hat|^2 / |h|^2. Throws ZeroTrueChannel.
double nmse(Complex h, Complex h_hat);

/// |angle(h) - angle(h_hat)| wrapped into [0, pi]. Throws ZeroChannel.
double phase_error(Complex h, Complex h_hat);

/// Hamming distance over length. Throws LengthMismatch.
double ber(const BitVector& truth, const BitVector& decoded);

std::size_t bit_errors(const BitVector& truth, const BitVector& decoded);

struct SelectionMetrics {
  std::optional<double> reliability;     ///< absent when nothing was selected
  std::optional<double> detection_rate;  ///< absent when no decoded symbol is error-free
  double selection_ratio = 0.0;
  std::size_t selected = 0;
  std::size_t selected_error_free = 0;
  std::size_t decoded_error_free = 0;
};

/// How a decided symbol is judged error-free.
enum class ErrorGranularity {
  /// Error-free when every symbol of its character is decided correctly.
  Character,
  /// Error-free when its own decided point equals the transmitted one.
  Symbol,
};

/// Throws LengthMismatch, or IndexOutOfRange for a pilot index past the payload.
/// Character granularity needs a payload that is a whole number of characters.
SelectionMetrics selection_metrics(const SemanticPilot& pilot, std::span<const Complex> transmitted,
                                   std::span<const Complex> decided,
                                   ErrorGranularity granularity = ErrorGranularity::Character);

/// Neumaier-compensated running mean and standard error.
class MeanAccumulator {
 public:
  void add(double x) noexcept;
  void merge(const MeanAccumulator& other) noexcept;

  std::size_t count() const noexcept { return n_; }
  double sum() const noexcept { return sum_ + comp_; }
  double mean() const noexcept;
  /// Sample standard deviation over sqrt(n); 0 for fewer than two samples.
  double standard_error() const noexcept;

 private:
  static void kahan_add(double& sum, double& comp, double x) noexcept;

  std::size_t n_ = 0;
  double sum_ = 0.0;
  double comp_ = 0.0;
  double sq_sum_ = 0.0;
  double sq_comp_ = 0.0;
};

}  // namespace sempilot
