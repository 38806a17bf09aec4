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

#include "sempilot/modem.hpp"

#include <cmath>
#include <string>

#include "sempilot/error.hpp"

namespace sempilot {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

SymbolVector qpsk_modulate(const BitVector& bits) {
  if (bits.size() % 2 != 0) {
    throw BadLength("QPSK needs an even number of bits, got " + std::to_string(bits.size()));
  }
  SymbolVector out;
  out.reserve(bits.size() / 2);
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    const double re = bits[i] ? -kInvSqrt2 : kInvSqrt2;
    const double im = bits[i + 1] ? -kInvSqrt2 : kInvSqrt2;
    out.emplace_back(re, im);
  }
  return out;
}

Decisions qpsk_decide(std::span<const Complex> z) {
  Decisions d;
  d.bits.reserve(z.size() * 2);
  d.symbols.reserve(z.size());
  for (const Complex& s : z) {
    const bool b0 = s.real() < 0.0;
    const bool b1 = s.imag() < 0.0;
    d.bits.push_back(b0);
    d.bits.push_back(b1);
    d.symbols.emplace_back(b0 ? -kInvSqrt2 : kInvSqrt2, b1 ? -kInvSqrt2 : kInvSqrt2);
  }
  return d;
}

std::span<const Complex> char_symbols(std::size_t char_index, std::span<const Complex> symbols) {
  if (symbols.size() % kSymbolsPerChar != 0 || (char_index + 1) * kSymbolsPerChar > symbols.size()) {
    throw IndexOutOfRange("character " + std::to_string(char_index) + " out of range for " +
                          std::to_string(symbols.size()) + " symbols");
  }
  return symbols.subspan(char_index * kSymbolsPerChar, kSymbolsPerChar);
}

}  // namespace sempilot
