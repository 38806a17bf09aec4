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
#include <span>

#include "sempilot/types.hpp"

namespace sempilot {

/// QPSK symbols carried by one 6-bit character.
inline constexpr std::size_t kSymbolsPerChar = 3;

/// Gray-mapped QPSK: (b0, b1) -> ((1 - 2 b0) + j (1 - 2 b1)) / sqrt(2).
/// Throws BadLength on an odd number of bits.
SymbolVector qpsk_modulate(const BitVector& bits);

struct Decisions {
  BitVector bits;
  SymbolVector symbols;
};

/// Minimum-distance decision (quadrant sign test). Zero components decide
/// to the positive sign.
Decisions qpsk_decide(std::span<const Complex> z);

/// Symbols [3i, 3i + 3) carrying character `i`. Throws IndexOutOfRange.
std::span<const Complex> char_symbols(std::size_t char_index, std::span<const Complex> symbols);

}  // namespace sempilot
