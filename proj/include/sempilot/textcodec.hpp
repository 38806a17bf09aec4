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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "sempilot/types.hpp"

namespace sempilot {

inline constexpr std::size_t kAlphabetSize = 64;
inline constexpr std::size_t kBitsPerChar = 6;

/// Character used by correctors to mask unrecoverable segments.
inline constexpr char kMaskChar = 'X';

/// The 64-character transmission alphabet. Each character maps to a 6-bit
/// code equal to its position. Characters are single bytes (ASCII).
class Alphabet {
 public:
  /// A-Z (0-25), a-z (26-51), space (52), then . , ' ? ! - : ; " ( ) (53-63).
  /// The mask character 'X' is code 23.
  static const Alphabet& standard();

  /// Exactly 64 distinct characters; throws BadAlphabet otherwise.
  static Alphabet from_chars(std::string_view chars);

  /// One character per line, exactly 64 lines.
  static Alphabet from_file(const std::filesystem::path& path);

  char at(std::size_t code) const { return chars_.at(code); }
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }

  /// Code of `c` in [0, 63], or -1 if `c` is not in the alphabet.
  int index_of(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }

  std::string_view chars() const noexcept { return {chars_.data(), chars_.size()}; }

 private:
  Alphabet() = default;

  std::array<char, kAlphabetSize> chars_{};
  std::array<std::int16_t, 256> index_{};
};

/// 6 bits per character, MSB first. Throws CharOutOfAlphabet.
BitVector encode_text(std::string_view text, const Alphabet& alphabet = Alphabet::standard());

/// Inverse of encode_text. Throws BadLength unless the size is a multiple of 6.
std::string decode_text(const BitVector& bits, const Alphabet& alphabet = Alphabet::standard());

/// Replace out-of-alphabet UTF-8 code points with `replacement`.
/// Returns the number of substitutions made.
std::size_t normalize_to_alphabet(std::string_view utf8, const Alphabet& alphabet, char replacement,
                                  std::string& out);

/// Number of UTF-8 code points; invalid bytes count as one each.
std::size_t utf8_length(std::string_view utf8) noexcept;

}  // namespace sempilot
