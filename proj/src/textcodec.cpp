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

#include "sempilot/textcodec.hpp"

#include <algorithm>
#include <fstream>

#include "sempilot/error.hpp"

namespace sempilot {

namespace {

constexpr std::string_view kStandardChars =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz"
    " .,'?!-:;\"()";

static_assert(kStandardChars.size() == kAlphabetSize);

// Length of the UTF-8 sequence introduced by `lead`, or 1 for stray bytes.
std::size_t utf8_sequence_length(unsigned char lead) noexcept {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

const Alphabet& Alphabet::standard() {
  static const Alphabet alphabet = from_chars(kStandardChars);
  return alphabet;
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  if (chars.size() != kAlphabetSize) {
    throw BadAlphabet("alphabet must have exactly 64 characters, got " + std::to_string(chars.size()));
  }
  Alphabet a;
  a.index_.fill(-1);
  for (std::size_t i = 0; i < kAlphabetSize; ++i) {
    const auto c = static_cast<unsigned char>(chars[i]);
    if (c >= 0x80) throw BadAlphabet("alphabet characters must be ASCII");
    if (a.index_[c] >= 0) {
      throw BadAlphabet(std::string("duplicate alphabet character '") + chars[i] + "'");
    }
    a.chars_[i] = chars[i];
    a.index_[c] = static_cast<std::int16_t>(i);
  }
  return a;
}

Alphabet Alphabet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open alphabet file " + path.string());
  std::string chars;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != 1) {
      throw BadAlphabet("alphabet file line " + std::to_string(chars.size() + 1) +
                        " must hold exactly one ASCII character");
    }
    chars.push_back(line[0]);
  }
  return from_chars(chars);
}

BitVector encode_text(std::string_view text, const Alphabet& alphabet) {
  BitVector bits;
  bits.reserve(text.size() * kBitsPerChar);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int code = alphabet.index_of(text[i]);
    if (code < 0) throw CharOutOfAlphabet(i);
    for (int b = static_cast<int>(kBitsPerChar) - 1; b >= 0; --b) {
      bits.push_back(static_cast<std::uint8_t>((code >> b) & 1));
    }
  }
  return bits;
}

std::string decode_text(const BitVector& bits, const Alphabet& alphabet) {
  if (bits.size() % kBitsPerChar != 0) {
    throw BadLength("bit vector length " + std::to_string(bits.size()) + " is not a multiple of 6");
  }
  std::string text;
  text.reserve(bits.size() / kBitsPerChar);
  for (std::size_t i = 0; i < bits.size(); i += kBitsPerChar) {
    unsigned code = 0;
    for (std::size_t b = 0; b < kBitsPerChar; ++b) code = (code << 1) | (bits[i + b] & 1u);
    text.push_back(alphabet.at(code));
  }
  return text;
}

std::size_t normalize_to_alphabet(std::string_view utf8, const Alphabet& alphabet, char replacement,
                                  std::string& out) {
  std::size_t substitutions = 0;
  out.clear();
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size();) {
    const auto lead = static_cast<unsigned char>(utf8[i]);
    const std::size_t n = utf8_sequence_length(lead);
    if (n == 1 && alphabet.contains(utf8[i])) {
      out.push_back(utf8[i]);
    } else {
      out.push_back(replacement);
      ++substitutions;
    }
    i += std::min(n, utf8.size() - i);
  }
  return substitutions;
}

std::size_t utf8_length(std::string_view utf8) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < utf8.size(); ++count) {
    i += std::min(utf8_sequence_length(static_cast<unsigned char>(utf8[i])), utf8.size() - i);
  }
  return count;
}

}  // namespace sempilot
