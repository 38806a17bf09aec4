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
#include <filesystem>
#include <string>
#include <string_view>

#include "sempilot/textcodec.hpp"
#include "sempilot/types.hpp"

namespace sempilot {

/// Source text, normalised to the alphabet. Out-of-alphabet code points
/// (accents, newlines, ...) become spaces and are counted.
class Corpus {
 public:
  /// Throws IoError.
  static Corpus load(const std::filesystem::path& path, const Alphabet& alphabet = Alphabet::standard());
  static Corpus from_text(std::string_view utf8, const Alphabet& alphabet = Alphabet::standard());
  /// Small bundled sample of parliamentary-style English prose.
  static Corpus builtin(const Alphabet& alphabet = Alphabet::standard());

  /// Uniformly placed window of `length` characters. Throws EmptyCorpus when
  /// the corpus is shorter than `length`.
  std::string sample_window(std::size_t length, Rng& rng) const;

  const std::string& text() const noexcept { return text_; }
  std::size_t substitutions() const noexcept { return substitutions_; }

 private:
  std::string text_;
  std::size_t substitutions_ = 0;
};

}  // namespace sempilot
