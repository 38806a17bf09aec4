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
#include <string_view>
#include <vector>

#include "sempilot/types.hpp"

namespace sempilot {

/// Decided text symbols reused as extra pilots: positions into y_t / x̂_t and
/// the decided constellation points at those positions.
struct SemanticPilot {
  std::vector<std::size_t> indices;  ///< strictly increasing, each < K
  SymbolVector symbols;

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }

  /// Every position in [0, k), paired with `symbols`.
  static SemanticPilot all(std::span<const Complex> symbols);
};

struct SelectionOptions {
  /// Drop positions where both texts carry the mask character.
  bool exclude_mask_matches = false;
};

/// For every character where decoded and corrected text agree, all three of
/// its symbols enter the pilot. Throws LengthMismatch.
SemanticPilot select_semantic_pilot(std::string_view decoded, std::string_view corrected,
                                    std::span<const Complex> decided_symbols, SelectionOptions options = {});

}  // namespace sempilot
