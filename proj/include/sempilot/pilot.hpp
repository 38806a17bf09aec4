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

#include "sempilot/types.hpp"

namespace sempilot {

struct PilotConfig {
  std::size_t length = 16;
  std::size_t root = 1;
};

/// Zadoff-Chu sequence. Even length: exp(-j pi u n^2 / M); odd length:
/// exp(-j pi u n (n + 1) / M). Throws RootNotCoprime if gcd(u, M) != 1.
SymbolVector zadoff_chu(const PilotConfig& cfg);

}  // namespace sempilot
