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

#include "sempilot/pilot.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sempilot/error.hpp"

namespace sempilot {

SymbolVector zadoff_chu(const PilotConfig& cfg) {
  const std::size_t m = cfg.length;
  if (m == 0 || cfg.root == 0 || std::gcd(cfg.root, m) != 1) {
    throw RootNotCoprime("Zadoff-Chu root " + std::to_string(cfg.root) + " is not coprime with length " +
                         std::to_string(m));
  }
  SymbolVector seq(m);
  const std::size_t odd = m % 2;
  for (std::size_t n = 0; n < m; ++n) {
    // Reduce the exponent modulo 2M before converting to double so large n stay exact.
    const std::size_t k = (cfg.root % (2 * m)) * ((n * (n + odd)) % (2 * m)) % (2 * m);
    const double phase = -std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    seq[n] = std::polar(1.0, phase);
  }
  return seq;
}

}  // namespace sempilot
