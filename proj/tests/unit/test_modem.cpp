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

#include <doctest.h>

#include <array>
#include <cmath>

#include "sempilot/error.hpp"
#include "sempilot/modem.hpp"

using namespace sempilot;

namespace {
const double r = std::sqrt(0.5);  // correctly rounded 1/sqrt(2)

// Brute-force nearest constellation point, independent of the sign test.
Complex nearest_point(Complex z) {
  const std::array<Complex, 4> points = {Complex{r, r}, Complex{-r, r}, Complex{r, -r}, Complex{-r, -r}};
  Complex best = points[0];
  for (const Complex& p : points) {
    if (std::abs(z - p) < std::abs(z - best)) best = p;
  }
  return best;
}
}  // namespace

TEST_CASE("qpsk_modulate maps bit pairs by sign") {
  const SymbolVector s = qpsk_modulate({0, 0, 1, 1, 1, 0, 0, 1});
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Complex{r, r});
  CHECK(s[1] == Complex{-r, -r});
  CHECK(s[2] == Complex{-r, r});
  CHECK(s[3] == Complex{r, -r});
  CHECK(qpsk_modulate(BitVector(180, 0)).size() == 90);
  CHECK_THROWS_AS(qpsk_modulate({0, 1, 1}), BadLength);
}

TEST_CASE("qpsk_decide") {
  SUBCASE("first quadrant") {
    const Decisions d = qpsk_decide(SymbolVector{{0.9, 0.8}});
    CHECK(d.bits == BitVector{0, 0});
    CHECK(d.symbols[0] == Complex{r, r});
  }
  SUBCASE("matches brute-force nearest point") {
    const Complex z{-0.1, 2.0};
    const Decisions d = qpsk_decide(SymbolVector{z});
    CHECK(d.bits == BitVector{1, 0});
    CHECK(d.symbols[0] == nearest_point(z));
    CHECK(d.symbols[0] == Complex{-r, r});
  }
  SUBCASE("ties go to the positive sign") {
    const Decisions d = qpsk_decide(SymbolVector{{0.0, 0.0}, {0.0, -1.0}});
    CHECK(d.bits == BitVector{0, 0, 0, 1});
  }
}

TEST_CASE("noiseless round trip, unit energy and quadrant decision regions") {
  Rng rng(5);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> jitter(-0.7, 0.7);  // |delta| < 1/sqrt(2)
  std::normal_distribution<double> wild(0.0, 2.0);
  for (int iter = 0; iter < 100; ++iter) {
    BitVector bits(2 * 64);
    for (auto& b : bits) b = coin(rng);
    const SymbolVector s = qpsk_modulate(bits);
    for (const Complex& x : s) CHECK(std::fabs(std::norm(x) - 1.0) < 1e-12);
    CHECK(qpsk_decide(s).bits == bits);

    SymbolVector perturbed = s;
    for (auto& x : perturbed) x += Complex{jitter(rng), jitter(rng)};
    CHECK(qpsk_decide(perturbed).bits == bits);

    for (int k = 0; k < 16; ++k) {
      const Complex z{wild(rng), wild(rng)};
      CHECK(qpsk_decide(SymbolVector{z}).symbols[0] == nearest_point(z));
    }
  }
}

TEST_CASE("char_symbols partitions the payload") {
  const std::size_t L = 7;
  SymbolVector v(3 * L);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(static_cast<double>(i), 0.0);
  CHECK(char_symbols(0, v).data() == v.data());
  CHECK(char_symbols(L - 1, v).data() == v.data() + 3 * L - 3);
  SymbolVector joined;
  for (std::size_t i = 0; i < L; ++i) {
    const auto span = char_symbols(i, v);
    CHECK(span.size() == 3);
    joined.insert(joined.end(), span.begin(), span.end());
  }
  CHECK(joined == v);
  CHECK_THROWS_AS(char_symbols(L, v), IndexOutOfRange);
  CHECK_THROWS_AS(char_symbols(0, SymbolVector(4)), IndexOutOfRange);
}
