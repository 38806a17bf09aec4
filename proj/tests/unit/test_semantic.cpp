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

#include <algorithm>
#include <string>

#include "sempilot/corrector.hpp"
#include "sempilot/error.hpp"
#include "sempilot/modem.hpp"
#include "sempilot/semantic_pilot.hpp"
#include "sempilot/textcodec.hpp"

using namespace sempilot;

namespace {

const std::string kTruth = "We need to spell out the facts";
const std::string kDecoded = "Ui Xeef tE kpeVl wut lhW'jaUtM";
const std::string kCorrected = "We need to spell out XXXXXXXXX";

SymbolVector symbols_of(const std::string& text) { return qpsk_modulate(encode_text(text)); }

std::string random_text(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> code(0, kAlphabetSize - 1);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(Alphabet::standard().at(code(rng)));
  return s;
}

}  // namespace

TEST_CASE("worked example: selection mask and pilot size") {
  const SymbolVector decided = symbols_of(kDecoded);
  const SemanticPilot sp = select_semantic_pilot(kDecoded, kCorrected, decided);
  CHECK(sp.size() == 39);
  CHECK(decided.size() == 90);

  std::vector<std::size_t> chars;
  for (std::size_t k = 0; k < sp.size(); k += kSymbolsPerChar) chars.push_back(sp.indices[k] / kSymbolsPerChar);
  CHECK(chars == std::vector<std::size_t>{2, 4, 5, 7, 8, 10, 12, 13, 15, 16, 18, 19, 20});
  for (std::size_t k = 0; k < sp.size(); ++k) CHECK(sp.symbols[k] == decided[sp.indices[k]]);
}

TEST_CASE("selection edge cases") {
  Rng rng(3);
  const std::string text = random_text(20, rng);
  const SymbolVector decided = symbols_of(text);

  SUBCASE("identical texts select every symbol") {
    const SemanticPilot sp = select_semantic_pilot(text, text, decided);
    CHECK(sp.size() == decided.size());
    CHECK(sp.symbols == decided);
  }
  SUBCASE("fully different texts select nothing") {
    std::string other = text;
    for (char& c : other) c = (c == 'a') ? 'b' : 'a';
    CHECK(select_semantic_pilot(text, other, decided).empty());
  }
  SUBCASE("agreement on the mask character counts unless excluded") {
    std::string masked = text;
    std::replace(masked.begin(), masked.end(), kMaskChar, 'x');
    masked[3] = kMaskChar;
    const SymbolVector d = symbols_of(masked);
    CHECK(select_semantic_pilot(masked, masked, d).size() == d.size());
    CHECK(select_semantic_pilot(masked, masked, d, {true}).size() == d.size() - kSymbolsPerChar);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(select_semantic_pilot(text, text.substr(1), decided), LengthMismatch);
    CHECK_THROWS_AS(select_semantic_pilot(text, text, SymbolVector(3)), LengthMismatch);
  }
}

TEST_CASE("selection matches a brute-force character comparison") {
  Rng rng(4);
  std::bernoulli_distribution flip(0.3);
  for (int iter = 0; iter < 200; ++iter) {
    const std::string a = random_text(30, rng);
    std::string b = a;
    for (char& c : b) {
      if (flip(rng)) c = random_text(1, rng)[0];
    }
    const SymbolVector decided = symbols_of(a);
    const SemanticPilot sp = select_semantic_pilot(a, b, decided);
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) {
        for (std::size_t k = 0; k < 3; ++k) expected.push_back(3 * i + k);
      }
    }
    CHECK(sp.indices == expected);
    CHECK(std::is_sorted(sp.indices.begin(), sp.indices.end()));
  }
}

TEST_CASE("normalize_correction") {
  SUBCASE("exact length passes through") {
    const auto r = normalize_correction("abc", 3);
    CHECK(r.corrected == "abc");
    CHECK_FALSE(r.length_repaired);
  }
  SUBCASE("short output is padded with the mask") {
    const auto r = normalize_correction("ab", 5);
    CHECK(r.corrected == "abXXX");
    CHECK(r.length_repaired);
  }
  SUBCASE("long output is truncated") {
    const auto r = normalize_correction("abcdef", 4);
    CHECK(r.corrected == "abcd");
    CHECK(r.length_repaired);
  }
  SUBCASE("out-of-alphabet code points become the mask") {
    const auto r = normalize_correction("a\xc3\xa9" "b", 3);
    CHECK(r.corrected == "aXb");
    CHECK(r.length_repaired);
  }
}

TEST_CASE("oracle and identity correctors") {
  CHECK(oracle_corrector(kDecoded, kTruth).corrected == kTruth);
  CHECK_THROWS_AS(oracle_corrector("abc", "ab"), LengthMismatch);
  const IdentityCorrector id;
  CHECK(id.correct(kDecoded, {kTruth, 1}).corrected == kDecoded);
  const OracleCorrector oracle;
  CHECK(oracle.correct(kDecoded, {kTruth, 1}).corrected == kTruth);
}

TEST_CASE("stochastic corrector") {
  SUBCASE("certain fix recovers the truth") {
    Rng rng(1);
    const auto r = stochastic_corrector(kDecoded, kTruth, {1.0, 0.0, 0.0, 0.0}, rng);
    CHECK(r.corrected == kTruth);
  }
  SUBCASE("all zero probabilities is the identity") {
    Rng rng(1);
    CHECK(stochastic_corrector(kDecoded, kTruth, {0.0, 0.0, 0.0, 0.0}, rng).corrected == kDecoded);
  }
  SUBCASE("certain mask with error-run expansion masks exactly the erroneous characters") {
    Rng rng(1);
    const auto r = stochastic_corrector(kDecoded, kTruth, {0.0, 1.0, 0.0, 1.0, MaskSpan::ErrorRun}, rng);
    for (std::size_t i = 0; i < kTruth.size(); ++i) {
      CHECK(r.corrected[i] == (kDecoded[i] == kTruth[i] ? kDecoded[i] : kMaskChar));
    }
  }
  SUBCASE("word expansion masks whole corrupted words, spaces untouched") {
    Rng rng(1);
    const std::string truth = "the facts are in";
    const std::string decoded = "lhW'jaUtM are in";
    const auto r = stochastic_corrector(decoded, truth, {0.0, 1.0, 0.0, 1.0, MaskSpan::Word}, rng);
    CHECK(r.corrected == "XXXXXXXXX are in");
  }
  SUBCASE("without expansion a mask covers one character") {
    Rng rng(1);
    const std::string truth = "the facts";
    const std::string decoded = "tNe facts";
    CHECK(stochastic_corrector(decoded, truth, {0.0, 1.0, 0.0, 0.0}, rng).corrected == "tXe facts");
  }
  SUBCASE("same seed, same output; output stays in the alphabet") {
    const StochasticCorrector c(StochasticParams{});
    const auto a = c.correct(kDecoded, {kTruth, 77});
    const auto b = c.correct(kDecoded, {kTruth, 77});
    CHECK(a.corrected == b.corrected);
    CHECK(a.corrected.size() == kDecoded.size());
    for (char ch : a.corrected) CHECK(Alphabet::standard().contains(ch));
  }
  SUBCASE("empirical fix rate follows p_fix") {
    Rng rng(5);
    const StochasticParams p{0.6, 0.2, 0.1, 0.0};
    std::size_t wrong = 0, fixed = 0, masked = 0;
    for (int t = 0; t < 5000; ++t) {
      const auto r = stochastic_corrector(kDecoded, kTruth, p, rng);
      for (std::size_t i = 0; i < kTruth.size(); ++i) {
        if (kDecoded[i] == kTruth[i]) continue;
        ++wrong;
        fixed += r.corrected[i] == kTruth[i];
        masked += r.corrected[i] == kMaskChar && kTruth[i] != kMaskChar;
      }
    }
    CHECK(double(fixed) / double(wrong) == doctest::Approx(0.6).epsilon(0.03));
    CHECK(double(masked) / double(wrong) == doctest::Approx(0.2).epsilon(0.05));
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(StochasticCorrector({0.8, 0.3, 0.0, 0.0}), ConfigError);
    CHECK_THROWS_AS(StochasticCorrector({-0.1, 0.0, 0.0, 0.0}), ConfigError);
  }
}
