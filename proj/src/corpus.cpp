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

#include "sempilot/corpus.hpp"

#include <fstream>
#include <sstream>

#include "sempilot/error.hpp"

namespace sempilot {

namespace {

// Original sample text in the register of parliamentary debate transcripts.
constexpr std::string_view kBuiltinText = R"(Madam President, we need to spell out the facts before this House takes a decision.
The report before us today addresses a question that concerns every citizen of the Union, namely how we can
guarantee safe and affordable energy while meeting the commitments we made on climate protection.
I would like to thank the rapporteur for the excellent work and for the spirit of cooperation shown
throughout the negotiations with the Council and the Commission.
Nevertheless, my group cannot support every amendment that has been tabled. Some of them go too far, others
do not go far enough, and a few of them would simply create new administrative burdens for small businesses.
We must not forget that the regions most affected by these changes are often those with the highest
unemployment and the weakest infrastructure. If we want the transition to succeed, we have to make sure that
nobody is left behind.
Mr President, ladies and gentlemen, the Commission welcomes the debate and shares many of the concerns that
have been expressed this evening. Let me be clear: the proposal does not seek to replace national measures,
but to complement them where joint action brings a real added value.
The next item is the report on the protection of consumers in cross-border transactions. Honourable members
will recall that this House adopted its first reading position last spring by a large majority.
I should like to ask the Commissioner whether the funds allocated to the programme will be sufficient to
cover the needs of all Member States, or whether a revision of the budget will be necessary next year.
We have heard many fine words in this Chamber, but the people we represent expect results, not speeches.
They want to know what we are going to do about rising prices, about jobs, and about the future of their
children. That is the question we have to answer, and we have to answer it honestly.
The vote will take place tomorrow at noon. The debate is closed.
It is therefore essential that the agency receives the resources it needs to carry out its tasks properly,
and that it reports regularly to Parliament on the progress it has made.
On behalf of my group, I would like to express our solidarity with the victims of the floods and with their
families. The Union must show that it stands by its citizens when disaster strikes.
Finally, I want to stress that transparency is not a luxury. It is the condition for trust, and without
trust no policy, however well designed, will ever be accepted by the public.
)";

}  // namespace

Corpus Corpus::from_text(std::string_view utf8, const Alphabet& alphabet) {
  Corpus c;
  c.substitutions_ = normalize_to_alphabet(utf8, alphabet, ' ', c.text_);
  return c;
}

Corpus Corpus::load(const std::filesystem::path& path, const Alphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), alphabet);
}

Corpus Corpus::builtin(const Alphabet& alphabet) { return from_text(kBuiltinText, alphabet); }

std::string Corpus::sample_window(std::size_t length, Rng& rng) const {
  if (length == 0 || text_.size() < length) {
    throw EmptyCorpus("corpus has " + std::to_string(text_.size()) + " characters, need a window of " +
                      std::to_string(length));
  }
  std::uniform_int_distribution<std::size_t> start(0, text_.size() - length);
  return text_.substr(start(rng), length);
}

}  // namespace sempilot
