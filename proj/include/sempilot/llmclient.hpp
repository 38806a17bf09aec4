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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <semaphore>
#include <string>
#include <string_view>

#include "sempilot/corrector.hpp"

namespace sempilot {

struct RemoteConfig {
  /// Full URL of an OpenAI-compatible chat-completions endpoint.
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string model = "o4-mini";
  /// Environment variable holding the bearer token; unset means no auth header.
  std::string api_key_env = "OPENAI_API_KEY";
  double timeout_seconds = 60.0;
  int max_retries = 3;
  int retry_backoff_ms = 500;
  int max_in_flight = 4;
  /// Empty disables the on-disk cache.
  std::filesystem::path cache_dir;
};

/// Chat prompt for the correction task. `{text}` and `{length}` in either
/// message are replaced when rendering.
struct PromptTemplate {
  std::string system;
  std::string user;

  static PromptTemplate standard();

  struct Rendered {
    std::string system;
    std::string user;
  };
  Rendered render(std::string_view decoded) const;
};

/// Pick the line of a chat reply most likely to be the corrected text: the
/// candidate whose length is closest to `length` (first one on ties).
std::string extract_candidate(std::string_view content, std::size_t length);

/// Stable 64-bit FNV-1a over the template, model and input; names cache files.
std::uint64_t cache_key(const PromptTemplate& tmpl, std::string_view model, std::string_view decoded);

/// Chat-completions request body for `decoded`.
std::string build_request_body(const PromptTemplate& tmpl, std::string_view model, std::string_view decoded);

/// choices[0].message.content of a chat-completions reply. Throws MalformedResponse.
std::string parse_response_content(std::string_view body);

class RemoteCorrector final : public Corrector {
 public:
  explicit RemoteCorrector(RemoteConfig cfg, PromptTemplate tmpl = PromptTemplate::standard(),
                           const Alphabet& alphabet = Alphabet::standard());

  /// Throws Timeout, HttpError or MalformedResponse once retries run out.
  CorrectionResult correct(std::string_view decoded, const CorrectionContext& ctx) const override;
  CorrectorSource source() const noexcept override { return CorrectorSource::Remote; }

  std::uint64_t network_calls() const noexcept { return network_calls_.load(); }
  std::uint64_t cache_hits() const noexcept { return cache_hits_.load(); }
  const RemoteConfig& config() const noexcept { return cfg_; }

 private:
  std::string fetch(std::string_view decoded) const;
  std::optional<std::string> cache_load(std::uint64_t key) const;
  void cache_store(std::uint64_t key, const std::string& content) const;

  RemoteConfig cfg_;
  PromptTemplate tmpl_;
  const Alphabet* alphabet_;
  std::string base_url_;
  std::string path_;
  mutable std::counting_semaphore<256> in_flight_;
  mutable std::atomic<std::uint64_t> network_calls_{0};
  mutable std::atomic<std::uint64_t> cache_hits_{0};
  mutable std::atomic<std::uint64_t> temp_counter_{0};
};

}  // namespace sempilot
