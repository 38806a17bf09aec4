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

#include "sempilot/llmclient.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "sempilot/error.hpp"

namespace sempilot {

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Releases a counting-semaphore slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<256>& s) : s_(s) { s_.acquire(); }
  ~SlotGuard() { s_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<256>& s_;
};

std::string_view strip_wrapping(std::string_view line) {
  while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.size() >= 2) {
    const char f = line.front();
    if ((f == '"' || f == '`' || f == '\'') && line.back() == f) line = line.substr(1, line.size() - 2);
  }
  return line;
}

}  // namespace

PromptTemplate PromptTemplate::standard() {
  PromptTemplate t;
  t.system =
      "You correct typographical errors in text received over a noisy channel. "
      "Rules: (1) the corrected text must be exactly the same length as the input, {length} characters; "
      "(2) only substitute characters, never insert or delete any; "
      "(3) replace severely corrupted segments you cannot recover with a run of 'X' characters of "
      "equal length. Reply with the corrected text only, on a single line.";
  t.user = "{text}";
  return t;
}

PromptTemplate::Rendered PromptTemplate::render(std::string_view decoded) const {
  Rendered r{system, user};
  const std::string length = std::to_string(utf8_length(decoded));
  for (std::string* s : {&r.system, &r.user}) {
    replace_all(*s, "{length}", length);
    replace_all(*s, "{text}", decoded);
  }
  return r;
}

std::string extract_candidate(std::string_view content, std::size_t length) {
  std::string_view best;
  std::size_t best_gap = std::string::npos;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    const std::string_view line = strip_wrapping(content.substr(start, end - start));
    const bool fence = line.starts_with("```");
    if (!fence && !line.empty()) {
      const std::size_t n = utf8_length(line);
      const std::size_t gap = n > length ? n - length : length - n;
      if (gap < best_gap) {
        best = line;
        best_gap = gap;
      }
    }
    start = end + 1;
  }
  return std::string(best);
}

std::uint64_t cache_key(const PromptTemplate& tmpl, std::string_view model, std::string_view decoded) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0x1f;
    h *= 0x100000001b3ULL;
  };
  feed(tmpl.system);
  feed(tmpl.user);
  feed(model);
  feed(decoded);
  return h;
}

std::string build_request_body(const PromptTemplate& tmpl, std::string_view model, std::string_view decoded) {
  const auto prompt = tmpl.render(decoded);
  nlohmann::json body = {
      {"model", model},
      {"messages",
       nlohmann::json::array({{{"role", "system"}, {"content", prompt.system}},
                              {{"role", "user"}, {"content", prompt.user}}})},
  };
  return body.dump();
}

std::string parse_response_content(std::string_view body) {
  const auto json = nlohmann::json::parse(body, nullptr, false);
  if (json.is_discarded()) throw MalformedResponse("response is not valid JSON");
  const auto choices = json.find("choices");
  if (choices == json.end() || !choices->is_array() || choices->empty()) {
    throw MalformedResponse("response has no choices");
  }
  const auto& first = (*choices)[0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string()) {
    throw MalformedResponse("response choice has no message content");
  }
  return first["message"]["content"].get<std::string>();
}

RemoteCorrector::RemoteCorrector(RemoteConfig cfg, PromptTemplate tmpl, const Alphabet& alphabet)
    : cfg_(std::move(cfg)), tmpl_(std::move(tmpl)), alphabet_(&alphabet), in_flight_(std::clamp(cfg_.max_in_flight, 1, 256)) {
  if (!(cfg_.timeout_seconds > 0.0)) throw ConfigError("remote corrector timeout must be positive");
  if (cfg_.max_retries < 0) throw ConfigError("remote corrector retries must be non-negative");

  const auto scheme_end = cfg_.endpoint.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint must be an absolute URL: " + cfg_.endpoint);
  const auto path_start = cfg_.endpoint.find('/', scheme_end + 3);
  base_url_ = cfg_.endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/v1/chat/completions" : cfg_.endpoint.substr(path_start);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (base_url_.starts_with("https://")) throw ConfigError("this build has no TLS support for " + base_url_);
#endif
  if (!cfg_.cache_dir.empty()) std::filesystem::create_directories(cfg_.cache_dir);
}

std::optional<std::string> RemoteCorrector::cache_load(std::uint64_t key) const {
  if (cfg_.cache_dir.empty()) return std::nullopt;
  std::ifstream in(cfg_.cache_dir / (hex64(key) + ".txt"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void RemoteCorrector::cache_store(std::uint64_t key, const std::string& content) const {
  if (cfg_.cache_dir.empty()) return;
  const auto final_path = cfg_.cache_dir / (hex64(key) + ".txt");
  std::ostringstream tmp_name;
  tmp_name << hex64(key) << ".tmp." << std::this_thread::get_id() << '.' << temp_counter_.fetch_add(1);
  const auto tmp_path = cfg_.cache_dir / tmp_name.str();
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + tmp_path.string());
    out << content;
  }
  std::filesystem::rename(tmp_path, final_path);
}

std::string RemoteCorrector::fetch(std::string_view decoded) const {
  SlotGuard slot(in_flight_);
  network_calls_.fetch_add(1);

  httplib::Client client(base_url_);
  const auto secs = static_cast<time_t>(cfg_.timeout_seconds);
  const auto usecs = static_cast<time_t>((cfg_.timeout_seconds - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  httplib::Headers headers;
  if (const char* key = std::getenv(cfg_.api_key_env.c_str()); key != nullptr && *key != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const auto res = client.Post(path_, headers, build_request_body(tmpl_, cfg_.model, decoded), "application/json");
  if (!res) {
    const auto err = res.error();
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read) {
      throw Timeout("request to " + cfg_.endpoint + " timed out");
    }
    throw HttpError(0, "request to " + cfg_.endpoint + " failed: " + httplib::to_string(err));
  }
  if (res->status < 200 || res->status >= 300) {
    throw HttpError(res->status, "endpoint returned HTTP " + std::to_string(res->status));
  }
  return parse_response_content(res->body);
}

CorrectionResult RemoteCorrector::correct(std::string_view decoded, const CorrectionContext&) const {
  const std::uint64_t key = cache_key(tmpl_, cfg_.model, decoded);
  const std::size_t length = decoded.size();

  if (auto cached = cache_load(key)) {
    cache_hits_.fetch_add(1);
    return normalize_correction(extract_candidate(*cached, length), length, *alphabet_);
  }

  for (int attempt = 0;; ++attempt) {
    try {
      const std::string content = fetch(decoded);
      cache_store(key, content);
      auto r = normalize_correction(extract_candidate(content, length), length, *alphabet_);
      r.retries = attempt;
      return r;
    } catch (const Timeout&) {
      if (attempt >= cfg_.max_retries) throw;
    } catch (const HttpError&) {
      if (attempt >= cfg_.max_retries) throw;
    } catch (const MalformedResponse&) {
      if (attempt >= cfg_.max_retries) throw;
    }
    if (cfg_.retry_backoff_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(cfg_.retry_backoff_ms * (attempt + 1)));
    }
  }
}

}  // namespace sempilot
