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
#include <stdexcept>
#include <string>

namespace sempilot {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CharOutOfAlphabet : public Error {
 public:
  explicit CharOutOfAlphabet(std::size_t position)
      : Error("character at position " + std::to_string(position) + " is not in the alphabet"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class BadAlphabet : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class RootNotCoprime : public Error {
 public:
  using Error::Error;
};

class ZeroPilotEnergy : public Error {
 public:
  using Error::Error;
};

class ZeroChannelEstimate : public Error {
 public:
  using Error::Error;
};

class EmptyPilotSet : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class ZeroTrueChannel : public Error {
 public:
  using Error::Error;
};

class ZeroChannel : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Remote corrector failures. Each is surfaced distinctly so callers can
// tell a slow endpoint from a broken one.
class Timeout : public Error {
 public:
  using Error::Error;
};

class HttpError : public Error {
 public:
  HttpError(int status, const std::string& what) : Error(what), status_(status) {}
  /// HTTP status code, or 0 when no response was received.
  int status() const noexcept { return status_; }

 private:
  int status_;
};

class MalformedResponse : public Error {
 public:
  using Error::Error;
};

}  // namespace sempilot
