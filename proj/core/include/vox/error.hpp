// Copyright (c) 2026 The voxclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace vox {

// Error taxonomy shared by all modules. The CLI maps each kind to a
// distinct exit code.
enum class ErrorKind {
  config,        // bad configuration values or inconsistent settings
  input,         // bad runtime input (audio, features, vectors)
  model,         // parameter/shape mismatch inside a network
  usage,         // API misuse (e.g. train mode without targets)
  data,          // corpus/manifest problems
  io,            // file system and serialization failures
  incompatible,  // version mismatch in persisted artifacts
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::config: return "config";
    case ErrorKind::input: return "input";
    case ErrorKind::model: return "model";
    case ErrorKind::usage: return "usage";
    case ErrorKind::data: return "data";
    case ErrorKind::io: return "io";
    case ErrorKind::incompatible: return "incompatible";
  }
  return "unknown";
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

}  // namespace vox
