// Copyright 2026 The pathqa Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathqa {

enum class Errc {
  invalid_argument,
  not_found,
  io,
  format,
  schema,
  transport,
};

/// Base exception for every failure raised by the library. The code lets
/// callers (the HTTP facade, the CLI) map failures without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised while decoding a shard; carries the index of the record that
/// failed (-1 when the file header itself is bad).
class ShardError : public Error {
 public:
  ShardError(std::int64_t record_index, const std::string& what)
      : Error(Errc::format, what + " (record " + std::to_string(record_index) + ")"),
        record_index_(record_index) {}
  std::int64_t record_index() const noexcept { return record_index_; }

 private:
  std::int64_t record_index_;
};

}  // namespace pathqa
