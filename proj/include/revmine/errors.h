// Copyright 2026 The Revmine Authors.
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

#ifndef REVMINE_ERRORS_H_
#define REVMINE_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revmine {

// Bad flags, unreadable resources, unsupported compression.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fatal problem in the dump itself. offset is the byte position in the
// decompressed XML stream where the parser gave up.
class IngestError : public std::runtime_error {
 public:
  IngestError(const std::string& what, uint64_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  uint64_t offset() const { return offset_; }

 private:
  uint64_t offset_;
};

// An input collection is too small (or empty) for the requested operation.
class SizingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched caller input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output sink failure; written() is the number of records that made it out.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, uint64_t written)
      : std::runtime_error(what), written_(written) {}
  uint64_t written() const { return written_; }

 private:
  uint64_t written_;
};

}  // namespace revmine

#endif  // REVMINE_ERRORS_H_
