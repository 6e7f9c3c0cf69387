// Copyright 2026 The splkit Authors.
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


#ifndef SPLKIT_ERRORS_H_
#define SPLKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace splkit {

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A file was readable but is not a decodable image.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an operation's precondition (shape mismatch, bad parameter).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

// A mask with zero total weight was passed to a masked loss.
class DegenerateMaskError : public ContractViolation {
 public:
  explicit DegenerateMaskError(const std::string& what)
      : ContractViolation(what) {}
};

// Throws ContractViolation with `message` unless `condition` holds.
inline void Require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace splkit

#endif  // SPLKIT_ERRORS_H_
