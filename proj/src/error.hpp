// Copyright 2026 The Authors.
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

#ifndef QMAT_ERROR_HPP_
#define QMAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qmat {

// Values line up with qmat_status in include/qmat/qmat.h.
enum class ErrorCode {
  kInvalidArgument = 1,
  kInvalidCharacteristic = 2,
  kDivisionByZero = 3,
  kShape = 4,
  kAmbientMismatch = 5,
  kInvalidCollection = 6,
  kInvalidTable = 7,
  kCeiling = 8,
  kParse = 9,
  kDegenerate = 10,
  kUndefinedDistance = 11,
  kHypothesis = 12,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) Fail(code, what);
}

}  // namespace qmat

#endif  // QMAT_ERROR_HPP_
