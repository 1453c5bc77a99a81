// Copyright 2026 The Rigid Embeddings Authors
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

#ifndef RIGID_ERROR_HPP_
#define RIGID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rigid {

enum class ErrorCode {
  kInvalidArgument,
  kInfeasible,
  kNotFound,
  kUnsupported,
  kOutOfRange,
  kDegenerate,
  kInconsistent,
  kSolverError,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; the code
// lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kInfeasible:
      return "infeasible";
    case ErrorCode::kNotFound:
      return "not-found";
    case ErrorCode::kUnsupported:
      return "unsupported";
    case ErrorCode::kOutOfRange:
      return "out-of-range";
    case ErrorCode::kDegenerate:
      return "degenerate";
    case ErrorCode::kInconsistent:
      return "inconsistent";
    case ErrorCode::kSolverError:
      return "solver-error";
  }
  return "unknown";
}

}  // namespace rigid

#endif  // RIGID_ERROR_HPP_
