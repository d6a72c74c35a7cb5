/*
 * Copyright 2026 The fourd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOURD_ERRORS_H_
#define FOURD_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fourd {

enum class ErrorCode {
  kSuperluminalSpeed,
  kDomainError,
  kInvalidConfig,
  kUnknownPlane,
  kNonMonotonicTime,
  kTooFewSamples,
  kBrokenChain,
  kNonOrthogonal,
  kDegenerateField,
  kEmptyDataset,
  kInconsistentPoint,
  kEmptyTrajectory,
  kUnsupportedFormat,
  kPointOutOfBounds,
  kDegenerateGrid,
  kInvalidProfile,
  kLengthMismatch,
  kParseError,
  kColumnCountMismatch,
  kIoError,
};

// Stable name used in diagnostics, e.g. "SuperluminalSpeed".
std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the toolkit is reported as an Error carrying a code.
// Dataset errors carry the 1-based input line, time-stepping errors the
// offending timestamp.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> line = std::nullopt,
        std::optional<double> timestamp = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<int> line() const { return line_; }
  std::optional<double> timestamp() const { return timestamp_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
  std::optional<double> timestamp_;
};

}  // namespace fourd

#endif  // FOURD_ERRORS_H_
