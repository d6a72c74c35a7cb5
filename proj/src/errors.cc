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

#include "fourd/errors.h"

#include <iomanip>
#include <sstream>

namespace fourd {
namespace {

std::string Decorate(ErrorCode code, const std::string& message,
                     std::optional<int> line, std::optional<double> timestamp) {
  std::ostringstream out;
  out << ErrorCodeName(code) << ": " << message;
  if (line) out << " (line " << *line << ")";
  if (timestamp) out << " (t=" << std::setprecision(12) << *timestamp << " s)";
  return out.str();
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSuperluminalSpeed: return "SuperluminalSpeed";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kUnknownPlane: return "UnknownPlane";
    case ErrorCode::kNonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kBrokenChain: return "BrokenChain";
    case ErrorCode::kNonOrthogonal: return "NonOrthogonal";
    case ErrorCode::kDegenerateField: return "DegenerateField";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kInconsistentPoint: return "InconsistentPoint";
    case ErrorCode::kEmptyTrajectory: return "EmptyTrajectory";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kPointOutOfBounds: return "PointOutOfBounds";
    case ErrorCode::kDegenerateGrid: return "DegenerateGrid";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kColumnCountMismatch: return "ColumnCountMismatch";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<int> line, std::optional<double> timestamp)
    : std::runtime_error(Decorate(code, message, line, timestamp)),
      code_(code),
      line_(line),
      timestamp_(timestamp) {}

}  // namespace fourd
