// Copyright 2026 The qsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsl/errors.h"

namespace qsl {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNormViolation: return "NormViolation";
    case ErrorCode::kInvalidDensity: return "InvalidDensity";
    case ErrorCode::kInvalidAxis: return "InvalidAxis";
    case ErrorCode::kInvalidRate: return "InvalidRate";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kNotReachable: return "NotReachable";
    case ErrorCode::kDegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::kGroundState: return "GroundState";
    case ErrorCode::kMissingIdentityShift: return "MissingIdentityShift";
    case ErrorCode::kRadiusMismatch: return "RadiusMismatch";
    case ErrorCode::kCollinearInput: return "CollinearInput";
    case ErrorCode::kOverlapNotReal: return "OverlapNotReal";
    case ErrorCode::kLinearlyDependent: return "LinearlyDependent";
    case ErrorCode::kTruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::kNonphysicalOutput: return "NonphysicalOutput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace qsl
