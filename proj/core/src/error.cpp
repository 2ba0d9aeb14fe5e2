// Copyright 2026 The hnpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnpoly/error.hpp"

namespace hnpoly {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyData: return "EmptyData";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kSlopesNotStrictlyDecreasing: return "SlopesNotStrictlyDecreasing";
    case Errc::kNonPositiveRank: return "NonPositiveRank";
    case Errc::kJumpsNotStrictlyIncreasing: return "JumpsNotStrictlyIncreasing";
    case Errc::kStepDimsNotStrictlyDecreasing: return "StepDimsNotStrictlyDecreasing";
    case Errc::kNonPositiveDimension: return "NonPositiveDimension";
    case Errc::kDegreesNotStrictlyIncreasing: return "DegreesNotStrictlyIncreasing";
    case Errc::kNonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case Errc::kInvalidRational: return "InvalidRational";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kScaledRangeOverflow: return "ScaledRangeOverflow";
    case Errc::kEnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case Errc::kZeroVariance: return "ZeroVariance";
    case Errc::kBoundNotApplicable: return "BoundNotApplicable";
  }
  return "Unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::kScaledRangeOverflow:
    case Errc::kEnumerationBoundExceeded:
    case Errc::kZeroVariance:
    case Errc::kBoundNotApplicable:
      return false;
    default:
      return true;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

}  // namespace hnpoly
