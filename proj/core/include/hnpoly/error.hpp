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

#ifndef HNPOLY_ERROR_HPP_
#define HNPOLY_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hnpoly {

enum class Errc {
  // Input validation.
  kEmptyData,
  kLengthMismatch,
  kSlopesNotStrictlyDecreasing,
  kNonPositiveRank,
  kJumpsNotStrictlyIncreasing,
  kStepDimsNotStrictlyDecreasing,
  kNonPositiveDimension,
  kDegreesNotStrictlyIncreasing,
  kNonPositiveMultiplicity,
  kInvalidRational,
  kInvalidArgument,
  kIndexOutOfRange,
  // Resource limits.
  kScaledRangeOverflow,
  kEnumerationBoundExceeded,
  // Approximations that are undefined for the given input.
  kZeroVariance,
  kBoundNotApplicable,
};

std::string_view errc_name(Errc code) noexcept;

// True for errors caused by malformed mathematical input (as opposed to
// resource limits or inapplicable approximations).
bool is_validation_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hnpoly

#endif  // HNPOLY_ERROR_HPP_
