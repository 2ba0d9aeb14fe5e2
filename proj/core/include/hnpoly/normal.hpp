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

#ifndef HNPOLY_NORMAL_HPP_
#define HNPOLY_NORMAL_HPP_

namespace hnpoly {

// Standard normal CDF, Phi(x) = erfc(-x / sqrt(2)) / 2. Absolute error is
// below 1e-12 for |x| <= 40; far tails saturate to 0 or 1.
double normal_cdf(double x);

// Upper tail 1 - Phi(x), evaluated without cancellation.
double normal_sf(double x);

}  // namespace hnpoly

#endif  // HNPOLY_NORMAL_HPP_
