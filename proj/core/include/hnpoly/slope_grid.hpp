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

#ifndef HNPOLY_SLOPE_GRID_HPP_
#define HNPOLY_SLOPE_GRID_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hnpoly/hn_data.hpp"
#include "hnpoly/rational.hpp"

namespace hnpoly {

// Maximum number of grid cells (m * span + 1) any convolution may allocate.
inline constexpr std::uint64_t kDefaultGridBound = 10'000'000;

// Integer grid for slope sums. With scale = lcm of slope denominators every
// scaled slope mu_i * scale is an integer; slopes are stored relative to the
// smallest one so that steps lie in [0, span].
struct SlopeGrid {
  BigInt scale;
  BigInt base;                     // mu_l * scale
  std::vector<std::int64_t> steps; // (mu_i - mu_l) * scale, strictly decreasing

  std::int64_t span() const { return steps.front(); }
};

// Throws Error(kScaledRangeOverflow) if the scaled span does not fit in
// 63 bits.
SlopeGrid make_slope_grid(const HNData& data);

// Number of cells m * span + 1 needed for m-fold sums. Throws
// Error(kScaledRangeOverflow) above grid_bound and Error(kInvalidArgument)
// for m == 0.
std::uint64_t grid_cells(const SlopeGrid& grid, std::uint64_t m,
                         std::uint64_t grid_bound);

// Dense coefficients c_0..c_{m*span} of (sum_i weights[i] x^steps[i])^m,
// i.e. c_t = sum over a in [l]^m with sum_j steps[a_j] = t of
// prod_j weights[a_j].
//
// The polynomial is packed into one integer (x = 2^B with B wide enough for
// the largest coefficient) and raised to the m-th power by GMP, so the cost
// is a handful of large multiplications rather than m sweeps over the grid.
std::vector<BigInt> power_convolution(std::span<const std::int64_t> steps,
                                      std::span<const std::uint64_t> weights,
                                      std::uint64_t m,
                                      std::uint64_t grid_bound);

}  // namespace hnpoly

#endif  // HNPOLY_SLOPE_GRID_HPP_
