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

#include "hnpoly/slope_grid.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hnpoly/error.hpp"

namespace hnpoly {
namespace {

Rational Q(const char* s) { return Rational::parse(s); }

// Schoolbook expansion of (sum_i w_i x^{s_i})^m.
std::vector<BigInt> naive_power(const std::vector<std::int64_t>& steps,
                                const std::vector<std::uint64_t>& weights,
                                std::uint64_t m) {
  std::int64_t span = *std::max_element(steps.begin(), steps.end());
  std::vector<BigInt> cur{BigInt(1)};
  for (std::uint64_t k = 0; k < m; ++k) {
    std::vector<BigInt> nxt(cur.size() + static_cast<std::size_t>(span), 0);
    for (std::size_t t = 0; t < cur.size(); ++t) {
      for (std::size_t i = 0; i < steps.size(); ++i) {
        nxt[t + static_cast<std::size_t>(steps[i])] +=
            cur[t] * static_cast<unsigned long>(weights[i]);
      }
    }
    cur = std::move(nxt);
  }
  return cur;
}

TEST(SlopeGridTest, ScaleIsLcmOfDenominators) {
  SlopeGrid g = make_slope_grid(HNData({Q("3/4"), Q("1/6"), Q("-2")}, {1, 1, 1}));
  EXPECT_EQ(g.scale, 12);
  EXPECT_EQ(g.base, -24);
  EXPECT_EQ(g.steps, (std::vector<std::int64_t>{33, 26, 0}));
  EXPECT_EQ(g.span(), 33);
}

TEST(SlopeGridTest, GridCellsEnforcesBound) {
  SlopeGrid g = make_slope_grid(HNData({Q("2"), Q("-1")}, {1, 1}));
  EXPECT_EQ(grid_cells(g, 10, 100), 31u);
  EXPECT_THROW(grid_cells(g, 40, 100), Error);
  EXPECT_THROW(grid_cells(g, 0, 100), Error);
}

TEST(SlopeGridTest, HugeSpanOverflows) {
  try {
    make_slope_grid(HNData({Q("100000000000000000000"), Q("0")}, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kScaledRangeOverflow);
  }
}

TEST(SlopeGridTest, HugeSlopesWithSmallSpanAreFine) {
  SlopeGrid g = make_slope_grid(
      HNData({Q("100000000000000000001"), Q("100000000000000000000")}, {1, 1}));
  EXPECT_EQ(g.span(), 1);
  EXPECT_EQ(g.base.get_str(), "100000000000000000000");
}

TEST(SlopeGridTest, PowerConvolutionMatchesSchoolbook) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(1, 4), step(0, 9), w(1, 40), mm(1, 25);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::int64_t> uniq;
    int l = len(rng);
    while (static_cast<int>(uniq.size()) < l) uniq.insert(step(rng));
    std::vector<std::int64_t> steps(uniq.rbegin(), uniq.rend());
    std::vector<std::uint64_t> weights;
    for (int i = 0; i < l; ++i) weights.push_back(static_cast<std::uint64_t>(w(rng)));
    std::uint64_t m = static_cast<std::uint64_t>(mm(rng));
    auto got = power_convolution(steps, weights, m, kDefaultGridBound);
    auto want = naive_power(steps, weights, m);
    ASSERT_EQ(got.size(), want.size());
    EXPECT_EQ(got, want) << "trial " << trial;
  }
}

TEST(SlopeGridTest, PowerConvolutionExtremeWeights) {
  // A power-of-two total mass exercises the exact field width.
  std::vector<std::int64_t> steps{1, 0};
  std::vector<std::uint64_t> ones{1, 1};
  auto c = power_convolution(steps, ones, 64, kDefaultGridBound);
  EXPECT_EQ(c.front(), 1);
  EXPECT_EQ(c[32].get_str(), "1832624140942590534");  // C(64, 32)

  std::vector<std::int64_t> single{0};
  std::vector<std::uint64_t> big{std::uint64_t{1} << 63};
  auto s = power_convolution(single, big, 3, kDefaultGridBound);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].get_str(), "784637716923335095479473677900958302012794430558004314112");
}

}  // namespace
}  // namespace hnpoly
