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

#include "hnpoly/hn_data.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hnpoly/error.hpp"
#include "oracles.hpp"

namespace hnpoly {
namespace {

Rational Q(const char* s) { return Rational::parse(s); }

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

TEST(HNDataTest, AcceptsValidData) {
  HNData two({Q("2"), Q("-1")}, {1, 1});
  EXPECT_EQ(two.length(), 2u);
  HNData one({Q("3/2")}, {5});
  EXPECT_EQ(one.length(), 1u);
}

TEST(HNDataTest, RejectsInvalidData) {
  EXPECT_EQ(error_of([] { HNData({Q("-1"), Q("2")}, {1, 1}); }),
            Errc::kSlopesNotStrictlyDecreasing);
  EXPECT_EQ(error_of([] { HNData({Q("1"), Q("1")}, {1, 1}); }),
            Errc::kSlopesNotStrictlyDecreasing);
  EXPECT_EQ(error_of([] { HNData({Q("1")}, {0}); }), Errc::kNonPositiveRank);
  EXPECT_EQ(error_of([] { HNData({Q("1")}, {-3}); }), Errc::kNonPositiveRank);
  EXPECT_EQ(error_of([] { HNData({Q("1"), Q("0")}, {1}); }),
            Errc::kLengthMismatch);
  EXPECT_EQ(error_of([] { HNData({}, {}); }), Errc::kEmptyData);
}

TEST(HNDataTest, DeriveTwoBlocks) {
  HNDerived d = derive(HNData({Q("2"), Q("-1")}, {1, 1}));
  EXPECT_EQ(d.degrees, (std::vector<Rational>{Q("2"), Q("-1")}));
  EXPECT_EQ(d.total_rank, 2);
  EXPECT_EQ(d.total_degree, Q("1"));
  EXPECT_EQ(d.probabilities, (std::vector<Rational>{Q("1/2"), Q("1/2")}));
  EXPECT_EQ(d.mean, Q("1/2"));
  EXPECT_EQ(d.variance, Q("9/4"));
  EXPECT_TRUE(d.is_positive_degree);
}

TEST(HNDataTest, DeriveSingleBlock) {
  HNDerived d = derive(HNData({Q("3/2")}, {5}));
  EXPECT_EQ(d.degrees, std::vector<Rational>{Q("15/2")});
  EXPECT_EQ(d.probabilities, std::vector<Rational>{Q("1")});
  EXPECT_EQ(d.mean, Q("3/2"));
  EXPECT_EQ(d.variance, Q("0"));
}

TEST(HNDataTest, DeriveNegativeDegree) {
  HNDerived d = derive(HNData({Q("1"), Q("0"), Q("-2")}, {1, 2, 1}));
  EXPECT_EQ(d.total_degree, Q("-1"));
  EXPECT_FALSE(d.is_positive_degree);
}

TEST(HNDataTest, DerivedIdentitiesOnRandomData) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    HNData data = testing::random_hn_data(rng, 5, 6, 7);
    HNDerived d = derive(data);
    Rational psum;
    for (const auto& p : d.probabilities) psum += p;
    EXPECT_EQ(psum, Rational(1));
    EXPECT_EQ(d.mean * Rational(d.total_rank), d.total_degree);
    EXPECT_GE(d.variance, Rational(0));
    EXPECT_EQ(d.variance.sign() == 0, data.length() == 1);
  }
}

TEST(HNDataTest, CoalesceMergesEqualAdjacentSlopes) {
  std::vector<Rational> slopes{Q("2"), Q("2"), Q("1/2"), Q("-1"), Q("-1")};
  std::vector<std::int64_t> ranks{1, 2, 3, 1, 1};
  HNData merged = coalesce_blocks(slopes, ranks);
  EXPECT_EQ(merged.slopes(), (std::vector<Rational>{Q("2"), Q("1/2"), Q("-1")}));
  EXPECT_EQ(merged.ranks(), (std::vector<std::int64_t>{3, 3, 2}));
  std::vector<Rational> increasing{Q("1"), Q("2")};
  std::vector<std::int64_t> ones{1, 1};
  EXPECT_EQ(error_of([&] { coalesce_blocks(increasing, ones); }),
            Errc::kSlopesNotStrictlyDecreasing);
}

TEST(FilteredVectorSpaceTest, HNDataFromFiltration) {
  HNData a = hn_from_filtration(FilteredVectorSpace({Q("0"), Q("1")}, {3, 1}));
  EXPECT_EQ(a.slopes(), (std::vector<Rational>{Q("1"), Q("0")}));
  EXPECT_EQ(a.ranks(), (std::vector<std::int64_t>{1, 2}));

  HNData b = hn_from_filtration(FilteredVectorSpace({Q("5")}, {4}));
  EXPECT_EQ(b.slopes(), std::vector<Rational>{Q("5")});
  EXPECT_EQ(b.ranks(), std::vector<std::int64_t>{4});

  HNData c = hn_from_filtration(
      FilteredVectorSpace({Q("0"), Q("1"), Q("2")}, {6, 3, 1}));
  EXPECT_EQ(c.slopes(), (std::vector<Rational>{Q("2"), Q("1"), Q("0")}));
  EXPECT_EQ(c.ranks(), (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(FilteredVectorSpaceTest, StrictValidation) {
  EXPECT_EQ(error_of([] { FilteredVectorSpace({Q("1"), Q("1")}, {3, 1}); }),
            Errc::kJumpsNotStrictlyIncreasing);
  EXPECT_EQ(error_of([] { FilteredVectorSpace({Q("0"), Q("1")}, {3, 3}); }),
            Errc::kStepDimsNotStrictlyDecreasing);
  EXPECT_EQ(error_of([] { FilteredVectorSpace({Q("0"), Q("1")}, {3, 0}); }),
            Errc::kNonPositiveDimension);
  EXPECT_EQ(error_of([] { FilteredVectorSpace({Q("0"), Q("1")}, {3}); }),
            Errc::kLengthMismatch);
}

TEST(FilteredVectorSpaceTest, NegativeJumpIsAcceptedAndFlagged) {
  FilteredVectorSpace fvs({Q("-1"), Q("2")}, {2, 1});
  EXPECT_TRUE(fvs.has_negative_jump());
  EXPECT_FALSE(FilteredVectorSpace({Q("0")}, {1}).has_negative_jump());
}

// Rebuilding step_dims as suffix sums of the ranks (and jumps as the
// reversed slopes) recovers the filtration.
TEST(FilteredVectorSpaceTest, RoundTripThroughHNData) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    FilteredVectorSpace fvs = testing::random_filtration(rng, 7);
    HNData data = hn_from_filtration(fvs);
    std::vector<Rational> jumps(data.slopes().rbegin(), data.slopes().rend());
    std::vector<std::int64_t> dims(data.length());
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < data.length(); ++k) {
      acc += data.ranks()[k];
      dims[data.length() - 1 - k] = acc;
    }
    EXPECT_EQ(jumps, fvs.jumps());
    EXPECT_EQ(dims, fvs.step_dims());
    EXPECT_EQ(acc, fvs.dimension());
  }
}

TEST(FilteredVectorSpaceTest, CanonicalFiltrationHasSemistableQuotients) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    FilteredVectorSpace fvs = testing::random_filtration(rng, 7);
    testing::CoordinateFiltration model(fvs);
    HNData data = hn_from_filtration(fvs);
    std::int64_t cumulative = 0;
    for (std::size_t i = 0; i < data.length(); ++i) {
      auto below = testing::CoordinateFiltration::span_first(cumulative);
      cumulative += data.ranks()[i];
      auto top = testing::CoordinateFiltration::span_first(cumulative);
      auto jumps = model.induced_jumps(top, below);
      ASSERT_EQ(jumps.size(), 1u);
      EXPECT_EQ(jumps[0], data.slopes()[i]);
      EXPECT_EQ(model.induced_slope(top, below), data.slopes()[i]);
    }
    // No filtration step beats the top one.
    Rational top_slope = model.induced_slope(model.step(model.steps() - 1), {});
    for (std::size_t j = 0; j < model.steps(); ++j) {
      EXPECT_LE(model.induced_slope(model.step(j), {}), top_slope);
    }
    EXPECT_EQ(top_slope, data.slopes().front());
  }
}

TEST(SplitP1BundleTest, SlopesAreDegreesInDecreasingOrder) {
  HNData a = hn_from_p1_bundle(SplitP1Bundle({1, 3}, {2, 1}));
  EXPECT_EQ(a.slopes(), (std::vector<Rational>{Q("3"), Q("1")}));
  EXPECT_EQ(a.ranks(), (std::vector<std::int64_t>{1, 2}));

  HNData b = hn_from_p1_bundle(SplitP1Bundle({0}, {4}));
  EXPECT_EQ(b.slopes(), std::vector<Rational>{Q("0")});
  EXPECT_EQ(b.ranks(), std::vector<std::int64_t>{4});

  HNData c = hn_from_p1_bundle(SplitP1Bundle({-2, 0, 5}, {1, 1, 1}));
  EXPECT_EQ(c.slopes(), (std::vector<Rational>{Q("5"), Q("0"), Q("-2")}));
}

TEST(SplitP1BundleTest, Validation) {
  EXPECT_EQ(error_of([] { SplitP1Bundle({3, 1}, {1, 1}); }),
            Errc::kDegreesNotStrictlyIncreasing);
  EXPECT_EQ(error_of([] { SplitP1Bundle({1, 3}, {1, 0}); }),
            Errc::kNonPositiveMultiplicity);
  EXPECT_EQ(error_of([] { SplitP1Bundle({}, {}); }), Errc::kEmptyData);
}

TEST(SplitP1BundleTest, OutputIsDecreasingPermutationOfDegrees) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> len(1, 6), deg(-20, 20), mult(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::int64_t> degs;
    int l = len(rng);
    while (static_cast<int>(degs.size()) < l) degs.insert(deg(rng));
    std::vector<std::int64_t> degrees(degs.begin(), degs.end()), mults;
    std::int64_t total = 0;
    for (int i = 0; i < l; ++i) {
      mults.push_back(mult(rng));
      total += mults.back();
    }
    HNData data = hn_from_p1_bundle(SplitP1Bundle(degrees, mults));
    std::vector<Rational> expected;
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
      expected.emplace_back(*it);
    }
    EXPECT_EQ(data.slopes(), expected);
    EXPECT_EQ(derive(data).total_rank, static_cast<long>(total));
  }
}

}  // namespace
}  // namespace hnpoly
