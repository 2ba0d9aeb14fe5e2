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

#ifndef HNPOLY_HN_DATA_HPP_
#define HNPOLY_HN_DATA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hnpoly/rational.hpp"

namespace hnpoly {

// Harder-Narasimhan data HN(mu, r): strictly decreasing rational slopes
// mu_1 > ... > mu_l paired with positive integer ranks r_1, ..., r_l.
//
// Immutable once constructed; the constructor is the only validation point.
class HNData {
 public:
  // Throws Error with kEmptyData, kLengthMismatch,
  // kSlopesNotStrictlyDecreasing or kNonPositiveRank.
  HNData(std::vector<Rational> slopes, std::vector<std::int64_t> ranks);

  const std::vector<Rational>& slopes() const { return slopes_; }
  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  std::size_t length() const { return slopes_.size(); }

  friend bool operator==(const HNData&, const HNData&) = default;

 private:
  std::vector<Rational> slopes_;
  std::vector<std::int64_t> ranks_;
};

HNData hn_data_new(std::vector<Rational> slopes,
                   std::vector<std::int64_t> ranks);

// Builds HN data from blocks whose slopes are only non-increasing, merging
// adjacent equal-slope blocks by adding their ranks.
HNData coalesce_blocks(std::span<const Rational> slopes,
                       std::span<const std::int64_t> ranks);

struct HNDerived {
  std::vector<Rational> degrees;        // d_i = r_i mu_i
  BigInt total_rank;                    // r = sum r_i
  Rational total_degree;                // |d| = sum d_i
  std::vector<Rational> probabilities;  // p_i = r_i / r
  Rational mean;                        // sum mu_i p_i = |d| / r
  Rational variance;                    // sum mu_i^2 p_i - mean^2
  bool is_positive_degree = false;      // |d| > 0
};

HNDerived derive(const HNData& data);

// A filtration V = F^{l_0} V ⊋ F^{l_1} V ⊋ ... ⊋ F^{l_n} V ⊋ 0 recorded by
// its jump values l_0 < ... < l_n and the dimensions dim F^{l_j} V.
class FilteredVectorSpace {
 public:
  // Throws Error with kEmptyData, kLengthMismatch,
  // kJumpsNotStrictlyIncreasing, kStepDimsNotStrictlyDecreasing or
  // kNonPositiveDimension.
  FilteredVectorSpace(std::vector<Rational> jumps,
                      std::vector<std::int64_t> step_dims);

  const std::vector<Rational>& jumps() const { return jumps_; }
  const std::vector<std::int64_t>& step_dims() const { return step_dims_; }
  std::int64_t dimension() const { return step_dims_.front(); }

  // Jumps are usually taken nonnegative; negative ones are accepted but
  // callers may want to warn.
  bool has_negative_jump() const { return jumps_.front().sign() < 0; }

 private:
  std::vector<Rational> jumps_;
  std::vector<std::int64_t> step_dims_;
};

// Canonical HN filtration of a singly filtered space: V_i = F^{l_{n+1-i}} V,
// so mu_i = l_{n+1-i} and r_i = dim F^{l_{n+1-i}} V - dim F^{l_{n+2-i}} V.
HNData hn_from_filtration(const FilteredVectorSpace& fvs);

// E = ⊕ O(b_i)^{⊕ n_i} on P^1 with b_1 < ... < b_l.
class SplitP1Bundle {
 public:
  // Throws Error with kEmptyData, kLengthMismatch,
  // kDegreesNotStrictlyIncreasing or kNonPositiveMultiplicity.
  SplitP1Bundle(std::vector<std::int64_t> degrees,
                std::vector<std::int64_t> multiplicities);

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  const std::vector<std::int64_t>& multiplicities() const {
    return multiplicities_;
  }

 private:
  std::vector<std::int64_t> degrees_;
  std::vector<std::int64_t> multiplicities_;
};

// Subquotient slopes are the b_i; they are listed in decreasing order.
HNData hn_from_p1_bundle(const SplitP1Bundle& bundle);

}  // namespace hnpoly

#endif  // HNPOLY_HN_DATA_HPP_
