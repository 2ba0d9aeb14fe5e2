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

#ifndef HNPOLY_TENSOR_HPP_
#define HNPOLY_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hnpoly/hn_data.hpp"
#include "hnpoly/rational.hpp"
#include "hnpoly/slope_grid.hpp"

namespace hnpoly {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

// A point a = (a_1, ..., a_m) of [l]^m. Entries are 1-based block indices;
// the range check against l happens where the data is known.
class TupleIndex {
 public:
  TupleIndex() = default;
  explicit TupleIndex(std::vector<std::size_t> entries)
      : entries_(std::move(entries)) {}

  const std::vector<std::size_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t operator[](std::size_t j) const { return entries_[j]; }

  friend bool operator==(const TupleIndex&, const TupleIndex&) = default;
  friend auto operator<=>(const TupleIndex&, const TupleIndex&) = default;

 private:
  std::vector<std::size_t> entries_;
};

// v(a) = mu_{a_1} + ... + mu_{a_m}. Throws Error(kIndexOutOfRange).
Rational weight(const HNData& data, const TupleIndex& a);

// prod_j r_{a_j}: the dimension of the graded piece of V^{⊗m} indexed by a.
// Throws Error(kIndexOutOfRange).
BigInt tuple_dimension(const HNData& data, const TupleIndex& a);

// a ⪰ b, i.e. a_j >= b_j for every j. Throws Error(kLengthMismatch).
bool dominates(const TupleIndex& a, const TupleIndex& b);

// a ∈ S_{m,z}, i.e. v(a) >= z.
bool membership(const HNData& data, const Rational& z, const TupleIndex& a);

// #S_{m,z}: the number of tuples with v(a) >= z.
BigInt count_S(const HNData& data, std::uint64_t m, const Rational& z,
               std::uint64_t grid_bound = kDefaultGridBound);

// dim H^{#S_{m,z}} = sum over a in S_{m,z} of prod_j r_{a_j}.
BigInt dim_H(const HNData& data, std::uint64_t m, const Rational& z,
             std::uint64_t grid_bound = kDefaultGridBound);

struct TensorReport {
  std::uint64_t m = 0;
  Rational z;
  BigInt card_S;
  BigInt dim_H;
  BigInt dim_total;  // dim V^{⊗m} = r^m
  Rational ratio;    // dim_H / dim_total
};

TensorReport tensor_report(const HNData& data, std::uint64_t m,
                           const Rational& z,
                           std::uint64_t grid_bound = kDefaultGridBound);

// Lazily enumerates [l]^m in order of decreasing weight, ties broken
// lexicographically ascending. For any z, the first #S_{m,z} tuples produced
// are exactly S_{m,z}.
//
// Weight levels are visited from the top; within a level, tuples are built
// position by position choosing the smallest index whose remaining sum is
// still reachable, so every step produces a tuple without backtracking into
// dead ends. Memory is O(m^2 * span) for the reachability table.
class OrderedTuples {
 public:
  // Throws Error(kEnumerationBoundExceeded) when l^m or m exceeds
  // enumeration_bound, Error(kScaledRangeOverflow) when the reachability
  // table exceeds grid_bound cells.
  OrderedTuples(const HNData& data, std::uint64_t m,
                std::uint64_t enumeration_bound = kDefaultEnumerationBound,
                std::uint64_t grid_bound = kDefaultGridBound);

  std::optional<TupleIndex> next();

  // Remaining tuples, materialized.
  std::vector<TupleIndex> collect();

 private:
  bool reachable(std::size_t positions, std::int64_t sum) const;
  bool fill_from(std::size_t position);
  bool seek_level();

  std::vector<std::int64_t> steps_;
  std::size_t m_;
  // reach_[k][t]: some k-tuple has shifted weight t.
  std::vector<std::vector<char>> reach_;
  std::int64_t level_;
  std::vector<std::size_t> choice_;    // 0-based block index per position
  std::vector<std::int64_t> remaining_; // level minus prefix weight
  bool have_current_ = false;
  bool done_ = false;
};

OrderedTuples ordered_tuples(
    const HNData& data, std::uint64_t m,
    std::uint64_t enumeration_bound = kDefaultEnumerationBound);

}  // namespace hnpoly

#endif  // HNPOLY_TENSOR_HPP_
