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

#include "hnpoly/tensor.hpp"

#include <string>

#include "hnpoly/error.hpp"
#include "hnpoly/probability.hpp"

namespace hnpoly {
namespace {

void check_entries(const HNData& data, const TupleIndex& a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 1 || a[j] > data.length()) {
      throw Error(Errc::kIndexOutOfRange,
                  "entry " + std::to_string(j + 1) + " is " +
                      std::to_string(a[j]) + ", expected 1.." +
                      std::to_string(data.length()));
    }
  }
}

}  // namespace

Rational weight(const HNData& data, const TupleIndex& a) {
  check_entries(data, a);
  Rational sum;
  for (std::size_t i : a.entries()) sum += data.slopes()[i - 1];
  return sum;
}

BigInt tuple_dimension(const HNData& data, const TupleIndex& a) {
  check_entries(data, a);
  BigInt prod = 1;
  for (std::size_t i : a.entries()) {
    mpz_mul_ui(prod.get_mpz_t(), prod.get_mpz_t(),
               static_cast<unsigned long>(data.ranks()[i - 1]));
  }
  return prod;
}

bool dominates(const TupleIndex& a, const TupleIndex& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kLengthMismatch,
                "tuples of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return false;
  }
  return true;
}

bool membership(const HNData& data, const Rational& z, const TupleIndex& a) {
  return weight(data, a) >= z;
}

BigInt count_S(const HNData& data, std::uint64_t m, const Rational& z,
               std::uint64_t grid_bound) {
  SlopeGrid grid = make_slope_grid(data);
  grid_cells(grid, m, grid_bound);
  std::vector<std::uint64_t> unit(data.length(), 1);
  SlopeSumDistribution counts;
  counts.m = m;
  counts.scale = grid.scale;
  counts.offset = grid.base * BigInt(std::to_string(m));
  counts.weighted_counts = power_convolution(grid.steps, unit, m, grid_bound);
  return tail_weight(counts, z);
}

BigInt dim_H(const HNData& data, std::uint64_t m, const Rational& z,
             std::uint64_t grid_bound) {
  return tail_weight(distribution(data, m, grid_bound), z);
}

TensorReport tensor_report(const HNData& data, std::uint64_t m,
                           const Rational& z, std::uint64_t grid_bound) {
  SlopeSumDistribution dist = distribution(data, m, grid_bound);
  TensorReport report;
  report.m = m;
  report.z = z;
  report.card_S = count_S(data, m, z, grid_bound);
  report.dim_H = tail_weight(dist, z);
  report.dim_total = dist.denominator;
  report.ratio = Rational(report.dim_H, report.dim_total);
  return report;
}

OrderedTuples::OrderedTuples(const HNData& data, std::uint64_t m,
                             std::uint64_t enumeration_bound,
                             std::uint64_t grid_bound)
    : m_(m) {
  if (m == 0) throw Error(Errc::kInvalidArgument, "m must be positive");
  BigInt size;
  mpz_ui_pow_ui(size.get_mpz_t(), data.length(), m);
  if (m > enumeration_bound || size > BigInt(std::to_string(enumeration_bound))) {
    throw Error(Errc::kEnumerationBoundExceeded,
                std::to_string(data.length()) + "^" + std::to_string(m) +
                    " tuples exceed the bound " +
                    std::to_string(enumeration_bound));
  }
  SlopeGrid grid = make_slope_grid(data);
  steps_ = grid.steps;
  const std::uint64_t span = static_cast<std::uint64_t>(grid.span());
  grid_cells(grid, m, grid_bound);
  if (span != 0 && (m + 1) * (m * span + 1) / 2 > grid_bound) {
    throw Error(Errc::kScaledRangeOverflow,
                "reachability table exceeds the grid bound");
  }

  reach_.resize(m_ + 1);
  reach_[0].assign(1, 1);
  for (std::size_t k = 1; k <= m_; ++k) {
    reach_[k].assign(k * span + 1, 0);
    for (std::size_t t = 0; t < reach_[k - 1].size(); ++t) {
      if (!reach_[k - 1][t]) continue;
      for (auto s : steps_) reach_[k][t + static_cast<std::size_t>(s)] = 1;
    }
  }
  level_ = static_cast<std::int64_t>(m_ * span);
  choice_.assign(m_, 0);
  remaining_.assign(m_ + 1, 0);
}

bool OrderedTuples::reachable(std::size_t positions, std::int64_t sum) const {
  if (sum < 0) return false;
  const auto& row = reach_[positions];
  return static_cast<std::size_t>(sum) < row.size() &&
         row[static_cast<std::size_t>(sum)];
}

// Greedily completes positions [position, m) with the lexicographically
// smallest feasible choices. Requires remaining_[position] to be reachable.
bool OrderedTuples::fill_from(std::size_t position) {
  for (std::size_t j = position; j < m_; ++j) {
    bool placed = false;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      std::int64_t rest = remaining_[j] - steps_[i];
      if (reachable(m_ - j - 1, rest)) {
        choice_[j] = i;
        remaining_[j + 1] = rest;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

bool OrderedTuples::seek_level() {
  for (; level_ >= 0; --level_) {
    if (reachable(m_, level_)) {
      remaining_[0] = level_;
      return fill_from(0);
    }
  }
  return false;
}

std::optional<TupleIndex> OrderedTuples::next() {
  if (done_) return std::nullopt;
  if (!have_current_) {
    if (!seek_level()) {
      done_ = true;
      return std::nullopt;
    }
    have_current_ = true;
  } else {
    // Advance the rightmost position that admits a larger feasible index.
    bool advanced = false;
    for (std::size_t j = m_; j-- > 0 && !advanced;) {
      for (std::size_t i = choice_[j] + 1; i < steps_.size(); ++i) {
        std::int64_t rest = remaining_[j] - steps_[i];
        if (reachable(m_ - j - 1, rest)) {
          choice_[j] = i;
          remaining_[j + 1] = rest;
          advanced = fill_from(j + 1);
          break;
        }
      }
    }
    if (!advanced) {
      --level_;
      if (!seek_level()) {
        done_ = true;
        return std::nullopt;
      }
    }
  }
  std::vector<std::size_t> entries(m_);
  for (std::size_t j = 0; j < m_; ++j) entries[j] = choice_[j] + 1;
  return TupleIndex(std::move(entries));
}

std::vector<TupleIndex> OrderedTuples::collect() {
  std::vector<TupleIndex> out;
  while (auto t = next()) out.push_back(std::move(*t));
  return out;
}

OrderedTuples ordered_tuples(const HNData& data, std::uint64_t m,
                             std::uint64_t enumeration_bound) {
  return OrderedTuples(data, m, enumeration_bound);
}

}  // namespace hnpoly
