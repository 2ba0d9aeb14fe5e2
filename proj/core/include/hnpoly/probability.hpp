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

#ifndef HNPOLY_PROBABILITY_HPP_
#define HNPOLY_PROBABILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnpoly/hn_data.hpp"
#include "hnpoly/rational.hpp"
#include "hnpoly/slope_grid.hpp"

namespace hnpoly {

// Exact law of Z_m = Y_1 + ... + Y_m, where the Y_j are i.i.d. with
// Prob(Y = mu_i) = r_i / r.
//
// Sums are kept on the integer grid s = Z_m * scale. Masses are stored as
// integer weights (sums of prod_j r_{a_j}) over the common denominator r^m.
struct SlopeSumDistribution {
  std::uint64_t m = 0;
  BigInt scale;                        // lcm of slope denominators
  BigInt offset;                       // m * mu_l * scale, the smallest sum
  std::vector<BigInt> weighted_counts; // index s - offset
  BigInt denominator;                  // r^m

  // Value of Z_m at a grid index.
  Rational value_at(std::size_t index) const;
  Rational probability_at(std::size_t index) const;
  Rational min_value() const { return value_at(0); }
  Rational max_value() const { return value_at(weighted_counts.size() - 1); }
};

// Throws Error(kScaledRangeOverflow) when m * span + 1 exceeds grid_bound
// and Error(kInvalidArgument) for m == 0.
SlopeSumDistribution distribution(const HNData& data, std::uint64_t m,
                                  std::uint64_t grid_bound = kDefaultGridBound);

// Sum of weighted_counts over sums s >= z (closed threshold); the numerator
// of exact_tail.
BigInt tail_weight(const SlopeSumDistribution& dist, const Rational& z);

// Prob(Z_m >= z), exactly.
Rational exact_tail(const SlopeSumDistribution& dist, const Rational& z);

// Normal approximation 1 - Phi((z - m mu) / (sigma sqrt(m))).
// Throws Error(kZeroVariance) for single-block data.
double clt_tail(const HNData& data, std::uint64_t m, const Rational& z);

// One-sided Chebyshev lower bound 1 - m sigma^2 / (m mu - z)^2 on
// Prob(Z_m >= z), clamped to [0, 1]. Throws Error(kZeroVariance) for
// single-block data and Error(kBoundNotApplicable) when z >= m mu.
Rational chebyshev_tail_bound_exact(const HNData& data, std::uint64_t m,
                                    const Rational& z);
double chebyshev_tail_bound(const HNData& data, std::uint64_t m,
                            const Rational& z);

// Warning text for data without positive degree, for which the tail need
// not tend to 1.
std::optional<std::string> positive_degree_warning(const HNData& data);

struct TailReport {
  std::uint64_t m = 0;
  Rational z;
  Rational exact_tail;
  std::optional<double> clt_approx;       // absent when the variance is 0
  std::optional<double> chebyshev_bound;  // absent when not applicable
  std::optional<double> abs_error_clt;    // |exact_tail - clt_approx|
};

struct TailTable {
  std::vector<TailReport> rows;  // in the order of the requested m values
  std::vector<std::string> warnings;
};

struct TailOptions {
  std::uint64_t grid_bound = kDefaultGridBound;
  // Evaluate distinct m values on worker threads. Results are identical to
  // sequential evaluation.
  bool parallel = true;
};

TailTable tail_table(const HNData& data, const Rational& z,
                     std::span<const std::uint64_t> m_values,
                     const TailOptions& options = {});

struct WalkSample {
  std::uint64_t n_samples = 0;
  double tail_frequency = 0.0;  // fraction of samples with Z_m >= z
  double mean = 0.0;            // empirical mean of Z_m / m
};

// Number of independent sample streams; fixed so that results do not depend
// on the machine's thread count.
inline constexpr unsigned kWalkStreams = 8;

// Monte Carlo estimate from n_samples independent walks of length m.
//
// Stream k in [0, kWalkStreams) draws its share of the samples from
// std::mt19937_64 seeded with std::seed_seq{seed_lo32, seed_hi32, k}. Each
// step draws u uniformly from [0, r) by rejection and picks the first block
// i with r_1 + ... + r_i > u, which is inverse-CDF sampling on the exact
// cumulative probabilities. Deterministic for a given seed.
WalkSample sample_walk(const HNData& data, std::uint64_t m,
                       std::uint64_t n_samples, std::uint64_t seed,
                       const Rational& z = Rational(0),
                       std::uint64_t grid_bound = kDefaultGridBound);

}  // namespace hnpoly

#endif  // HNPOLY_PROBABILITY_HPP_
