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

#include "hnpoly/probability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "hnpoly/error.hpp"
#include "hnpoly/normal.hpp"

namespace hnpoly {
namespace {

BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

std::vector<std::uint64_t> rank_weights(const HNData& data) {
  std::vector<std::uint64_t> out;
  for (auto r : data.ranks()) out.push_back(static_cast<std::uint64_t>(r));
  return out;
}

// Grid index of the first sum >= z, clamped to [0, cells].
std::size_t threshold_index(const SlopeSumDistribution& dist,
                            const Rational& z) {
  BigInt t = (z * Rational(dist.scale)).ceil() - dist.offset;
  if (t <= 0) return 0;
  if (t >= to_big(dist.weighted_counts.size())) {
    return dist.weighted_counts.size();
  }
  return static_cast<std::size_t>(t.get_ui());
}

// Uniform draw from [0, bound) without modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t reject_below = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < reject_below);
  return x % bound;
}

}  // namespace

Rational SlopeSumDistribution::value_at(std::size_t index) const {
  return Rational(offset + to_big(index), scale);
}

Rational SlopeSumDistribution::probability_at(std::size_t index) const {
  return Rational(weighted_counts.at(index), denominator);
}

SlopeSumDistribution distribution(const HNData& data, std::uint64_t m,
                                  std::uint64_t grid_bound) {
  SlopeGrid grid = make_slope_grid(data);
  grid_cells(grid, m, grid_bound);

  SlopeSumDistribution dist;
  dist.m = m;
  dist.scale = grid.scale;
  dist.offset = grid.base * to_big(m);
  auto weights = rank_weights(data);
  dist.weighted_counts = power_convolution(grid.steps, weights, m, grid_bound);
  BigInt r = derive(data).total_rank;
  mpz_pow_ui(dist.denominator.get_mpz_t(), r.get_mpz_t(), m);
  return dist;
}

BigInt tail_weight(const SlopeSumDistribution& dist, const Rational& z) {
  BigInt sum = 0;
  for (std::size_t i = threshold_index(dist, z);
       i < dist.weighted_counts.size(); ++i) {
    sum += dist.weighted_counts[i];
  }
  return sum;
}

Rational exact_tail(const SlopeSumDistribution& dist, const Rational& z) {
  return Rational(tail_weight(dist, z), dist.denominator);
}

double clt_tail(const HNData& data, std::uint64_t m, const Rational& z) {
  if (m == 0) throw Error(Errc::kInvalidArgument, "m must be positive");
  HNDerived d = derive(data);
  if (d.variance.sign() == 0) {
    throw Error(Errc::kZeroVariance,
                "single-block data has no normal approximation");
  }
  Rational mm(to_big(m));
  Rational centered = z - mm * d.mean;
  double x = centered.to_double() /
             (std::sqrt(d.variance.to_double()) * std::sqrt(mm.to_double()));
  return normal_sf(x);
}

Rational chebyshev_tail_bound_exact(const HNData& data, std::uint64_t m,
                                    const Rational& z) {
  if (m == 0) throw Error(Errc::kInvalidArgument, "m must be positive");
  HNDerived d = derive(data);
  if (d.variance.sign() == 0) {
    throw Error(Errc::kZeroVariance, "single-block data has zero variance");
  }
  Rational mm(to_big(m));
  Rational gap = mm * d.mean - z;
  if (gap.sign() <= 0) {
    throw Error(Errc::kBoundNotApplicable,
                "z = " + z.to_string() + " is not below m*mu = " +
                    (mm * d.mean).to_string());
  }
  Rational bound = Rational(1) - d.variance * mm / (gap * gap);
  if (bound.sign() < 0) return Rational(0);
  return bound;
}

double chebyshev_tail_bound(const HNData& data, std::uint64_t m,
                            const Rational& z) {
  return chebyshev_tail_bound_exact(data, m, z).to_double();
}

std::optional<std::string> positive_degree_warning(const HNData& data) {
  HNDerived d = derive(data);
  if (d.is_positive_degree) return std::nullopt;
  return "data does not have positive degree (total degree " +
         d.total_degree.to_string() + "); Prob(Z_m >= z) need not tend to 1";
}

TailTable tail_table(const HNData& data, const Rational& z,
                     std::span<const std::uint64_t> m_values,
                     const TailOptions& options) {
  TailTable table;
  if (auto w = positive_degree_warning(data)) table.warnings.push_back(*w);
  const bool single_block = data.length() == 1;

  auto evaluate = [&](std::uint64_t m) {
    TailReport row;
    row.m = m;
    row.z = z;
    row.exact_tail = exact_tail(distribution(data, m, options.grid_bound), z);
    if (!single_block) {
      row.clt_approx = clt_tail(data, m, z);
      row.abs_error_clt = std::abs(row.exact_tail.to_double() - *row.clt_approx);
      try {
        row.chebyshev_bound = chebyshev_tail_bound(data, m, z);
      } catch (const Error& e) {
        if (e.code() != Errc::kBoundNotApplicable) throw;
      }
    }
    return row;
  };

  table.rows.resize(m_values.size());
  unsigned workers = options.parallel
      ? std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(m_values.size()))
      : 1u;
  if (workers <= 1) {
    for (std::size_t i = 0; i < m_values.size(); ++i) {
      table.rows[i] = evaluate(m_values[i]);
    }
    return table;
  }

  // Largest m first keeps the slowest job from starting last.
  std::vector<std::size_t> order(m_values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return m_values[a] > m_values[b];
  });

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < order.size();) {
        try {
          table.rows[order[k]] = evaluate(m_values[order[k]]);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return table;
}

WalkSample sample_walk(const HNData& data, std::uint64_t m,
                       std::uint64_t n_samples, std::uint64_t seed,
                       const Rational& z, std::uint64_t grid_bound) {
  if (n_samples == 0) {
    throw Error(Errc::kInvalidArgument, "n_samples must be positive");
  }
  SlopeGrid grid = make_slope_grid(data);
  grid_cells(grid, m, grid_bound);

  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;
  for (auto r : data.ranks()) {
    if (total > std::numeric_limits<std::uint64_t>::max() -
                    static_cast<std::uint64_t>(r)) {
      throw Error(Errc::kInvalidArgument, "total rank exceeds 64 bits");
    }
    total += static_cast<std::uint64_t>(r);
    cumulative.push_back(total);
  }

  // Z_m >= z  <=>  shifted sum >= ceil(z * scale) - m * base.
  const std::uint64_t max_sum = m * static_cast<std::uint64_t>(grid.span());
  BigInt threshold_big = (z * Rational(grid.scale)).ceil() - grid.base * to_big(m);
  std::uint64_t threshold = 0;
  bool never = false;
  if (threshold_big > to_big(max_sum)) {
    never = true;
  } else if (threshold_big > 0) {
    threshold = threshold_big.get_ui();
  }

  struct StreamResult {
    std::uint64_t hits = 0;
    BigInt sum = 0;
  };
  std::vector<StreamResult> results(kWalkStreams);
  const std::uint32_t seed_lo = static_cast<std::uint32_t>(seed);
  const std::uint32_t seed_hi = static_cast<std::uint32_t>(seed >> 32);

  auto run_stream = [&](unsigned k) {
    std::uint64_t count = n_samples / kWalkStreams +
                          (k < n_samples % kWalkStreams ? 1 : 0);
    std::seed_seq seq{seed_lo, seed_hi, static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    StreamResult& out = results[k];
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t s = 0;
      for (std::uint64_t j = 0; j < m; ++j) {
        std::uint64_t u = uniform_below(rng, total);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        s += static_cast<std::uint64_t>(grid.steps[it - cumulative.begin()]);
      }
      if (!never && s >= threshold) ++out.hits;
      mpz_add_ui(out.sum.get_mpz_t(), out.sum.get_mpz_t(), s);
    }
  };

  const std::uint64_t work = n_samples * std::max<std::uint64_t>(m, 1);
  if (work < 100'000) {
    for (unsigned k = 0; k < kWalkStreams; ++k) run_stream(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < kWalkStreams; ++k) pool.emplace_back(run_stream, k);
    for (auto& t : pool) t.join();
  }

  std::uint64_t hits = 0;
  BigInt sum = 0;
  for (const auto& r : results) {
    hits += r.hits;
    sum += r.sum;
  }
  WalkSample sample;
  sample.n_samples = n_samples;
  sample.tail_frequency =
      static_cast<double>(hits) / static_cast<double>(n_samples);
  // mean of Z_m / m = (m * base + shifted_mean) / (m * scale)
  Rational nm = Rational(to_big(n_samples)) * Rational(to_big(m));
  Rational mean = (Rational(grid.base) + Rational(sum) / nm) / Rational(grid.scale);
  sample.mean = mean.to_double();
  return sample;
}

}  // namespace hnpoly
