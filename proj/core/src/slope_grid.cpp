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

#include <gmp.h>

#include <algorithm>
#include <limits>
#include <string>

#include "hnpoly/error.hpp"

namespace hnpoly {
namespace {

// Packed integers beyond this size would exhaust memory long before GMP
// finished; refuse them up front.
constexpr std::uint64_t kMaxPackedBits = std::uint64_t{1} << 35;

BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

// Copies bits [first_bit, first_bit + width) of a little-endian word array
// into `value`.
void extract_bits(const std::vector<std::uint64_t>& words,
                  std::uint64_t first_bit, std::uint64_t width,
                  std::vector<std::uint64_t>& scratch, BigInt& value) {
  const std::size_t n_out = (width + 63) / 64;
  scratch.assign(n_out, 0);
  for (std::size_t k = 0; k < n_out; ++k) {
    std::uint64_t bit = first_bit + 64 * k;
    std::size_t wi = bit / 64;
    unsigned sh = bit % 64;
    std::uint64_t lo = wi < words.size() ? words[wi] : 0;
    std::uint64_t hi = wi + 1 < words.size() ? words[wi + 1] : 0;
    scratch[k] = sh ? (lo >> sh) | (hi << (64 - sh)) : lo;
  }
  if (unsigned tail = width % 64; tail != 0) {
    scratch.back() &= (std::uint64_t{1} << tail) - 1;
  }
  mpz_import(value.get_mpz_t(), n_out, -1, sizeof(std::uint64_t), 0, 0,
             scratch.data());
}

}  // namespace

SlopeGrid make_slope_grid(const HNData& data) {
  SlopeGrid grid;
  grid.scale = 1;
  for (const auto& mu : data.slopes()) {
    BigInt den = mu.denominator();
    mpz_lcm(grid.scale.get_mpz_t(), grid.scale.get_mpz_t(), den.get_mpz_t());
  }
  const Rational scale(grid.scale);
  const Rational& lowest = data.slopes().back();
  grid.base = (lowest * scale).numerator();
  for (const auto& mu : data.slopes()) {
    BigInt step = ((mu - lowest) * scale).numerator();
    if (!step.fits_slong_p()) {
      throw Error(Errc::kScaledRangeOverflow,
                  "scaled slope span " + step.get_str() + " exceeds 63 bits");
    }
    grid.steps.push_back(step.get_si());
  }
  return grid;
}

std::uint64_t grid_cells(const SlopeGrid& grid, std::uint64_t m,
                         std::uint64_t grid_bound) {
  if (m == 0) throw Error(Errc::kInvalidArgument, "m must be positive");
  const auto span = static_cast<std::uint64_t>(grid.span());
  if (span != 0 &&
      m > (std::numeric_limits<std::uint64_t>::max() - 1) / span) {
    throw Error(Errc::kScaledRangeOverflow, "m * span overflows");
  }
  std::uint64_t cells = m * span + 1;
  if (cells > grid_bound) {
    throw Error(Errc::kScaledRangeOverflow,
                "grid needs " + std::to_string(cells) + " cells (m=" +
                    std::to_string(m) + ", scaled span=" +
                    std::to_string(span) + "), bound is " +
                    std::to_string(grid_bound));
  }
  return cells;
}

std::vector<BigInt> power_convolution(std::span<const std::int64_t> steps,
                                      std::span<const std::uint64_t> weights,
                                      std::uint64_t m,
                                      std::uint64_t grid_bound) {
  if (steps.empty() || steps.size() != weights.size()) {
    throw Error(Errc::kLengthMismatch, "steps and weights must match");
  }
  if (m == 0) throw Error(Errc::kInvalidArgument, "m must be positive");
  std::int64_t span = 0;
  for (auto s : steps) {
    if (s < 0) throw Error(Errc::kInvalidArgument, "negative grid step");
    span = std::max(span, s);
  }
  if (span != 0 && m > (std::numeric_limits<std::uint64_t>::max() - 1) /
                           static_cast<std::uint64_t>(span)) {
    throw Error(Errc::kScaledRangeOverflow, "m * span overflows");
  }
  const std::uint64_t cells = m * static_cast<std::uint64_t>(span) + 1;
  if (cells > grid_bound) {
    throw Error(Errc::kScaledRangeOverflow,
                "grid needs " + std::to_string(cells) + " cells, bound is " +
                    std::to_string(grid_bound));
  }

  // Every coefficient of P^k is at most (sum w)^k <= (sum w)^m.
  BigInt total = 0;
  for (auto w : weights) total += to_big(w);
  BigInt mass;
  mpz_pow_ui(mass.get_mpz_t(), total.get_mpz_t(), m);
  const std::uint64_t width = mpz_sizeinbase(mass.get_mpz_t(), 2);

  if (width != 0 && cells > kMaxPackedBits / width) {
    throw Error(Errc::kScaledRangeOverflow,
                "packed convolution needs " + std::to_string(cells) + " x " +
                    std::to_string(width) + " bits");
  }

  BigInt packed = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    BigInt term = to_big(weights[i]);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(steps[i]) * width);
    packed += term;
  }

  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), packed.get_mpz_t(), m);
  packed = 0;

  std::vector<std::uint64_t> words((mpz_sizeinbase(power.get_mpz_t(), 2) + 63) /
                                   64);
  std::size_t written = 0;
  mpz_export(words.data(), &written, -1, sizeof(std::uint64_t), 0, 0,
             power.get_mpz_t());
  words.resize(written);
  power = 0;

  std::vector<BigInt> coeffs(cells);
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t c = 0; c < cells; ++c) {
    extract_bits(words, c * width, width, scratch, coeffs[c]);
  }
  return coeffs;
}

}  // namespace hnpoly
