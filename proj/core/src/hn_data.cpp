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

#include <string>
#include <utility>

#include "hnpoly/error.hpp"

namespace hnpoly {
namespace {

template <typename A, typename B>
void require_same_nonempty(const A& a, const B& b, const char* what) {
  if (a.empty() || b.empty()) {
    throw Error(Errc::kEmptyData, std::string(what) + " must be nonempty");
  }
  if (a.size() != b.size()) {
    throw Error(Errc::kLengthMismatch,
                std::string(what) + ": " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + " entries");
  }
}

}  // namespace

HNData::HNData(std::vector<Rational> slopes, std::vector<std::int64_t> ranks)
    : slopes_(std::move(slopes)), ranks_(std::move(ranks)) {
  require_same_nonempty(slopes_, ranks_, "slopes and ranks");
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] < 1) {
      throw Error(Errc::kNonPositiveRank,
                  "rank " + std::to_string(i + 1) + " is " +
                      std::to_string(ranks_[i]));
    }
  }
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (!(slopes_[i - 1] > slopes_[i])) {
      throw Error(Errc::kSlopesNotStrictlyDecreasing,
                  "slope " + std::to_string(i) + " (" +
                      slopes_[i - 1].to_string() + ") <= slope " +
                      std::to_string(i + 1) + " (" + slopes_[i].to_string() +
                      ")");
    }
  }
}

HNData hn_data_new(std::vector<Rational> slopes,
                   std::vector<std::int64_t> ranks) {
  return HNData(std::move(slopes), std::move(ranks));
}

HNData coalesce_blocks(std::span<const Rational> slopes,
                       std::span<const std::int64_t> ranks) {
  require_same_nonempty(slopes, ranks, "slopes and ranks");
  std::vector<Rational> merged_slopes;
  std::vector<std::int64_t> merged_ranks;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (ranks[i] < 1) {
      throw Error(Errc::kNonPositiveRank,
                  "rank " + std::to_string(i + 1) + " is " +
                      std::to_string(ranks[i]));
    }
    if (!merged_slopes.empty() && merged_slopes.back() == slopes[i]) {
      merged_ranks.back() += ranks[i];
    } else {
      merged_slopes.push_back(slopes[i]);
      merged_ranks.push_back(ranks[i]);
    }
  }
  return HNData(std::move(merged_slopes), std::move(merged_ranks));
}

HNDerived derive(const HNData& data) {
  HNDerived out;
  const auto& slopes = data.slopes();
  const auto& ranks = data.ranks();

  out.total_rank = 0;
  for (std::int64_t r : ranks) out.total_rank += BigInt(std::to_string(r));

  Rational second_moment;
  for (std::size_t i = 0; i < data.length(); ++i) {
    Rational rank(ranks[i]);
    Rational degree = rank * slopes[i];
    Rational p = rank / Rational(out.total_rank);
    out.total_degree += degree;
    out.mean += slopes[i] * p;
    second_moment += slopes[i] * slopes[i] * p;
    out.degrees.push_back(std::move(degree));
    out.probabilities.push_back(std::move(p));
  }
  out.variance = second_moment - out.mean * out.mean;
  out.is_positive_degree = out.total_degree.sign() > 0;
  return out;
}

FilteredVectorSpace::FilteredVectorSpace(std::vector<Rational> jumps,
                                         std::vector<std::int64_t> step_dims)
    : jumps_(std::move(jumps)), step_dims_(std::move(step_dims)) {
  require_same_nonempty(jumps_, step_dims_, "jumps and step_dims");
  for (std::size_t j = 1; j < jumps_.size(); ++j) {
    if (!(jumps_[j - 1] < jumps_[j])) {
      throw Error(Errc::kJumpsNotStrictlyIncreasing,
                  "jump " + std::to_string(j) + " (" + jumps_[j].to_string() +
                      ") <= jump " + std::to_string(j - 1) + " (" +
                      jumps_[j - 1].to_string() + ")");
    }
  }
  if (step_dims_.back() < 1) {
    throw Error(Errc::kNonPositiveDimension,
                "last filtration step has dimension " +
                    std::to_string(step_dims_.back()));
  }
  for (std::size_t j = 1; j < step_dims_.size(); ++j) {
    if (!(step_dims_[j - 1] > step_dims_[j])) {
      throw Error(Errc::kStepDimsNotStrictlyDecreasing,
                  "dim F^{l_" + std::to_string(j) + "} = " +
                      std::to_string(step_dims_[j]) + " is not below dim F^{l_" +
                      std::to_string(j - 1) + "} = " +
                      std::to_string(step_dims_[j - 1]));
    }
  }
}

HNData hn_from_filtration(const FilteredVectorSpace& fvs) {
  const auto& jumps = fvs.jumps();
  const auto& dims = fvs.step_dims();
  std::vector<Rational> slopes;
  std::vector<std::int64_t> ranks;
  slopes.reserve(jumps.size());
  ranks.reserve(jumps.size());
  for (std::size_t k = jumps.size(); k-- > 0;) {
    std::int64_t below = k + 1 < dims.size() ? dims[k + 1] : 0;
    slopes.push_back(jumps[k]);
    ranks.push_back(dims[k] - below);
  }
  return HNData(std::move(slopes), std::move(ranks));
}

SplitP1Bundle::SplitP1Bundle(std::vector<std::int64_t> degrees,
                             std::vector<std::int64_t> multiplicities)
    : degrees_(std::move(degrees)), multiplicities_(std::move(multiplicities)) {
  require_same_nonempty(degrees_, multiplicities_, "degrees and multiplicities");
  for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
    if (multiplicities_[i] < 1) {
      throw Error(Errc::kNonPositiveMultiplicity,
                  "multiplicity " + std::to_string(i + 1) + " is " +
                      std::to_string(multiplicities_[i]));
    }
  }
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (!(degrees_[i - 1] < degrees_[i])) {
      throw Error(Errc::kDegreesNotStrictlyIncreasing,
                  "b_" + std::to_string(i + 1) + " = " +
                      std::to_string(degrees_[i]) + " <= b_" +
                      std::to_string(i) + " = " +
                      std::to_string(degrees_[i - 1]));
    }
  }
}

HNData hn_from_p1_bundle(const SplitP1Bundle& bundle) {
  const auto& degrees = bundle.degrees();
  const auto& mults = bundle.multiplicities();
  std::vector<Rational> slopes;
  std::vector<std::int64_t> ranks;
  for (std::size_t i = degrees.size(); i-- > 0;) {
    slopes.emplace_back(degrees[i]);
    ranks.push_back(mults[i]);
  }
  return HNData(std::move(slopes), std::move(ranks));
}

}  // namespace hnpoly
