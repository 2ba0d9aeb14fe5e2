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

#ifndef HNPOLY_POLYGON_HPP_
#define HNPOLY_POLYGON_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hnpoly/hn_data.hpp"
#include "hnpoly/rational.hpp"

namespace hnpoly {

struct PolygonPoint {
  BigInt rank;
  Rational degree;

  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct HNPolygon {
  // (0, 0), (R_1, D_1), ..., (R_l, D_l) with R_i, D_i the partial sums of
  // ranks and degrees.
  std::vector<PolygonPoint> cumulative_points;
  // The per-block pairs (r_i, d_i) in index order.
  std::vector<PolygonPoint> vertex_set;
};

HNPolygon build_polygon(const HNData& data);

// Slopes (D_i - D_{i-1}) / (R_i - R_{i-1}) of consecutive cumulative points.
std::vector<Rational> segment_slopes(const HNPolygon& poly);

bool is_strictly_concave(const HNPolygon& poly);

// Two CSV tables separated by one blank line: header "R,D" followed by the
// cumulative points, then header "r_i,d_i" followed by the vertex set.
// Rationals are written as "p/q" (or "p" when integral); LF line endings.
std::string polygon_to_csv(const HNPolygon& poly);

// Standalone SVG 1.1 document (800x600, 10% margins) with the cumulative
// polyline and a labeled marker at every cumulative point.
std::string polygon_to_svg(const HNPolygon& poly);

}  // namespace hnpoly

#endif  // HNPOLY_POLYGON_HPP_
