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

#include "hnpoly/polygon.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hnpoly {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 0.1;

std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

HNPolygon build_polygon(const HNData& data) {
  HNPolygon poly;
  poly.cumulative_points.push_back({BigInt(0), Rational(0)});
  BigInt rank_sum = 0;
  Rational degree_sum;
  for (std::size_t i = 0; i < data.length(); ++i) {
    BigInt rank(std::to_string(data.ranks()[i]));
    Rational degree = Rational(rank) * data.slopes()[i];
    rank_sum += rank;
    degree_sum += degree;
    poly.cumulative_points.push_back({rank_sum, degree_sum});
    poly.vertex_set.push_back({rank, degree});
  }
  return poly;
}

std::vector<Rational> segment_slopes(const HNPolygon& poly) {
  std::vector<Rational> slopes;
  const auto& pts = poly.cumulative_points;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    slopes.push_back((pts[i].degree - pts[i - 1].degree) /
                     Rational(BigInt(pts[i].rank - pts[i - 1].rank)));
  }
  return slopes;
}

bool is_strictly_concave(const HNPolygon& poly) {
  const auto& pts = poly.cumulative_points;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].rank > pts[i - 1].rank)) return false;
  }
  auto slopes = segment_slopes(poly);
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (!(slopes[i - 1] > slopes[i])) return false;
  }
  return true;
}

std::string polygon_to_csv(const HNPolygon& poly) {
  std::string out = "R,D\n";
  for (const auto& p : poly.cumulative_points) {
    out += p.rank.get_str() + "," + p.degree.to_string() + "\n";
  }
  out += "\nr_i,d_i\n";
  for (const auto& p : poly.vertex_set) {
    out += p.rank.get_str() + "," + p.degree.to_string() + "\n";
  }
  return out;
}

std::string polygon_to_svg(const HNPolygon& poly) {
  const auto& pts = poly.cumulative_points;
  double max_rank = pts.back().rank.get_d();
  double min_deg = 0.0, max_deg = 0.0;
  for (const auto& p : pts) {
    min_deg = std::min(min_deg, p.degree.to_double());
    max_deg = std::max(max_deg, p.degree.to_double());
  }
  if (max_rank <= 0.0) max_rank = 1.0;
  if (max_deg - min_deg <= 0.0) max_deg = min_deg + 1.0;

  const double left = kWidth * kMargin, right = kWidth * (1.0 - kMargin);
  const double top = kHeight * kMargin, bottom = kHeight * (1.0 - kMargin);
  auto to_x = [&](double r) { return left + (right - left) * r / max_rank; };
  auto to_y = [&](double d) {
    return bottom - (bottom - top) * (d - min_deg) / (max_deg - min_deg);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
      << " " << kHeight << "\">\n"
      << "  <title>Harder-Narasimhan polygon</title>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" fill=\"white\"/>\n";

  // Axes through the origin of the (R, D) plane.
  svg << "  <line class=\"axis\" x1=\"" << fmt_coord(left) << "\" y1=\""
      << fmt_coord(to_y(0.0)) << "\" x2=\"" << fmt_coord(right) << "\" y2=\""
      << fmt_coord(to_y(0.0)) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n"
      << "  <line class=\"axis\" x1=\"" << fmt_coord(left) << "\" y1=\""
      << fmt_coord(top) << "\" x2=\"" << fmt_coord(left) << "\" y2=\""
      << fmt_coord(bottom) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) svg << ' ';
    svg << fmt_coord(to_x(pts[i].rank.get_d())) << ','
        << fmt_coord(to_y(pts[i].degree.to_double()));
  }
  svg << "\"/>\n";

  for (const auto& p : pts) {
    double x = to_x(p.rank.get_d()), y = to_y(p.degree.to_double());
    svg << "  <circle cx=\"" << fmt_coord(x) << "\" cy=\"" << fmt_coord(y)
        << "\" r=\"4\" fill=\"#c0392b\"/>\n"
        << "  <text x=\"" << fmt_coord(x + 6.0) << "\" y=\""
        << fmt_coord(y - 6.0)
        << "\" font-family=\"monospace\" font-size=\"12\">("
        << xml_escape(p.rank.get_str()) << ", "
        << xml_escape(p.degree.to_string()) << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hnpoly
