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

#include "hnpoly/cli.hpp"

#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hnpoly/error.hpp"
#include "hnpoly/polygon.hpp"
#include "hnpoly/probability.hpp"
#include "hnpoly/slope_grid.hpp"
#include "hnpoly/tensor.hpp"

namespace hnpoly::cli {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) {
      throw ParseError("unknown key \"" + key + "\" in " + where);
    }
  }
}

const json& require_array(const json& object, const std::string& key,
                          const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError("missing key \"" + key + "\" in " + where);
  }
  if (!it->is_array()) {
    throw ParseError("\"" + key + "\" in " + where + " must be an array");
  }
  return *it;
}

std::vector<Rational> rational_list(const json& object, const std::string& key,
                                    const std::string& where) {
  std::vector<Rational> out;
  for (const auto& item : require_array(object, key, where)) {
    if (!item.is_string()) {
      throw ParseError("\"" + key + "\" entries must be rational strings");
    }
    try {
      out.push_back(Rational::parse(item.get<std::string>()));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

std::vector<std::int64_t> integer_list(const json& object,
                                       const std::string& key,
                                       const std::string& where) {
  std::vector<std::int64_t> out;
  for (const auto& item : require_array(object, key, where)) {
    if (!item.is_number_integer()) {
      throw ParseError("\"" + key + "\" entries must be integers");
    }
    out.push_back(item.get<std::int64_t>());
  }
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].to_string();
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string optional_double(const std::optional<double>& v) {
  return v ? format_double(*v) : "n/a";
}

std::uint64_t parse_positive(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ParseError(what + " must be a positive integer, got \"" +
                     std::string(text) + "\"");
  }
  return value;
}

Rational parse_z(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw ParseError(std::string("--z: ") + e.what());
  }
}

void emit(const std::optional<std::string>& path, const std::string& content,
          std::ostream& out) {
  if (path) {
    write_file_atomic(*path, content);
  } else {
    out << content;
  }
}

}  // namespace

LoadedInput parse_input(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  reject_unknown_keys(doc, {"hn", "filtration", "p1_bundle"}, "input");
  if (doc.size() != 1) {
    throw ParseError("input must contain exactly one of hn, filtration, p1_bundle");
  }

  const auto& [kind, body] = *doc.items().begin();
  if (!body.is_object()) throw ParseError("\"" + kind + "\" must be an object");

  if (kind == "hn") {
    reject_unknown_keys(body, {"slopes", "ranks"}, "hn");
    auto slopes = rational_list(body, "slopes", "hn");
    auto ranks = integer_list(body, "ranks", "hn");
    return {kind, HNData(std::move(slopes), std::move(ranks)), {}};
  }
  if (kind == "filtration") {
    reject_unknown_keys(body, {"jumps", "step_dims"}, "filtration");
    FilteredVectorSpace fvs(rational_list(body, "jumps", "filtration"),
                            integer_list(body, "step_dims", "filtration"));
    std::vector<std::string> warnings;
    if (fvs.has_negative_jump()) {
      warnings.push_back("filtration has a negative jump value l_0 = " +
                         fvs.jumps().front().to_string());
    }
    return {kind, hn_from_filtration(fvs), std::move(warnings)};
  }
  reject_unknown_keys(body, {"degrees", "mults"}, "p1_bundle");
  SplitP1Bundle bundle(integer_list(body, "degrees", "p1_bundle"),
                       integer_list(body, "mults", "p1_bundle"));
  return {kind, hn_from_p1_bundle(bundle), {}};
}

LoadedInput load_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path.string() + ": " + std::strerror(errno));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_input(buf.str());
}

std::vector<std::uint64_t> parse_m_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    out.push_back(parse_positive(item, "--m-list entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t resolve_grid_bound(const std::optional<std::string>& flag,
                                 const char* env_value) {
  if (flag) return parse_positive(*flag, "--grid-bound");
  if (env_value && *env_value) {
    return parse_positive(env_value, "HNPOLY_GRID_BOUND");
  }
  return kDefaultGridBound;
}

std::string analyze_report(const LoadedInput& input) {
  const HNData& data = input.data;
  HNDerived d = derive(data);
  std::ostringstream out;
  for (const auto& w : input.warnings) out << "# warning: " << w << "\n";
  out << "length: " << data.length() << "\n"
      << "slopes: " << join(data.slopes()) << "\n"
      << "ranks: ";
  for (std::size_t i = 0; i < data.length(); ++i) {
    out << (i ? "," : "") << data.ranks()[i];
  }
  out << "\n"
      << "degrees: " << join(d.degrees) << "\n"
      << "total_rank: " << d.total_rank.get_str() << "\n"
      << "total_degree: " << d.total_degree << "\n"
      << "probabilities: " << join(d.probabilities) << "\n"
      << "mean: " << d.mean << "\n"
      << "variance: " << d.variance << "\n"
      << "positive_degree: " << (d.is_positive_degree ? "yes" : "no") << "\n";
  return out.str();
}

std::string prob_csv(const LoadedInput& input, const ProbOptions& options) {
  TailOptions tail_options;
  tail_options.grid_bound = options.grid_bound;
  TailTable table = tail_table(input.data, options.z, options.m_values,
                               tail_options);

  std::ostringstream out;
  for (const auto& w : input.warnings) out << "# warning: " << w << "\n";
  for (const auto& w : table.warnings) out << "# warning: " << w << "\n";
  out << "m,exact_tail,exact_tail_decimal,clt_approx,chebyshev_bound,"
         "abs_error_clt";
  if (options.mc_samples) out << ",mc_estimate";
  out << "\n";
  for (const auto& row : table.rows) {
    out << row.m << ',' << row.exact_tail << ','
        << row.exact_tail.to_decimal(20) << ',' << optional_double(row.clt_approx)
        << ',' << optional_double(row.chebyshev_bound) << ','
        << optional_double(row.abs_error_clt);
    if (options.mc_samples) {
      WalkSample s = sample_walk(input.data, row.m, *options.mc_samples,
                                 options.seed, options.z, options.grid_bound);
      out << ',' << format_double(s.tail_frequency);
    }
    out << "\n";
  }
  return out.str();
}

std::string tensor_csv(const LoadedInput& input, const TensorOptions& options) {
  std::ostringstream out;
  for (const auto& w : input.warnings) out << "# warning: " << w << "\n";
  if (auto w = positive_degree_warning(input.data)) {
    out << "# warning: " << *w << "\n";
  }
  out << "m,card_S,dim_H,dim_total,ratio,ratio_decimal,consistency\n";
  for (std::uint64_t m : options.m_values) {
    TensorReport r = tensor_report(input.data, m, options.z, options.grid_bound);
    Rational tail =
        exact_tail(distribution(input.data, m, options.grid_bound), options.z);
    out << m << ',' << r.card_S.get_str() << ',' << r.dim_H.get_str() << ','
        << r.dim_total.get_str() << ',' << r.ratio << ','
        << r.ratio.to_decimal(20) << ',' << (r.ratio == tail ? "ok" : "MISMATCH")
        << "\n";
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot write " + tmp.string() + ": " + std::strerror(errno));
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("error writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into " + path.string() + ": " +
                  ec.message());
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Harder-Narasimhan data, polygons and slope-walk tails"};
  app.require_subcommand(1);

  std::string input_path;
  std::optional<std::string> svg_path, csv_path, grid_flag;
  std::string z_text = "0";
  std::string m_list_text;
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze", "Print HN data and derived vectors");
  analyze->add_option("input", input_path, "Input JSON file")->required();

  auto* polygon = app.add_subcommand("polygon", "Emit the HN polygon as CSV/SVG");
  polygon->add_option("input", input_path, "Input JSON file")->required();
  polygon->add_option("--svg", svg_path, "Write an SVG plot to this path");
  polygon->add_option("--csv", csv_path, "Write CSV to this path instead of stdout");

  auto add_walk_options = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "Input JSON file")->required();
    cmd->add_option("--z", z_text, "Threshold z as \"p/q\" (default 0)");
    cmd->add_option("--m-list", m_list_text, "Comma-separated m values")
        ->required();
    cmd->add_option("--grid-bound", grid_flag,
                    "Maximum grid cells (default 10000000, env HNPOLY_GRID_BOUND)");
    cmd->add_option("--csv", csv_path, "Write CSV to this path instead of stdout");
  };
  auto* prob = app.add_subcommand("prob", "Exact tail Prob(Z_m >= z) with CLT and Chebyshev");
  add_walk_options(prob);
  prob->add_option("--mc", mc_samples, "Add a Monte Carlo estimate with this many samples");
  prob->add_option("--seed", seed, "Monte Carlo seed (default 1)");

  auto* tensor = app.add_subcommand("tensor", "dim H / dim V^{(x)m} ratios");
  add_walk_options(tensor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    LoadedInput input = load_input(input_path);
    if (analyze->parsed()) {
      out << analyze_report(input);
    } else if (polygon->parsed()) {
      HNPolygon poly = build_polygon(input.data);
      std::string csv = polygon_to_csv(poly);
      if (svg_path) write_file_atomic(*svg_path, polygon_to_svg(poly));
      emit(csv_path, csv, out);
    } else if (prob->parsed()) {
      ProbOptions options;
      options.z = parse_z(z_text);
      options.m_values = parse_m_list(m_list_text);
      options.grid_bound =
          resolve_grid_bound(grid_flag, std::getenv("HNPOLY_GRID_BOUND"));
      if (mc_samples && *mc_samples == 0) throw ParseError("--mc must be positive");
      options.mc_samples = mc_samples;
      options.seed = seed;
      emit(csv_path, prob_csv(input, options), out);
    } else if (tensor->parsed()) {
      TensorOptions options;
      options.z = parse_z(z_text);
      options.m_values = parse_m_list(m_list_text);
      options.grid_bound =
          resolve_grid_bound(grid_flag, std::getenv("HNPOLY_GRID_BOUND"));
      emit(csv_path, tensor_csv(input, options), out);
    }
  } catch (const IoError& e) {
    err << "hnpoly: io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "hnpoly: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    if (is_validation_error(e.code())) {
      err << "hnpoly: validation error: " << e.what() << "\n";
      return kExitValidation;
    }
    err << "hnpoly: " << e.what() << "\n";
    return e.code() == Errc::kScaledRangeOverflow ? kExitRange : kExitUsage;
  }
  return kExitOk;
}

}  // namespace hnpoly::cli
