// Copyright 2026 The supersinh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "supersinh/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "supersinh/errors.hpp"

namespace supersinh {

namespace {

using nlohmann::json;

Supernumber from_parsed(const json& j, unsigned n) {
  if (j.is_number()) {
    return Supernumber::body_element(n, j.get<double>());
  }
  if (!j.is_array()) {
    throw ConfigError("supernumber literal must be a number or a list of "
                      "[mask, coefficient] pairs");
  }
  Supernumber v(n);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number()) {
      throw ConfigError("supernumber literal entries must be "
                        "[integer mask, coefficient]");
    }
    const auto mask = pair[0].get<long long>();
    if (mask < 0 || mask >= (1LL << n)) {
      throw ConfigError("generator mask " + std::to_string(mask) +
                        " does not fit a ring with " + std::to_string(n) +
                        " generators");
    }
    v += Supernumber::monomial(n, static_cast<unsigned>(mask),
                               pair[1].get<double>());
  }
  return v;
}

}  // namespace

Supernumber supernumber_from_json(const std::string& text,
                                  unsigned n_generators) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("bad supernumber literal '" + text + "': " + e.what());
  }
  return from_parsed(j, n_generators);
}

std::string supernumber_to_json(const Supernumber& v) {
  json list = json::array();
  for (unsigned long mask = 0; mask < (1UL << v.generators()); ++mask) {
    const double c = v[static_cast<unsigned>(mask)];
    if (c != 0.0) list.push_back({mask, c});
  }
  if (list.empty()) list.push_back({0, 0.0});
  return list.dump();
}

void merge_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("bad JSON in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  const auto super_literal = [](const json& v) -> std::string {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (const auto& [key, val] : j.items()) {
    try {
      if (key == "family") cfg.family = val.get<std::string>();
      else if (key == "eps") cfg.eps = val.get<double>();
      else if (key == "ring") cfg.ring = val.get<unsigned>();
      else if (key == "sigma0") cfg.sigma0 = val.get<double>();
      else if (key == "sigma1") cfg.sigma1 = val.get<double>();
      else if (key == "steps") cfg.steps = val.get<int>();
      else if (key == "alpha0") cfg.alpha0 = super_literal(val);
      else if (key == "dalpha0") cfg.dalpha0 = super_literal(val);
      else if (key == "eta0") cfg.eta0 = super_literal(val);
      else if (key == "lambda0") cfg.lambda0 = super_literal(val);
      else if (key == "f0") cfg.f0 = super_literal(val);
      else if (key == "df0") cfg.df0 = super_literal(val);
      else if (key == "C0") cfg.C0 = super_literal(val);
      else if (key == "x0") cfg.x0 = val.get<double>();
      else if (key == "x1") cfg.x1 = val.get<double>();
      else if (key == "t0") cfg.t0 = val.get<double>();
      else if (key == "t1") cfg.t1 = val.get<double>();
      else if (key == "nx") cfg.nx = val.get<int>();
      else if (key == "nt") cfg.nt = val.get<int>();
      else if (key == "tolerance") cfg.tolerance = val.get<double>();
      else if (key == "jet_order") cfg.jet_order = val.get<int>();
      else if (key == "seed") cfg.seed = val.get<std::uint64_t>();
      else if (key == "threads") cfg.threads = val.get<int>();
      else if (key == "csv") cfg.csv = val.get<std::string>();
      else if (key == "svg") cfg.svg = val.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

std::vector<std::string> coefficient_labels(const std::string& prefix,
                                            unsigned n_generators) {
  std::vector<std::string> labels;
  labels.reserve(1UL << n_generators);
  for (unsigned long mask = 0; mask < (1UL << n_generators); ++mask) {
    labels.push_back(prefix + "[" + std::to_string(mask) + "]");
  }
  return labels;
}

void append_coefficients(std::vector<double>& row, const Supernumber& v) {
  for (unsigned long mask = 0; mask < (1UL << v.generators()); ++mask) {
    row.push_back(v[static_cast<unsigned>(mask)]);
  }
}

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << std::setprecision(17);
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw ConfigError("CSV row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << "\n";
  }
  if (!out) throw ConfigError("write to " + path + " failed");
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#17becf", "#7f7f7f"};

std::string fmt_tick(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label,
                    const std::vector<SvgSeries>& series) {
  if (series.empty()) throw ConfigError("SVG plot needs at least one series");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty()) {
      throw ConfigError("SVG series '" + s.label + "' is empty or ragged");
    }
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (!(std::isfinite(xmin) && std::isfinite(ymin))) {
    throw ConfigError("SVG plot data is not finite");
  }
  if (xmax == xmin) { xmax += 0.5; xmin -= 0.5; }
  if (ymax == ymin) { ymax += 0.5; ymin -= 0.5; }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double w = 900, h = 560;
  const double ml = 80, mr = 170, mt = 50, mb = 60;
  const auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr);
  };
  const auto py = [&](double y) {
    return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb);
  };

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << std::setprecision(8);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w
      << "' height='" << h << "' viewBox='0 0 " << w << " " << h << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << w / 2 << "' y='28' text-anchor='middle' "
         "font-family='sans-serif' font-size='17'>" << title << "</text>\n";

  // axes box + ticks
  out << "<rect x='" << ml << "' y='" << mt << "' width='" << w - ml - mr
      << "' height='" << h - mt - mb
      << "' fill='none' stroke='#444' stroke-width='1'/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 5.0;
    const double yv = ymin + (ymax - ymin) * i / 5.0;
    out << "<line x1='" << px(xv) << "' y1='" << h - mb << "' x2='" << px(xv)
        << "' y2='" << h - mb + 5 << "' stroke='#444'/>\n"
        << "<text x='" << px(xv) << "' y='" << h - mb + 20
        << "' text-anchor='middle' font-family='sans-serif' "
           "font-size='12'>" << fmt_tick(xv) << "</text>\n"
        << "<line x1='" << ml - 5 << "' y1='" << py(yv) << "' x2='" << ml
        << "' y2='" << py(yv) << "' stroke='#444'/>\n"
        << "<text x='" << ml - 9 << "' y='" << py(yv) + 4
        << "' text-anchor='end' font-family='sans-serif' font-size='12'>"
        << fmt_tick(yv) << "</text>\n";
  }
  out << "<text x='" << (ml + w - mr) / 2 << "' y='" << h - 15
      << "' text-anchor='middle' font-family='sans-serif' font-size='14'>"
      << x_label << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(*kPalette))];
    out << "<polyline fill='none' stroke='" << color
        << "' stroke-width='1.6' points='";
    for (std::size_t i = 0; i < series[k].x.size(); ++i) {
      out << px(series[k].x[i]) << "," << py(series[k].y[i]) << " ";
    }
    out << "'/>\n";
    const double ly = mt + 18 + 20 * static_cast<double>(k);
    out << "<line x1='" << w - mr + 12 << "' y1='" << ly << "' x2='"
        << w - mr + 40 << "' y2='" << ly << "' stroke='" << color
        << "' stroke-width='2.5'/>\n"
        << "<text x='" << w - mr + 46 << "' y='" << ly + 4
        << "' font-family='sans-serif' font-size='13'>" << series[k].label
        << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw ConfigError("write to " + path + " failed");
}

}  // namespace supersinh
