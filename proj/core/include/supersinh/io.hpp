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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supersinh/grassmann.hpp"

namespace supersinh {

// ---------------------------------------------------------------------------
// Supernumber JSON literals
// ---------------------------------------------------------------------------

/// Parse a supernumber literal over n generators.  Accepted forms:
///   3.5                      — body element
///   [[0, 1.2], [3, 0.25]]    — list of [generator-bitmask, coefficient]
/// Masks must fit the ring (mask < 2^n).  Throws ConfigError on bad input.
Supernumber supernumber_from_json(const std::string& text,
                                  unsigned n_generators);

/// Serialize as the list-of-pairs literal (zero coefficients omitted;
/// the zero value serializes as [[0, 0.0]]).
std::string supernumber_to_json(const Supernumber& v);

// ---------------------------------------------------------------------------
// Run configuration (JSON file + command-line overrides)
// ---------------------------------------------------------------------------

/// Shared knob set for the command-line tool.  Supernumber-valued entries
/// are kept as literal strings and parsed once the ring size is known.
struct RunConfig {
  std::string family = "S4";
  double eps = 1.0;
  unsigned ring = 2;

  // reduced-ODE run
  double sigma0 = -5.0;
  double sigma1 = 5.0;
  int steps = 4000;
  std::string alpha0 = "[[0, 1.2]]";
  std::string dalpha0 = "[[0, 0.0]]";
  std::string eta0 = "[[0, 0.0]]";
  std::string lambda0 = "[[0, 0.0]]";
  std::string f0 = "[[0, 1.0]]";
  std::string df0 = "[[0, 0.0]]";
  std::string C0 = "[[0, 0.0]]";

  // certification window and grid
  double x0 = -2.0, x1 = 2.0, t0 = -1.5, t1 = 1.5;
  int nx = 101, nt = 101;
  double tolerance = 1e-6;
  int jet_order = 2;

  std::uint64_t seed = 20260815;
  int threads = 0;  // 0 = hardware default
  std::string csv;  // output paths; empty = skip
  std::string svg;
};

/// Load a JSON object whose keys mirror the RunConfig field names into
/// `cfg` (unknown keys raise ConfigError; missing keys keep their values).
/// Supernumber entries may be strings or inline JSON arrays/numbers.
void merge_config_file(RunConfig& cfg, const std::string& path);

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// One column label per ring monomial: prefix[mask] for mask = 0..2^n−1.
std::vector<std::string> coefficient_labels(const std::string& prefix,
                                            unsigned n_generators);

/// Append all 2^n coefficients of `v` to `row`.
void append_coefficients(std::vector<double>& row, const Supernumber& v);

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// ---------------------------------------------------------------------------
// SVG line plots
// ---------------------------------------------------------------------------

struct SvgSeries {
  std::string label;
  std::vector<double> x, y;
};

/// Minimal multi-series polyline plot with axes, ticks and a legend.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label,
                    const std::vector<SvgSeries>& series);

}  // namespace supersinh
