// Copyright 2026 The ctxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXLAB_RUNNER_HPP
#define CTXLAB_RUNNER_HPP

#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ctxlab/error.hpp"
#include "ctxlab/measurement.hpp"
#include "ctxlab/scenario.hpp"

namespace ctxlab {

enum class ScenarioKind { Singlet, Nonmax, Ghz };

inline ScenarioKind parse_scenario_kind(std::string_view s) {
  if (s == "singlet") return ScenarioKind::Singlet;
  if (s == "nonmax") return ScenarioKind::Nonmax;
  if (s == "ghz") return ScenarioKind::Ghz;
  throw InvalidArgument("unknown scenario '" + std::string(s) + "' (expected singlet|nonmax|ghz)");
}

inline std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Singlet: return "singlet";
    case ScenarioKind::Nonmax: return "nonmax";
    case ScenarioKind::Ghz: return "ghz";
  }
  return "?";
}

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::Singlet;
  double chi_angle = kDefaultChi;
  double visibility = 1.0;
  std::optional<double> theta;  // nonmax only
  std::optional<std::string> output_path;

  ScenarioConfig() = default;
  ScenarioConfig(ScenarioKind k) : kind(k) {}  // implicit: {kind} is a default config

  void validate() const {
    if (!(visibility >= 0.0 && visibility <= 1.0)) throw InvalidArgument("visibility must lie in [0, 1]");
    if (!std::isfinite(chi_angle)) throw InvalidArgument("chi_angle must be finite");
    if (kind == ScenarioKind::Nonmax) {
      if (!theta) throw InvalidArgument("nonmax scenario requires theta");
      if (!(*theta >= 0.0 && *theta <= std::numbers::pi / 2 + 1e-15))
        throw InvalidArgument("theta must lie in [0, π/2]");
    } else if (theta) {
      throw InvalidArgument("theta applies only to the nonmax scenario");
    }
  }
};

/// Parses the JSON config file format. Unknown keys are rejected.
inline ScenarioConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("config: expected a JSON object");
  ScenarioConfig c;
  bool have_kind = false;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& key = it.key();
    const auto& v = it.value();
    auto number = [&]() {
      if (!v.is_number()) throw InvalidArgument("config: '" + key + "' must be a number");
      return v.get<double>();
    };
    if (key == "scenario_kind") {
      if (!v.is_string()) throw InvalidArgument("config: 'scenario_kind' must be a string");
      c.kind = parse_scenario_kind(v.get<std::string>());
      have_kind = true;
    } else if (key == "chi_angle") {
      c.chi_angle = number();
    } else if (key == "visibility") {
      c.visibility = number();
    } else if (key == "theta") {
      c.theta = number();
    } else if (key == "output_path") {
      if (!v.is_string()) throw InvalidArgument("config: 'output_path' must be a string");
      c.output_path = v.get<std::string>();
    } else {
      throw InvalidArgument("config: unknown key '" + key + "'");
    }
  }
  if (!have_kind) throw InvalidArgument("config: 'scenario_kind' is required");
  c.validate();
  return c;
}

inline ScenarioConfig parse_config(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return parse_config(j);
}

struct ScenarioSetup {
  QuantumState state;
  DistantSettings settings;
};

inline ScenarioSetup build_scenario(const ScenarioConfig& c) {
  c.validate();
  switch (c.kind) {
    case ScenarioKind::Singlet:
      return {build_state_singlet(c.chi_angle, c.visibility), bob_settings_singlet()};
    case ScenarioKind::Nonmax:
      return {build_state_nonmax(*c.theta, c.chi_angle, c.visibility), bob_settings_nonmax(*c.theta)};
    case ScenarioKind::Ghz:
      return {build_state_ghz(c.visibility, c.chi_angle), ghz_settings()};
  }
  throw InvalidArgument("bad scenario kind");
}

struct ScenarioResult {
  EvaluationReport T;
  EvaluationReport S;  // <S> or <S'>
  double total = 0.0;
  Rational bound{18};
  bool violated = false;
};

inline ScenarioResult evaluate_scenario(const ScenarioConfig& c) {
  const auto setup = build_scenario(c);
  ScenarioResult r;
  r.T = evaluate_expression(setup.state, build_expression_T());
  r.S = evaluate_expression(setup.state, build_expression_distant(setup.settings));
  r.total = r.T.total + r.S.total;
  r.violated = r.total > to_double(r.bound) + kViolationMargin;
  return r;
}

inline nlohmann::json to_json(const EvaluationReport& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.per_term) {
    terms.push_back({{"label", t.label}, {"sign", t.sign}, {"value", t.value}});
  }
  return {{"name", r.name}, {"terms", terms}, {"total", r.total},
          {"classical_bound", to_string(r.classical_bound)}, {"violated", r.violated}};
}

inline nlohmann::json to_json(const ScenarioConfig& c, const ScenarioResult& r) {
  nlohmann::json cfg = {{"scenario_kind", std::string(to_string(c.kind))},
                        {"chi_angle", c.chi_angle},
                        {"visibility", c.visibility}};
  if (c.theta) cfg["theta"] = *c.theta;
  return {{"config", cfg},          {"T", to_json(r.T)},
          {"S", to_json(r.S)},      {"total", r.total},
          {"bound", to_string(r.bound)}, {"violated", r.violated}};
}

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepParam { Visibility, Theta, ChiAngle };

inline SweepParam parse_sweep_param(std::string_view s) {
  if (s == "visibility") return SweepParam::Visibility;
  if (s == "theta") return SweepParam::Theta;
  if (s == "chi_angle" || s == "chi") return SweepParam::ChiAngle;
  throw InvalidArgument("unknown sweep parameter '" + std::string(s) +
                        "' (expected visibility|theta|chi_angle)");
}

struct SweepRow {
  double param = 0.0;
  double T = 0.0;
  double S = 0.0;
  double total = 0.0;
  long long bound = 18;
  bool violated = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Evenly spaced inclusive grid; the last point is exactly `to`.
inline std::vector<double> linear_grid(double from, double to, std::size_t steps) {
  if (!(from < to)) throw InvalidArgument("sweep: require from < to");
  if (steps < 2) throw InvalidArgument("sweep: require at least 2 steps");
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    g[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  g.back() = to;
  return g;
}

inline SweepResult sweep(ScenarioConfig base, SweepParam param, double from, double to,
                         std::size_t steps) {
  if (param == SweepParam::Theta && base.kind != ScenarioKind::Nonmax) {
    throw InvalidArgument("sweep: theta applies only to the nonmax scenario");
  }
  if (base.kind == ScenarioKind::Nonmax && !base.theta) base.theta = std::numbers::pi / 4;
  SweepResult out;
  for (double x : linear_grid(from, to, steps)) {
    ScenarioConfig c = base;
    switch (param) {
      case SweepParam::Visibility: c.visibility = x; break;
      case SweepParam::Theta: c.theta = x; break;
      case SweepParam::ChiAngle: c.chi_angle = x; break;
    }
    const auto r = evaluate_scenario(c);
    out.rows.push_back({x, r.T.total, r.S.total, r.total, r.bound.numerator(), r.violated});
  }
  return out;
}

inline constexpr std::string_view kSweepHeader = "param,T,S,total,bound,violated";

inline std::string format_exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_sweep_csv(std::ostream& out, const SweepResult& s) {
  out << kSweepHeader << '\n';
  for (const auto& r : s.rows) {
    out << format_exact(r.param) << ',' << format_exact(r.T) << ',' << format_exact(r.S) << ','
        << format_exact(r.total) << ',' << r.bound << ',' << (r.violated ? 1 : 0) << '\n';
  }
}

inline SweepResult read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw InvalidArgument("sweep csv: missing or wrong header");
  }
  SweepResult s;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 6) throw InvalidArgument("sweep csv: expected 6 columns");
    try {
      s.rows.push_back({std::stod(cells[0]), std::stod(cells[1]), std::stod(cells[2]),
                        std::stod(cells[3]), std::stoll(cells[4]), cells[5] == "1"});
    } catch (const std::logic_error&) {
      throw InvalidArgument("sweep csv: malformed number in '" + line + "'");
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Threshold search

/// Smallest crossing of f from <= 0 to > 0 on [lo, hi]: a coarse scan of
/// `scan_points` brackets it, then bisection narrows the bracket below `tol`.
inline double bisect_crossing(const std::function<double(double)>& f, double lo, double hi,
                              double tol, std::size_t scan_points = 32) {
  if (!(tol > 0.0)) throw InvalidArgument("threshold: tolerance must be positive");
  const auto grid = linear_grid(lo, hi, scan_points);
  std::optional<std::pair<double, double>> bracket;
  double prev = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = f(grid[i]);
    if (prev <= 0.0 && cur > 0.0) {
      bracket = {grid[i - 1], grid[i]};
      break;
    }
    prev = cur;
  }
  if (!bracket) throw NoCrossing("threshold: no crossing found in the scanned interval");
  auto [a, b] = *bracket;
  while (b - a >= tol) {
    const double m = 0.5 * (a + b);
    if (f(m) > 0.0) {
      b = m;
    } else {
      a = m;
    }
  }
  return 0.5 * (a + b);
}

struct ThresholdResult {
  std::string parameter;  // "visibility" or "theta"
  double value = 0.0;
  std::optional<double> d1d2;  // nonmax only
};

/// Singlet / ghz: the visibility where <T> + <S> (or <S'>) crosses 18.
/// Nonmax: the theta in [0, π/4] where <S> crosses 6, also reported as d1 d2.
inline ThresholdResult threshold(ScenarioConfig base, double tol = 1e-6) {
  if (base.kind == ScenarioKind::Nonmax) {
    auto f = [&](double theta) {
      ScenarioConfig c = base;
      c.theta = theta;
      return evaluate_scenario(c).S.total - 6.0;
    };
    const double theta = bisect_crossing(f, 0.0, std::numbers::pi / 4, tol);
    return {"theta", theta, std::sin(2.0 * theta) / 2.0};
  }
  auto f = [&](double v) {
    ScenarioConfig c = base;
    c.visibility = v;
    return evaluate_scenario(c).total - 18.0;
  };
  return {"visibility", bisect_crossing(f, 0.0, 1.0, tol), std::nullopt};
}

/// Six significant digits, for human-readable reports.
inline std::string format_report(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace ctxlab

#endif  // CTXLAB_RUNNER_HPP
