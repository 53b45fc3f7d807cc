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

#include "ctxlab/runner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ctxlab/reproduce.hpp"
#include "gtest/gtest.h"

using namespace ctxlab;

namespace {

constexpr double kRoot2 = std::numbers::sqrt2;

ScenarioConfig config_from(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST(config, parses_all_keys) {
  const auto c = config_from(
      R"({"scenario_kind":"nonmax","chi_angle":0.3,"visibility":0.5,"theta":0.2,"output_path":"x.csv"})");
  EXPECT_EQ(c.kind, ScenarioKind::Nonmax);
  EXPECT_DOUBLE_EQ(c.chi_angle, 0.3);
  EXPECT_DOUBLE_EQ(c.visibility, 0.5);
  EXPECT_DOUBLE_EQ(*c.theta, 0.2);
  EXPECT_EQ(*c.output_path, "x.csv");
}

TEST(config, defaults) {
  const auto c = config_from(R"({"scenario_kind":"ghz"})");
  EXPECT_EQ(c.kind, ScenarioKind::Ghz);
  EXPECT_DOUBLE_EQ(c.chi_angle, std::numbers::pi / 8);
  EXPECT_DOUBLE_EQ(c.visibility, 1.0);
  EXPECT_FALSE(c.theta);
}

TEST(config, rejects_bad_input) {
  EXPECT_THROW(config_from(R"({"scenario_kind":"singlet","colour":1})"), InvalidArgument);
  EXPECT_THROW(config_from(R"({"visibility":1})"), InvalidArgument);
  EXPECT_THROW(config_from(R"({"scenario_kind":"w"})"), InvalidArgument);
  EXPECT_THROW(config_from(R"({"scenario_kind":"singlet","visibility":1.5})"), InvalidArgument);
  EXPECT_THROW(config_from(R"({"scenario_kind":"singlet","visibility":"high"})"), InvalidArgument);
  EXPECT_THROW(config_from(R"({"scenario_kind":"singlet","theta":0.1})"), InvalidArgument);
  EXPECT_THROW(config_from(R"({"scenario_kind":"nonmax"})"), InvalidArgument);
  EXPECT_THROW(config_from(R"([1,2])"), InvalidArgument);
  EXPECT_THROW(config_from("{not json"), InvalidArgument);
}

TEST(scenario, singlet_result) {
  const auto r = evaluate_scenario({ScenarioKind::Singlet});
  EXPECT_NEAR(r.T.total, 12.0, 1e-9);
  EXPECT_NEAR(r.S.total, 4 + 2 * kRoot2, 1e-9);
  EXPECT_TRUE(r.violated);
  const auto j = to_json(ScenarioConfig{ScenarioKind::Singlet}, r);
  EXPECT_EQ(j["bound"], "18");
  EXPECT_EQ(j["T"]["terms"].size(), 12u);
  EXPECT_EQ(j["config"]["scenario_kind"], "singlet");
}

TEST(sweep, visibility_is_linear) {
  const auto s = sweep({ScenarioKind::Singlet}, SweepParam::Visibility, 0.0, 1.0, 11);
  ASSERT_EQ(s.rows.size(), 11u);
  const double v_star = 6 / (4 + 2 * kRoot2);
  for (const auto& row : s.rows) {
    // <T> is state independent; noise scales every conditioned correlator.
    EXPECT_NEAR(row.T, 12.0, 1e-9);
    EXPECT_NEAR(row.total, 12 + row.param * (4 + 2 * kRoot2), 1e-9);
    EXPECT_EQ(row.violated, row.param > v_star);
    EXPECT_EQ(row.bound, 18);
  }
  EXPECT_EQ(s.rows.front().param, 0.0);
  EXPECT_EQ(s.rows.back().param, 1.0);
}

TEST(sweep, theta_violation_matches_analytic_boundary) {
  ScenarioConfig base{ScenarioKind::Nonmax};
  const auto s = sweep(base, SweepParam::Theta, 0.0, std::numbers::pi / 2, 41);
  const double boundary = std::sqrt(26 - 18 * kRoot2) / 2;  // d1 d2 where S = 6
  for (const auto& row : s.rows) {
    const double x = std::cos(row.param) * std::sin(row.param);
    EXPECT_NEAR(row.S, std::sqrt(1 + 4 * x * x) * (2 + 2 * kRoot2), 1e-9);
    EXPECT_NEAR(row.T, 12.0, 1e-9);
    if (std::abs(x - boundary) > 1e-6) {
      EXPECT_EQ(row.violated, x > boundary) << row.param;
    }
  }
}

TEST(sweep, chi_angle_leaves_T_unchanged) {
  const auto s = sweep({ScenarioKind::Singlet}, SweepParam::ChiAngle, 0.0, std::numbers::pi, 9);
  for (const auto& row : s.rows) EXPECT_NEAR(row.T, 12.0, 1e-9);
}

TEST(sweep, rejects_bad_ranges) {
  EXPECT_THROW(sweep({ScenarioKind::Singlet}, SweepParam::Visibility, 1.0, 0.0, 5), InvalidArgument);
  EXPECT_THROW(sweep({ScenarioKind::Singlet}, SweepParam::Visibility, 0.0, 1.0, 1), InvalidArgument);
  EXPECT_THROW(sweep({ScenarioKind::Singlet}, SweepParam::Theta, 0.0, 1.0, 5), InvalidArgument);
  EXPECT_THROW(sweep({ScenarioKind::Singlet}, SweepParam::Visibility, 0.0, 2.0, 5), InvalidArgument);
  EXPECT_THROW(parse_sweep_param("temperature"), InvalidArgument);
}

TEST(sweep_csv, round_trip_is_exact) {
  const auto s = sweep({ScenarioKind::Ghz}, SweepParam::Visibility, 0.1, 0.9, 7);
  std::stringstream buf;
  write_sweep_csv(buf, s);
  std::string header;
  std::getline(std::istringstream(buf.str()) >> std::ws, header);
  EXPECT_EQ(header, "param,T,S,total,bound,violated");
  const auto back = read_sweep_csv(buf);
  ASSERT_EQ(back.rows.size(), s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) EXPECT_EQ(back.rows[i], s.rows[i]);
}

TEST(sweep_csv, rejects_malformed_files) {
  std::istringstream no_header("1,2,3,4,18,0\n");
  EXPECT_THROW(read_sweep_csv(no_header), InvalidArgument);
  std::istringstream short_row("param,T,S,total,bound,violated\n1,2,3\n");
  EXPECT_THROW(read_sweep_csv(short_row), InvalidArgument);
  std::istringstream bad_number("param,T,S,total,bound,violated\n1,x,3,4,18,0\n");
  EXPECT_THROW(read_sweep_csv(bad_number), InvalidArgument);
}

TEST(threshold, singlet_and_ghz_match_closed_form) {
  EXPECT_NEAR(threshold({ScenarioKind::Singlet}).value, 6 / (4 + 2 * kRoot2), 1e-5);
  EXPECT_NEAR(threshold({ScenarioKind::Ghz}).value, 6 / (4 + 4 * kRoot2), 1e-5);
  EXPECT_EQ(threshold({ScenarioKind::Ghz}).parameter, "visibility");
}

TEST(threshold, nonmax_boundary) {
  ScenarioConfig c{ScenarioKind::Nonmax};
  c.theta = 0.0;
  const auto r = threshold(c);
  EXPECT_EQ(r.parameter, "theta");
  ASSERT_TRUE(r.d1d2);
  EXPECT_NEAR(*r.d1d2, std::sqrt(26 - 18 * kRoot2) / 2, 1e-6);
  EXPECT_NEAR(*r.d1d2, 0.3688, 1e-3);
}

TEST(threshold, tighter_tolerance_converges) {
  const double coarse = threshold({ScenarioKind::Singlet}, 1e-3).value;
  const double fine = threshold({ScenarioKind::Singlet}, 1e-9).value;
  EXPECT_NEAR(coarse, fine, 1e-3);
  EXPECT_NEAR(fine, 6 / (4 + 2 * kRoot2), 1e-8);
}

TEST(bisect_crossing, finds_root_and_reports_missing_crossing) {
  EXPECT_NEAR(bisect_crossing([](double x) { return x - 0.3; }, 0.0, 1.0, 1e-10), 0.3, 1e-9);
  EXPECT_THROW(bisect_crossing([](double) { return -1.0; }, 0.0, 1.0, 1e-6), NoCrossing);
  EXPECT_THROW(bisect_crossing([](double x) { return x; }, 0.0, 1.0, 0.0), InvalidArgument);
}

TEST(reproduce, every_check_passes) {
  const auto checks = reproduce_checks();
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " computed " << c.computed;
  EXPECT_TRUE(all_pass(checks));
}

TEST(reproduce, report_is_deterministic) {
  std::ostringstream a, b;
  print_checks_text(a, reproduce_checks());
  print_checks_text(b, reproduce_checks());
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(checks_to_json(reproduce_checks()).dump(), checks_to_json(reproduce_checks()).dump());
}

TEST(reproduce, json_shape) {
  const auto j = checks_to_json(reproduce_checks());
  ASSERT_TRUE(j.contains("checks"));
  ASSERT_TRUE(j.contains("all_pass"));
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "paper", "computed", "tol", "pass"}) EXPECT_TRUE(c.contains(key));
  }
}
