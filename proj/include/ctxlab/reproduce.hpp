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

#ifndef CTXLAB_REPRODUCE_HPP
#define CTXLAB_REPRODUCE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "ctxlab/hv_bounds.hpp"
#include "ctxlab/measurement.hpp"
#include "ctxlab/random_state.hpp"
#include "ctxlab/runner.hpp"
#include "ctxlab/scenario.hpp"

namespace ctxlab {

/// One reported quantity. `pass` is decided on full precision.
struct Check {
  std::string name;
  double paper = 0.0;
  double computed = 0.0;
  double tol = 0.0;
  bool pass = false;
};

namespace detail {

inline Check near(std::string name, double paper, double computed, double tol) {
  return {std::move(name), paper, computed, tol, std::abs(computed - paper) <= tol};
}

inline Check exact(std::string name, long long expected, long long computed) {
  return {std::move(name), double(expected), double(computed), 0.0, expected == computed};
}

inline Check flag(std::string name, bool ok) { return {std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0, ok}; }

}  // namespace detail

inline constexpr std::uint64_t kReproduceSeed = 20150601;

/// Every headline quantity: quantum correlators and totals, classical
/// bounds, thresholds, and the structural properties they rest on.
inline std::vector<Check> reproduce_checks() {
  using detail::exact;
  using detail::flag;
  using detail::near;
  std::vector<Check> out;
  const double r2 = std::numbers::sqrt2;

  // Quantum correlators for the ancilla + singlet configuration.
  const auto singlet = build_state_singlet();
  const auto settings = bob_settings_singlet();
  const auto S = evaluate_expression(singlet, build_expression_S(settings));
  for (const auto& t : S.per_term) {
    const double signed_value = t.sign * t.value;
    const bool is_half = std::abs(signed_value - 0.5) < std::abs(signed_value - 1 / r2);
    out.push_back(near("corr " + (t.sign < 0 ? "-" : std::string()) + t.label,
                       is_half ? 0.5 : 1 / r2, signed_value, 1e-9));
  }
  out.push_back(near("S_singlet", 4 + 2 * r2, S.total, 1e-9));
  out.push_back(flag("S_singlet < 12", S.total < 12.0 && !S.violated));

  const auto T = evaluate_expression(singlet, build_expression_T());
  out.push_back(near("T_singlet", 12.0, T.total, 1e-9));
  {
    std::mt19937_64 rng(kReproduceSeed);
    double worst = 0.0;
    const auto t_expr = build_expression_T();
    for (int i = 0; i < 100; ++i) {
      const auto st = random_alice_bob_state(rng);
      worst = std::max(worst, std::abs(evaluate_expression(st, t_expr).total - 12.0));
    }
    out.push_back(near("T_random_states_max_dev", 0.0, worst, 1e-9));
  }
  out.push_back(near("T+S_singlet", 16 + 2 * r2, T.total + S.total, 1e-9));
  out.push_back(flag("T+S_singlet > 18", T.total + S.total > 18.0));

  // Classical bounds.
  out.push_back(exact("max_nchvt_T", 8, max_nchvt_T().bound));
  out.push_back(exact("max_nclhvt_S", 10, max_nclhvt_S(Parties::Bipartite).bound));
  {
    const auto table = BehaviorTable::contextual();
    out.push_back(flag("table_no_disturbance", table.no_disturbance()));
    const auto v = evaluate_behavior_S(table, {1, 1, 1, 1}, Parties::Bipartite);
    out.push_back({"table_S", 12.0, to_double(v), 0.0, v == Rational(12)});
  }
  for (std::size_t k = 0; k < 3; ++k) {
    out.push_back(exact("max_chsh_" + std::to_string(k + 1), 2, max_chsh(k)));
  }
  out.push_back(exact("max_bell_sum_bipartite", 6, max_bell_sum(Parties::Bipartite)));
  out.push_back(exact("max_bell_sum_tripartite", 6, max_bell_sum(Parties::Tripartite)));
  for (auto p : {Parties::Bipartite, Parties::Tripartite}) {
    const auto checks = verify_algebraic_relations(p);
    const auto held = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
    long long controls_failing = 0;
    for (auto rel : algebraic_relations(p)) {
      auto flipped = rel;
      flipped.lhs[0].coef = -flipped.lhs[0].coef;
      auto no_slack = rel;
      no_slack.slack = 0;
      controls_failing += !verify_relation(flipped).holds;
      controls_failing += !verify_relation(no_slack).holds;
    }
    const std::string tag = p == Parties::Bipartite ? "bipartite" : "tripartite";
    out.push_back(exact("relations_hold_" + tag, 6, held));
    out.push_back(exact("relation_controls_fail_" + tag, 12, controls_failing));
  }
  const auto lhvt_ts = max_lhvt_total(Parties::Bipartite).bound;
  out.push_back(exact("max_lhvt_T+S", 18, lhvt_ts));
  out.push_back(exact("max_nc_joint_T+S", lhvt_ts, max_nc_joint(Parties::Bipartite).bound));
  out.push_back(exact("max_lhvt_T+S'", 18, max_lhvt_total(Parties::Tripartite).bound));

  // Thresholds.
  out.push_back(near("threshold_singlet", 6 / (4 + 2 * r2),
                     threshold({ScenarioKind::Singlet}, 1e-7).value, 1e-5));
  out.push_back(near("threshold_ghz", 6 / (4 + 4 * r2), threshold({ScenarioKind::Ghz}, 1e-7).value, 1e-5));

  // Nonmaximal entanglement.
  {
    double worst = 0.0;
    for (double theta : linear_grid(0.0, std::numbers::pi / 2, 21)) {
      const double x = std::cos(theta) * std::sin(theta);
      const auto st = build_state_nonmax(theta);
      const double s = evaluate_expression(st, build_expression_S(bob_settings_nonmax(theta))).total;
      worst = std::max(worst, std::abs(s - std::sqrt(1 + 4 * x * x) * (2 + 2 * r2)));
    }
    out.push_back(near("S_nonmax_formula_max_dev", 0.0, worst, 1e-9));
    ScenarioConfig c{ScenarioKind::Nonmax};
    c.theta = std::numbers::pi / 4;
    out.push_back(near("nonmax_boundary_d1d2", 0.3688, *threshold(c, 1e-6).d1d2, 1e-3));
  }

  // GHZ.
  {
    const auto ghz = build_state_ghz();
    const double sp = evaluate_expression(ghz, build_expression_S_prime(ghz_settings())).total;
    const double t = evaluate_expression(ghz, build_expression_T()).total;
    out.push_back(near("S'_ghz", 4 * r2 + 4, sp, 1e-9));
    out.push_back(near("T+S'_ghz", 21.657, t + sp, 1e-3));
  }

  // Structural properties.
  {
    const MerminSquare sq;
    const auto id = ComplexMatrix::identity(4);
    double worst = 0.0;
    for (const auto& line : MerminSquare::kRows) {
      worst = std::max(worst, ((sq[line[0]].matrix() * sq[line[1]].matrix() * sq[line[2]].matrix()) - id).max_abs());
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& line = MerminSquare::kColumns[k];
      const auto expected = k == 2 ? -id : id;
      worst = std::max(worst, ((sq[line[0]].matrix() * sq[line[1]].matrix() * sq[line[2]].matrix()) - expected).max_abs());
    }
    out.push_back(near("mermin_products_max_dev", 0.0, worst, 1e-12));

    const auto nd = no_disturbance_check(singlet, mermin_contexts(sq));
    out.push_back(near("no_disturbance_max_dev", 0.0, nd.worst_deviation, 1e-10));

    const auto s1 = build_expression_S(settings);
    double lin = 0.0;
    for (double v : linear_grid(0.0, 1.0, 11)) {
      const auto noisy = evaluate_expression(build_state_singlet(kDefaultChi, v), s1);
      for (std::size_t i = 0; i < noisy.per_term.size(); ++i) {
        lin = std::max(lin, std::abs(noisy.per_term[i].value - v * S.per_term[i].value));
      }
    }
    out.push_back(near("S_linear_in_visibility_max_dev", 0.0, lin, 1e-10));
  }
  return out;
}

inline bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

inline void print_checks_text(std::ostream& out, const std::vector<Check>& checks) {
  std::size_t width = 4;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  auto pad = [](std::string s, std::size_t w) {
    // Labels contain multi-byte symbols; pad by code points.
    std::size_t cps = 0;
    for (unsigned char ch : s) cps += (ch & 0xC0) != 0x80;
    if (cps < w) s.append(w - cps, ' ');
    return s;
  };
  out << pad("name", width) << "  " << pad("paper", 12) << "  " << pad("computed", 12) << "  "
      << pad("tol", 8) << "  result\n";
  for (const auto& c : checks) {
    out << pad(c.name, width) << "  " << pad(format_report(c.paper), 12) << "  "
        << pad(format_report(c.computed), 12) << "  " << pad(format_report(c.tol), 8) << "  "
        << (c.pass ? "pass" : "FAIL") << '\n';
  }
  out << (all_pass(checks) ? "all checks pass\n" : "some checks FAILED\n");
}

inline nlohmann::json checks_to_json(const std::vector<Check>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"paper", c.paper}, {"computed", c.computed},
                   {"tol", c.tol}, {"pass", c.pass}});
  }
  return {{"checks", arr}, {"all_pass", all_pass(checks)}};
}

}  // namespace ctxlab

#endif  // CTXLAB_REPRODUCE_HPP
