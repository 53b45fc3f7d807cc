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

// ctxlab: command-line front end.
//
//   ctxlab reproduce [--format text|json]
//   ctxlab bounds --model nchvt|nclhvt|lhvt|table --expr T|S|TS|Sprime|TSprime|chsh|bellsum
//   ctxlab sweep --scenario S --param P --from F --to T --steps N [--out PATH]
//   ctxlab threshold --scenario S [--tol 1e-6]
//   ctxlab scenario --config PATH
//
// Exit codes: 0 success, 1 acceptance failure, 2 usage error, 3 internal error.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctxlab/hv_bounds.hpp"
#include "ctxlab/reproduce.hpp"
#include "ctxlab/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAcceptance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int run_reproduce(const std::string& format) {
  const auto checks = ctxlab::reproduce_checks();
  if (format == "json") {
    std::cout << ctxlab::checks_to_json(checks).dump(2) << '\n';
  } else {
    ctxlab::print_checks_text(std::cout, checks);
  }
  return ctxlab::all_pass(checks) ? kExitOk : kExitAcceptance;
}

void print_nc(const std::string& what, const ctxlab::NCBound& b, std::size_t n_distant) {
  std::cout << what << ": " << b.bound << '\n'
            << "  witness: " << b.witness.str(n_distant) << '\n'
            << "  enumerated: " << b.enumerated << " assignments\n";
}

void print_lhvt(const std::string& what, const ctxlab::LhvtBound& b, ctxlab::Parties p) {
  using namespace ctxlab;
  std::cout << what << ": " << b.bound << '\n' << "  witness fresh:";
  for (std::size_t i = 0; i < kFreshObservables.size(); ++i) {
    std::cout << ' ' << ascii_name(kFreshObservables[i]) << "^=" << (b.witness.fresh[i] > 0 ? "+1" : "-1");
  }
  std::cout << "\n  witness later slots:";
  for (std::size_t s = 0; s < kSequences.size(); ++s) {
    std::cout << ' ' << sequence_text(kSequences[s]) << '[' << (b.witness.later[s][0] > 0 ? '+' : '-')
              << (b.witness.later[s][1] > 0 ? '+' : '-') << ']';
  }
  std::cout << "\n  witness distant:";
  for (std::size_t j = 0; j < distant_count(p); ++j) {
    std::cout << ' ' << symbol(static_cast<Remote>(j)) << '=' << (b.witness.distant[j] > 0 ? "+1" : "-1");
  }
  std::cout << "\n  enumerated: " << b.outer_points << " outer points x 12 sequences x 4 later choices\n";
}

int run_bounds(const std::string& model, const std::string& expr) {
  using namespace ctxlab;
  const auto bi = Parties::Bipartite;
  const auto tri = Parties::Tripartite;
  if (model == "nchvt") {
    if (expr == "T") {
      print_nc("max <T> (noncontextual)", max_nchvt_T(), 0);
    } else if (expr == "TS") {
      print_nc("max <T>+<S> (noncontextual)", max_nc_joint(bi), 2);
    } else if (expr == "TSprime") {
      print_nc("max <T>+<S'> (noncontextual)", max_nc_joint(tri), 4);
    } else {
      throw UsageError("model nchvt supports --expr T|TS|TSprime");
    }
  } else if (model == "nclhvt") {
    if (expr == "S") {
      print_nc("max <S> (locally noncontextual)", max_nclhvt_S(bi), 2);
    } else if (expr == "Sprime") {
      print_nc("max <S'> (locally noncontextual)", max_nclhvt_S(tri), 4);
    } else if (expr == "TS") {
      print_nc("max <T>+<S> (locally noncontextual)", max_nc_joint(bi), 2);
    } else if (expr == "TSprime") {
      print_nc("max <T>+<S'> (locally noncontextual)", max_nc_joint(tri), 4);
    } else {
      throw UsageError("model nclhvt supports --expr S|Sprime|TS|TSprime");
    }
  } else if (model == "lhvt") {
    if (expr == "TS") {
      print_lhvt("max <T>+<S> (local, order-dependent)", max_lhvt_total(bi), bi);
    } else if (expr == "TSprime") {
      print_lhvt("max <T>+<S'> (local, order-dependent)", max_lhvt_total(tri), tri);
    } else if (expr == "chsh") {
      for (std::size_t k = 0; k < 3; ++k) {
        const auto r = max_deterministic(chsh_inequalities()[k]);
        std::cout << "max CHSH " << k + 1 << ": " << r.value << "  (enumerated: " << r.points << ")\n";
      }
    } else if (expr == "bellsum") {
      for (auto p : {bi, tri}) {
        const auto terms = bell_sum(p);
        const auto r = max_deterministic(terms);
        std::cout << "max " << (p == bi ? "bipartite" : "tripartite") << " Bell sum: " << r.value
                  << "  (enumerated: " << r.points << ")\n";
      }
    } else {
      throw UsageError("model lhvt supports --expr TS|TSprime|chsh|bellsum");
    }
  } else if (model == "table") {
    if (expr != "S" && expr != "Sprime") throw UsageError("model table supports --expr S|Sprime");
    const auto table = BehaviorTable::contextual();
    const auto p = expr == "S" ? bi : tri;
    std::cout << "behavior table no-disturbance: " << (table.no_disturbance() ? "pass" : "FAIL") << '\n'
              << (p == bi ? "<S>" : "<S'>") << " with all distant outcomes +1: "
              << to_string(evaluate_behavior_S(table, {1, 1, 1, 1}, p)) << '\n';
  } else {
    throw UsageError("unknown --model '" + model + "'");
  }
  return kExitOk;
}

int run_sweep(const std::string& scenario, const std::string& param, double from, double to,
              std::size_t steps, const std::string& out_path, double chi, double visibility,
              std::optional<double> theta) {
  using namespace ctxlab;
  ScenarioConfig base{parse_scenario_kind(scenario)};
  base.chi_angle = chi;
  base.visibility = visibility;
  if (base.kind == ScenarioKind::Nonmax) base.theta = theta.value_or(std::numbers::pi / 4);
  const auto result = sweep(base, parse_sweep_param(param), from, to, steps);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    write_sweep_csv(f, result);
  }
  std::cout << param << " sweep, " << scenario << ", " << result.rows.size() << " rows\n";
  std::size_t violated = 0;
  for (const auto& r : result.rows) {
    violated += r.violated;
    std::cout << "  " << format_report(r.param) << "  T=" << format_report(r.T) << "  S="
              << format_report(r.S) << "  total=" << format_report(r.total)
              << (r.violated ? "  violated" : "") << '\n';
  }
  std::cout << violated << " of " << result.rows.size() << " rows violate the bound " << 18 << '\n';
  if (!out_path.empty()) std::cout << "wrote " << out_path << '\n';
  return kExitOk;
}

int run_threshold(const std::string& scenario, double tol, double chi) {
  using namespace ctxlab;
  ScenarioConfig c{parse_scenario_kind(scenario)};
  c.chi_angle = chi;
  if (c.kind == ScenarioKind::Nonmax) c.theta = std::numbers::pi / 4;
  const auto r = threshold(c, tol);
  std::cout << scenario << " threshold " << r.parameter << " = " << format_exact(r.value) << '\n';
  if (r.d1d2) std::cout << "  d1*d2 = " << format_exact(*r.d1d2) << '\n';
  return kExitOk;
}

int run_scenario(const std::string& path) {
  using namespace ctxlab;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  const auto cfg = parse_config(in);
  const auto r = evaluate_scenario(cfg);
  for (const auto* rep : {&r.T, &r.S}) {
    std::cout << '<' << rep->name << "> = " << format_report(rep->total) << '\n';
    for (const auto& t : rep->per_term) {
      std::cout << "  " << (t.sign < 0 ? "-" : "+") << t.label << " = " << format_report(t.sign * t.value)
                << '\n';
    }
  }
  std::cout << "total = " << format_report(r.total) << " (bound " << to_string(r.bound) << ", "
            << (r.violated ? "violated" : "not violated") << ")\n";
  if (cfg.output_path) {
    std::ofstream f(*cfg.output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + *cfg.output_path + "' for writing");
    f << to_json(cfg, r).dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations, classical bounds and thresholds for sequential measurements "
               "on a Peres-Mermin square with distant qubits"};
  app.require_subcommand(1);

  std::string format = "text";
  auto* reproduce = app.add_subcommand("reproduce", "Compute every headline quantity and compare");
  reproduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string model, expr;
  auto* bounds = app.add_subcommand("bounds", "Classical bound by exhaustive enumeration");
  bounds->add_option("--model", model, "nchvt|nclhvt|lhvt|table")->required();
  bounds->add_option("--expr", expr, "T|S|TS|Sprime|TSprime|chsh|bellsum")->required();

  std::string scenario, param, out_path;
  double from = 0.0, to = 1.0, chi = ctxlab::kDefaultChi, visibility = 1.0;
  std::size_t steps = 11;
  std::optional<double> theta;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario over a parameter grid");
  sweep->add_option("--scenario", scenario, "singlet|nonmax|ghz")->required();
  sweep->add_option("--param", param, "visibility|theta|chi_angle")->required();
  sweep->add_option("--from", from, "First grid value")->required();
  sweep->add_option("--to", to, "Last grid value")->required();
  sweep->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
  sweep->add_option("--out", out_path, "CSV output file");
  sweep->add_option("--chi", chi, "Ancilla angle for fixed-parameter runs");
  sweep->add_option("--visibility", visibility, "Visibility for fixed-parameter runs");
  sweep->add_option("--theta", theta, "Nonmax angle for fixed-parameter runs");

  double tol = 1e-6;
  std::string threshold_scenario;
  double threshold_chi = ctxlab::kDefaultChi;
  auto* thresh = app.add_subcommand("threshold", "Bisect for the violation threshold");
  thresh->add_option("--scenario", threshold_scenario, "singlet|nonmax|ghz")->required();
  thresh->add_option("--tol", tol, "Bracket width tolerance");
  thresh->add_option("--chi", threshold_chi, "Ancilla angle");

  std::string config_path;
  auto* scen = app.add_subcommand("scenario", "Evaluate a scenario from a JSON config file");
  scen->add_option("--config", config_path, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*reproduce) return run_reproduce(format);
    if (*bounds) return run_bounds(model, expr);
    if (*sweep) return run_sweep(scenario, param, from, to, steps, out_path, chi, visibility, theta);
    if (*thresh) return run_threshold(threshold_scenario, tol, threshold_chi);
    if (*scen) return run_scenario(config_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ctxlab::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ctxlab::NoCrossing& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
