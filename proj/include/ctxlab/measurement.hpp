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

// Sequential projective measurement with the Lüders update
//   rho -> Pi rho Pi   (unnormalized; branch probability = trace)
// using the full, possibly degenerate, eigenprojector of each outcome.

#ifndef CTXLAB_MEASUREMENT_HPP
#define CTXLAB_MEASUREMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ctxlab/error.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/scenario.hpp"
#include "ctxlab/state.hpp"
#include "ctxlab/tensor.hpp"

namespace ctxlab {

inline constexpr double kClampTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-10;
inline constexpr double kViolationMargin = 1e-9;

/// Outcome probabilities for an ordered list of ±1 measurements.
///
/// Outcome tuples are encoded as integers: bit (arity-1-i) is set when the
/// i-th measurement returned -1, so index 0 is (+,+,...,+) and the table
/// is in lexicographic order with + before -.
class JointOutcomeDistribution {
 public:
  JointOutcomeDistribution(std::size_t arity, std::vector<double> probs, bool order_dependent)
      : arity_(arity), probs_(std::move(probs)), order_dependent_(order_dependent) {}

  std::size_t arity() const { return arity_; }
  std::span<const double> probabilities() const { return probs_; }

  /// True when the Alice sequence contained a non-commuting pair, so the
  /// distribution depends on the measurement order.
  bool order_dependent() const { return order_dependent_; }

  double probability(std::span<const int> outcomes) const {
    if (outcomes.size() != arity_) throw InvalidArgument("probability: wrong tuple arity");
    std::size_t idx = 0;
    for (int o : outcomes) {
      if (o != 1 && o != -1) throw InvalidArgument("probability: outcomes must be ±1");
      idx = (idx << 1) | (o == -1 ? 1u : 0u);
    }
    return probs_[idx];
  }

  static int outcome(std::size_t tuple_index, std::size_t position, std::size_t arity) {
    return (tuple_index >> (arity - 1 - position)) & 1u ? -1 : 1;
  }

  double total() const {
    double s = 0.0;
    for (double p : probs_) s += p;
    return s;
  }

  /// Distribution of the single outcome at `position`: {P(+1), P(-1)}.
  std::array<double, 2> marginal(std::size_t position) const {
    std::array<double, 2> m{0.0, 0.0};
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      m[outcome(i, position, arity_) == 1 ? 0 : 1] += probs_[i];
    }
    return m;
  }

 private:
  std::size_t arity_;
  std::vector<double> probs_;
  bool order_dependent_;
};

namespace detail {

inline void check_register(const QuantumState& state, const Observable& o) {
  for (auto q : o.qubits()) {
    if (q >= state.n_qubits()) {
      throw InvalidArgument("observable '" + o.name() + "' acts outside the state's register");
    }
  }
}

inline void branch(const ComplexMatrix& rho, std::span<const Eigenprojectors> projectors,
                   std::size_t depth, std::size_t index, std::vector<double>& out) {
  if (depth == projectors.size()) {
    out[index] = rho.trace().real();
    return;
  }
  const auto& pr = projectors[depth];
  branch(pr.plus * rho * pr.plus, projectors, depth + 1, index << 1, out);
  branch(pr.minus * rho * pr.minus, projectors, depth + 1, (index << 1) | 1u, out);
}

}  // namespace detail

/// Joint distribution of measuring `alice_sequence` in order and then the
/// `distant` observables. Distant observables must act only on qubits that
/// do not belong to Alice.
inline JointOutcomeDistribution joint_distribution(const QuantumState& state,
                                                   std::span<const Observable> alice_sequence,
                                                   std::span<const Observable> distant = {}) {
  const std::size_t n = state.n_qubits();
  std::vector<Eigenprojectors> projectors;
  projectors.reserve(alice_sequence.size() + distant.size());
  for (const auto& o : alice_sequence) {
    detail::check_register(state, o);
    for (auto q : o.qubits()) {
      if (state.party_of(q) != Party::Alice) {
        throw InvalidArgument("observable '" + o.name() + "' is not on Alice's side");
      }
    }
    projectors.push_back(eigenprojectors(o.embed(n)));
  }
  for (const auto& o : distant) {
    detail::check_register(state, o);
    for (auto q : o.qubits()) {
      if (state.party_of(q) == Party::Alice) {
        throw InvalidArgument("distant observable '" + o.name() + "' acts on Alice's qubit");
      }
    }
    projectors.push_back(eigenprojectors(o.embed(n)));
  }

  bool order_dependent = false;
  for (std::size_t i = 0; i < alice_sequence.size(); ++i)
    for (std::size_t j = i + 1; j < alice_sequence.size(); ++j)
      if (!commutes(alice_sequence[i], alice_sequence[j])) order_dependent = true;

  const std::size_t arity = projectors.size();
  std::vector<double> probs(std::size_t{1} << arity, 0.0);
  detail::branch(state.density(), projectors, 0, 0, probs);
  for (auto& p : probs) {
    if (std::abs(p) < kClampTol) p = 0.0;
  }
  JointOutcomeDistribution dist(arity, std::move(probs), order_dependent);
  if (std::abs(dist.total() - 1.0) > kNormalizationTol) {
    throw std::logic_error("joint_distribution: probabilities do not sum to 1");
  }
  return dist;
}

/// Unsigned expectation of the product of masked Alice outcomes and all
/// distant outcomes. Apply `spec.sign` for the signed term value.
inline double correlation(const QuantumState& state, const CorrelationSpec& spec) {
  spec.validate();
  const auto dist = joint_distribution(state, spec.sequence, spec.distant);
  const std::size_t arity = dist.arity();
  const auto probs = dist.probabilities();
  double value = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    int product = 1;
    for (auto pos : spec.product_mask) product *= JointOutcomeDistribution::outcome(i, pos, arity);
    for (std::size_t d = 0; d < spec.distant.size(); ++d) {
      product *= JointOutcomeDistribution::outcome(i, spec.sequence.size() + d, arity);
    }
    value += product * probs[i];
  }
  return value;
}

struct TermValue {
  std::string label;
  int sign;
  double value;  // unsigned correlator
};

struct EvaluationReport {
  std::string name;
  std::vector<TermValue> per_term;
  double total = 0.0;
  Rational classical_bound;
  bool violated = false;
};

/// Sums terms in list order, so totals are reproducible bit for bit.
inline EvaluationReport evaluate_expression(const QuantumState& state,
                                            const InequalityExpression& expr) {
  EvaluationReport r{expr.name, {}, 0.0, expr.classical_bound, false};
  r.per_term.reserve(expr.terms.size());
  for (const auto& term : expr.terms) {
    const double v = correlation(state, term);
    r.per_term.push_back({term.label, term.sign, v});
    r.total += term.sign * v;
  }
  r.violated = r.total > to_double(expr.classical_bound) + kViolationMargin;
  return r;
}

struct NoDisturbanceResult {
  bool pass = true;
  double worst_deviation = 0.0;
  std::size_t sequences_checked = 0;
};

/// Measures every context in every ordering and compares each observable's
/// outcome marginal with the marginal of measuring it alone. Contexts must
/// be mutually commuting sets; otherwise IncompatibleObservables is thrown.
inline NoDisturbanceResult no_disturbance_check(const QuantumState& state,
                                                const std::vector<std::vector<Observable>>& contexts,
                                                double tol = kViolationMargin) {
  for (const auto& ctx : contexts)
    for (std::size_t i = 0; i < ctx.size(); ++i)
      for (std::size_t j = i + 1; j < ctx.size(); ++j)
        if (!commutes(ctx[i], ctx[j])) {
          throw IncompatibleObservables("no_disturbance_check: " + ctx[i].name() + " and " +
                                        ctx[j].name() + " are not compatible");
        }

  NoDisturbanceResult result;
  std::map<std::string, std::array<double, 2>> alone;
  auto reference = [&](const Observable& o) -> const std::array<double, 2>& {
    auto it = alone.find(o.name());
    if (it == alone.end()) {
      const std::array<Observable, 1> single{o};
      it = alone.emplace(o.name(), joint_distribution(state, single).marginal(0)).first;
    }
    return it->second;
  };

  for (const auto& ctx : contexts) {
    std::vector<std::size_t> order(ctx.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      std::vector<Observable> seq;
      for (auto i : order) seq.push_back(ctx[i]);
      const auto dist = joint_distribution(state, seq);
      ++result.sequences_checked;
      for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        const auto m = dist.marginal(pos);
        const auto& ref = reference(seq[pos]);
        result.worst_deviation = std::max(result.worst_deviation, std::abs(m[0] - ref[0]));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  result.pass = result.worst_deviation <= tol;
  return result;
}

/// The six rows/columns of the square as observable sets.
inline std::vector<std::vector<Observable>> mermin_contexts(const MerminSquare& sq = MerminSquare{}) {
  std::vector<std::vector<Observable>> out;
  for (const auto& line : MerminSquare::kRows) out.push_back({sq[line[0]], sq[line[1]], sq[line[2]]});
  for (const auto& line : MerminSquare::kColumns)
    out.push_back({sq[line[0]], sq[line[1]], sq[line[2]]});
  return out;
}

}  // namespace ctxlab

#endif  // CTXLAB_MEASUREMENT_HPP
