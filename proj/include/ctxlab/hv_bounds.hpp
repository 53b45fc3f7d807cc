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

// Classical bounds by exhaustive enumeration of deterministic models.
//
// Every functional here is linear in the probability assigned to each
// deterministic hidden-variable value, so a mixture over hidden variables
// never exceeds the best deterministic point; maximizing over deterministic
// assignments therefore gives the bound for the whole model class.
//
// Model classes:
//   noncontextual (NC)  one value per observable, shared by every context.
//   LHVT                distant outcomes fixed by the hidden variable; the
//                       value of an observable measured first ("fresh")
//                       does not depend on what follows; values in the
//                       second and third slot of a sequence are arbitrary.
//
// All arithmetic is exact (integers, or rationals for behavior tables).

#ifndef CTXLAB_HV_BOUNDS_HPP
#define CTXLAB_HV_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctxlab/enumerate.hpp"
#include "ctxlab/error.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/terms.hpp"

namespace ctxlab {

// ---------------------------------------------------------------------------
// Noncontextual assignments

struct NCAssignment {
  std::array<int, kMerminCount> alice{1, 1, 1, 1, 1, 1, 1, 1, 1};
  std::array<int, kRemoteCount> distant{1, 1, 1, 1};

  int operator[](Mermin m) const { return alice[index(m)]; }
  int operator[](Remote r) const { return distant[index(r)]; }

  /// Alice values then `n_distant` distant values, in enumeration order.
  static NCAssignment from_index(std::uint64_t idx, std::size_t n_distant) {
    const auto n = static_cast<unsigned>(kMerminCount + n_distant);
    NCAssignment a;
    for (unsigned i = 0; i < kMerminCount; ++i) a.alice[i] = spin(idx, i, n);
    for (unsigned j = 0; j < n_distant; ++j) a.distant[j] = spin(idx, kMerminCount + j, n);
    return a;
  }

  std::string str(std::size_t n_distant = kRemoteCount) const {
    std::string out;
    for (auto m : kAllMermin) {
      out += std::string(ascii_name(m)) + "=" + ((*this)[m] > 0 ? "+1 " : "-1 ");
    }
    for (std::size_t j = 0; j < n_distant; ++j) {
      out += std::string(symbol(static_cast<Remote>(j))) + "=" + (distant[j] > 0 ? "+1 " : "-1 ");
    }
    if (!out.empty()) out.pop_back();
    return out;
  }
};

inline int distant_product(const STerm& t, Parties p, const std::array<int, kRemoteCount>& d) {
  if (p == Parties::Bipartite) return d[index(t.bob)];
  return d[index(t.bob_charlie[0])] * d[index(t.bob_charlie[1])];
}

inline int nc_value_T(const NCAssignment& a) {
  int total = 0;
  for (const auto& t : kTTerms) {
    const auto& s = kSequences[t.sequence];
    total += t.sign * a[s[0]] * a[s[1]] * a[s[2]];
  }
  return total;
}

/// <S> (bipartite) or <S'> (tripartite) on a noncontextual assignment.
inline int nc_value_S(const NCAssignment& a, Parties p) {
  int total = 0;
  for (const auto& t : kSTerms) {
    const auto& s = kSequences[t.sequence];
    total += t.sign * a[s[1]] * a[s[2]] * distant_product(t, p, a.distant);
  }
  return total;
}

struct NCBound {
  int bound = 0;
  NCAssignment witness;
  std::uint64_t enumerated = 0;
};

namespace detail {

template <class Eval>
NCBound nc_search(std::size_t n_distant, const Eval& eval, unsigned partitions) {
  const auto n = static_cast<unsigned>(kMerminCount + n_distant);
  const auto best = exhaustive_argmax(
      n, [&](std::uint64_t i) { return eval(NCAssignment::from_index(i, n_distant)); },
      partitions);
  return {static_cast<int>(best.value), NCAssignment::from_index(best.index, n_distant),
          std::uint64_t{1} << n};
}

}  // namespace detail

/// Max of <T> over the 2^9 noncontextual assignments.
inline NCBound max_nchvt_T(unsigned partitions = 1) {
  return detail::nc_search(0, [](const NCAssignment& a) { return nc_value_T(a); }, partitions);
}

/// Max of <S> (2^11 points) or <S'> (2^13 points) over noncontextual
/// Alice values and deterministic distant outcomes.
inline NCBound max_nclhvt_S(Parties p, unsigned partitions = 1) {
  return detail::nc_search(
      distant_count(p), [p](const NCAssignment& a) { return nc_value_S(a, p); }, partitions);
}

/// Max of <T> + <S> (or <T> + <S'>) over joint noncontextual assignments.
inline NCBound max_nc_joint(Parties p, unsigned partitions = 1) {
  return detail::nc_search(
      distant_count(p), [p](const NCAssignment& a) { return nc_value_T(a) + nc_value_S(a, p); },
      partitions);
}

// ---------------------------------------------------------------------------
// Order-dependent local models

/// Observables that open a sequence, each carrying one fresh value.
inline constexpr std::array<Mermin, 6> kFreshObservables = {
    Mermin::C, Mermin::B, Mermin::alpha, Mermin::beta, Mermin::a, Mermin::c};

inline std::size_t fresh_slot(Mermin m) {
  for (std::size_t i = 0; i < kFreshObservables.size(); ++i)
    if (kFreshObservables[i] == m) return i;
  throw InvalidArgument("observable never opens a sequence");
}

/// One deterministic local model: the fresh value of every first-slot
/// observable, the second/third-slot values of each of the 12 sequences,
/// and the distant outcomes.
struct HVAssignment {
  std::array<int, 6> fresh{1, 1, 1, 1, 1, 1};
  std::array<std::array<int, 2>, 12> later{};
  std::array<int, kRemoteCount> distant{1, 1, 1, 1};

  HVAssignment() {
    for (auto& l : later) l = {1, 1};
  }

  int first_value(std::size_t sequence) const {
    return fresh[fresh_slot(kSequences[sequence][0])];
  }
};

/// <T> + <S> (or <T> + <S'>) evaluated term by term.
inline int hv_value(const HVAssignment& h, Parties p) {
  int total = 0;
  for (const auto& t : kTTerms) {
    total += t.sign * h.first_value(t.sequence) * h.later[t.sequence][0] * h.later[t.sequence][1];
  }
  for (const auto& t : kSTerms) {
    total += t.sign * h.later[t.sequence][0] * h.later[t.sequence][1] *
             distant_product(t, p, h.distant);
  }
  return total;
}

struct LhvtBound {
  int bound = 0;
  HVAssignment witness;
  std::uint64_t outer_points = 0;
};

namespace detail {

/// Per-sequence signs of the <T> and <S> terms that use it.
struct SequenceCoefficients {
  int t_sign = 0;
  const STerm* s_term = nullptr;
};

inline std::array<SequenceCoefficients, 12> sequence_coefficients() {
  std::array<SequenceCoefficients, 12> out{};
  for (const auto& t : kTTerms) out[t.sequence].t_sign = t.sign;
  for (const auto& t : kSTerms) out[t.sequence].s_term = &t;
  return out;
}

inline constexpr std::array<std::array<int, 2>, 4> kLaterChoices = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

struct OuterChoice {
  std::array<int, 6> fresh;
  std::array<int, kRemoteCount> distant{1, 1, 1, 1};
};

inline OuterChoice outer_from_index(std::uint64_t idx, std::size_t n_distant) {
  const auto n = static_cast<unsigned>(6 + n_distant);
  OuterChoice o{};
  for (unsigned i = 0; i < 6; ++i) o.fresh[i] = spin(idx, i, n);
  for (unsigned j = 0; j < n_distant; ++j) o.distant[j] = spin(idx, 6 + j, n);
  return o;
}

/// Given the outer choice, the functional splits into one independent
/// summand per sequence; returns the best later-slot choice for each.
inline std::pair<int, std::array<std::size_t, 12>> best_later(
    const OuterChoice& o, Parties p, const std::array<SequenceCoefficients, 12>& coef) {
  int total = 0;
  std::array<std::size_t, 12> choice{};
  for (std::size_t s = 0; s < 12; ++s) {
    const int f = o.fresh[fresh_slot(kSequences[s][0])];
    const int d = distant_product(*coef[s].s_term, p, o.distant);
    int best = -1000;
    for (std::size_t c = 0; c < kLaterChoices.size(); ++c) {
      const int x = kLaterChoices[c][0] * kLaterChoices[c][1];
      const int v = coef[s].t_sign * f * x + coef[s].s_term->sign * x * d;
      if (v > best) {
        best = v;
        choice[s] = c;
      }
    }
    total += best;
  }
  return {total, choice};
}

}  // namespace detail

/// Max of <T> + <S> (or <T> + <S'>) over all HVAssignments, by enumerating
/// the 2^6 fresh values times the distant outcomes and optimizing each
/// sequence's later slots independently.
inline LhvtBound max_lhvt_total(Parties p, unsigned partitions = 1) {
  const auto coef = detail::sequence_coefficients();
  const std::size_t nd = distant_count(p);
  const auto n = static_cast<unsigned>(6 + nd);
  const auto best = exhaustive_argmax(
      n,
      [&](std::uint64_t i) { return detail::best_later(detail::outer_from_index(i, nd), p, coef).first; },
      partitions);

  const auto outer = detail::outer_from_index(best.index, nd);
  const auto [value, choice] = detail::best_later(outer, p, coef);
  LhvtBound r;
  r.bound = value;
  r.outer_points = std::uint64_t{1} << n;
  r.witness.fresh = outer.fresh;
  r.witness.distant = outer.distant;
  for (std::size_t s = 0; s < 12; ++s) r.witness.later[s] = detail::kLaterChoices[choice[s]];
  return r;
}

/// Value the decomposed optimizer assigns to a given point (no
/// maximization), for cross-checking against hv_value.
inline int hv_value_decomposed(const HVAssignment& h, Parties p) {
  const auto coef = detail::sequence_coefficients();
  int total = 0;
  for (std::size_t s = 0; s < 12; ++s) {
    const int f = h.first_value(s);
    const int d = distant_product(*coef[s].s_term, p, h.distant);
    const int x = h.later[s][0] * h.later[s][1];
    total += coef[s].t_sign * f * x + coef[s].s_term->sign * x * d;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Behavior tables

/// Probabilities of sequential measurements of each row/column context, over
/// the eight outcome triples ordered (+,+,+), (+,+,-), ..., (-,-,-), with the
/// outcomes listed in the context's own order.
class BehaviorTable {
 public:
  static constexpr std::array<Sequence, 6> kContexts = {{
      {Mermin::A, Mermin::B, Mermin::C},
      {Mermin::A, Mermin::a, Mermin::alpha},
      {Mermin::a, Mermin::b, Mermin::c},
      {Mermin::B, Mermin::b, Mermin::beta},
      {Mermin::alpha, Mermin::beta, Mermin::gamma},
      {Mermin::C, Mermin::c, Mermin::gamma},
  }};

  using Column = std::array<Rational, 8>;

  explicit BehaviorTable(std::array<Column, 6> columns) : columns_(std::move(columns)) {
    for (std::size_t k = 0; k < 6; ++k) {
      Rational sum = 0;
      for (const auto& p : columns_[k]) {
        if (p < Rational(0)) throw InvalidArgument("BehaviorTable: negative probability");
        sum += p;
      }
      if (sum != Rational(1)) throw InvalidArgument("BehaviorTable: context does not sum to 1");
    }
  }

  /// The locally contextual, nondisturbing table that reaches <S> = 12.
  static BehaviorTable contextual() {
    const Rational h(1, 2);
    const Column ends = {h, 0, 0, 0, 0, 0, 0, h};    // (+,+,+), (-,-,-)
    const Column mid = {0, 0, h, 0, 0, h, 0, 0};     // (+,-,+), (-,+,-)
    const Column outer = {0, h, 0, 0, 0, 0, h, 0};   // (+,+,-), (-,-,+)
    return BehaviorTable({ends, mid, outer, ends, ends, mid});
  }

  static BehaviorTable uniform() {
    Column u;
    u.fill(Rational(1, 8));
    return BehaviorTable({u, u, u, u, u, u});
  }

  const Column& column(std::size_t k) const { return columns_.at(k); }

  /// P(outcome of m = +1) within context k.
  Rational marginal_plus(std::size_t k, Mermin m) const {
    const auto pos = position(k, m);
    Rational p = 0;
    for (std::uint64_t i = 0; i < 8; ++i)
      if (spin(i, pos, 3) == 1) p += columns_[k][i];
    return p;
  }

  /// Exact check that every observable's marginal agrees across the two
  /// contexts containing it.
  bool no_disturbance() const {
    for (auto m : kAllMermin) {
      std::optional<Rational> seen;
      for (std::size_t k = 0; k < 6; ++k) {
        if (!contains(k, m)) continue;
        const auto p = marginal_plus(k, m);
        if (seen && *seen != p) return false;
        seen = p;
      }
    }
    return true;
  }

  /// E[xy] read from the unique context holding both observables.
  Rational pair_correlator(Mermin x, Mermin y) const {
    for (std::size_t k = 0; k < 6; ++k) {
      if (!contains(k, x) || !contains(k, y)) continue;
      const auto px = position(k, x), py = position(k, y);
      Rational e = 0;
      for (std::uint64_t i = 0; i < 8; ++i) e += columns_[k][i] * (spin(i, px, 3) * spin(i, py, 3));
      return e;
    }
    throw InvalidArgument("BehaviorTable: observables share no context");
  }

 private:
  bool contains(std::size_t k, Mermin m) const {
    return std::find(kContexts[k].begin(), kContexts[k].end(), m) != kContexts[k].end();
  }
  unsigned position(std::size_t k, Mermin m) const {
    const auto it = std::find(kContexts[k].begin(), kContexts[k].end(), m);
    if (it == kContexts[k].end()) throw InvalidArgument("BehaviorTable: observable not in context");
    return static_cast<unsigned>(it - kContexts[k].begin());
  }

  std::array<Column, 6> columns_;
};

/// <S> (or <S'>) with Alice's pair correlators taken from `table` and
/// deterministic distant outcomes. Rejects tables that disturb.
inline Rational evaluate_behavior_S(const BehaviorTable& table,
                                    const std::array<int, kRemoteCount>& distant, Parties p) {
  if (!table.no_disturbance()) {
    throw InvalidArgument("evaluate_behavior_S: table violates no-disturbance");
  }
  Rational total = 0;
  for (const auto& t : kSTerms) {
    const auto& s = kSequences[t.sequence];
    total += table.pair_correlator(s[1], s[2]) * (t.sign * distant_product(t, p, distant));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Bell sums

/// coef * value(alice) * product of value(remotes).
struct BellTerm {
  int coef;
  Mermin alice;
  std::array<Remote, 2> remotes;
  std::size_t n_remotes;
};

namespace bell {
constexpr BellTerm t(int coef, Mermin m, Remote r) { return {coef, m, {r, r}, 1}; }
constexpr BellTerm t(int coef, Mermin m, Remote r1, Remote r2) { return {coef, m, {r1, r2}, 2}; }
}  // namespace bell

using Bell4 = std::array<BellTerm, 4>;

inline const std::array<Bell4, 3>& chsh_inequalities() {
  using namespace bell;
  using M = Mermin;
  using R = Remote;
  static const std::array<Bell4, 3> k = {{
      {t(1, M::C, R::P), t(1, M::C, R::Q), t(1, M::alpha, R::P), t(-1, M::alpha, R::Q)},
      {t(1, M::beta, R::P), t(1, M::beta, R::Q), t(1, M::c, R::P), t(-1, M::c, R::Q)},
      {t(1, M::B, R::P), t(1, M::B, R::Q), t(1, M::a, R::P), t(-1, M::a, R::Q)},
  }};
  return k;
}

/// The twelve-term sum of the three CHSH expressions (bipartite), or its
/// tripartite counterpart with Charlie's settings.
inline std::vector<BellTerm> bell_sum(Parties p) {
  using namespace bell;
  using M = Mermin;
  using R = Remote;
  if (p == Parties::Bipartite) {
    return {t(1, M::C, R::P),    t(1, M::C, R::Q),    t(1, M::alpha, R::P), t(-1, M::alpha, R::Q),
            t(1, M::beta, R::P), t(1, M::beta, R::Q), t(1, M::c, R::P),     t(-1, M::c, R::Q),
            t(1, M::B, R::P),    t(1, M::B, R::Q),    t(1, M::a, R::P),     t(-1, M::a, R::Q)};
  }
  return {t(1, M::C, R::P, R::V),    t(1, M::C, R::Q, R::U),    t(1, M::alpha, R::P, R::U),
          t(-1, M::alpha, R::Q, R::V), t(1, M::beta, R::P, R::V), t(1, M::beta, R::Q, R::U),
          t(1, M::c, R::P, R::U),    t(-1, M::c, R::Q, R::V),   t(1, M::B, R::P, R::V),
          t(1, M::B, R::Q, R::U),    t(1, M::a, R::P, R::U),    t(-1, M::a, R::Q, R::V)};
}

struct DeterministicMax {
  int value = 0;
  std::uint64_t points = 0;
};

/// Max over deterministic ±1 values of the observables a Bell expression
/// mentions.
inline DeterministicMax max_deterministic(std::span<const BellTerm> terms) {
  std::vector<Mermin> alice;
  std::vector<Remote> remotes;
  for (const auto& t : terms) {
    if (std::find(alice.begin(), alice.end(), t.alice) == alice.end()) alice.push_back(t.alice);
    for (std::size_t r = 0; r < t.n_remotes; ++r)
      if (std::find(remotes.begin(), remotes.end(), t.remotes[r]) == remotes.end())
        remotes.push_back(t.remotes[r]);
  }
  const auto n = static_cast<unsigned>(alice.size() + remotes.size());
  auto var_of = [&](auto x, const auto& list) {
    return static_cast<unsigned>(std::find(list.begin(), list.end(), x) - list.begin());
  };
  const auto best = exhaustive_argmax(n, [&](std::uint64_t i) {
    int total = 0;
    for (const auto& t : terms) {
      int v = t.coef * spin(i, var_of(t.alice, alice), n);
      for (std::size_t r = 0; r < t.n_remotes; ++r)
        v *= spin(i, static_cast<unsigned>(alice.size()) + var_of(t.remotes[r], remotes), n);
      total += v;
    }
    return total;
  });
  return {static_cast<int>(best.value), std::uint64_t{1} << n};
}

inline int max_chsh(std::size_t k) {
  const auto& ineq = chsh_inequalities().at(k);
  return max_deterministic(ineq).value;
}

inline int max_bell_sum(Parties p) {
  const auto terms = bell_sum(p);
  return max_deterministic(terms).value;
}

// ---------------------------------------------------------------------------
// Algebraic relations behind the LHVT bound
//
// Each relation bounds two Bell terms (fresh values) from below by the two
// <T> terms and the two conditioned <S> terms of a pair of sequences:
//   lhs[0] + lhs[1] >= sum over rhs of (t_coef * first*x*y + s_coef * x*y*D) - slack

struct RelationRhs {
  std::size_t sequence;
  int t_coef;
  int s_coef;
  std::array<Remote, 2> remotes;
  std::size_t n_remotes;
};

struct AlgebraicRelation {
  std::string name;
  std::array<BellTerm, 2> lhs;
  std::array<RelationRhs, 2> rhs;
  int slack = 2;
};

struct RelationCheck {
  std::string name;
  bool holds = true;
  std::uint64_t points = 0;
  /// Variable assignment that breaks the relation, if any.
  std::optional<std::vector<std::pair<std::string, int>>> counterexample;
};

namespace detail {
constexpr RelationRhs rhs(std::size_t seq, int tc, int sc, Remote r) { return {seq, tc, sc, {r, r}, 1}; }
constexpr RelationRhs rhs(std::size_t seq, int tc, int sc, Remote r1, Remote r2) {
  return {seq, tc, sc, {r1, r2}, 2};
}
}  // namespace detail

inline std::vector<AlgebraicRelation> algebraic_relations(Parties p) {
  using namespace bell;
  using detail::rhs;
  using M = Mermin;
  using R = Remote;
  // Sequence indices refer to kSequences: 0 CAB, 1 BAC, 2 αβγ, 3 βαγ,
  // 4 aAα, 5 αAa, 6 Bbβ, 7 βBb, 8 cab, 9 abc, 10 Ccγ, 11 cCγ.
  if (p == Parties::Bipartite) {
    return {
        {"CP+BP", {t(1, M::C, R::P), t(1, M::B, R::P)}, {rhs(0, 1, 1, R::P), rhs(1, 1, 1, R::P)}},
        {"αP+βP", {t(1, M::alpha, R::P), t(1, M::beta, R::P)}, {rhs(2, 1, 1, R::P), rhs(3, 1, 1, R::P)}},
        {"aP-αQ", {t(1, M::a, R::P), t(-1, M::alpha, R::Q)}, {rhs(4, 1, 1, R::P), rhs(5, 1, -1, R::Q)}},
        {"BQ+βQ", {t(1, M::B, R::Q), t(1, M::beta, R::Q)}, {rhs(6, 1, 1, R::Q), rhs(7, 1, 1, R::Q)}},
        {"CQ-cQ", {t(1, M::C, R::Q), t(-1, M::c, R::Q)}, {rhs(10, -1, -1, R::Q), rhs(11, -1, 1, R::Q)}},
        {"cP-aQ", {t(1, M::c, R::P), t(-1, M::a, R::Q)}, {rhs(8, 1, 1, R::P), rhs(9, 1, -1, R::Q)}},
    };
  }
  return {
      {"CPV+BPV", {t(1, M::C, R::P, R::V), t(1, M::B, R::P, R::V)},
       {rhs(0, 1, 1, R::P, R::V), rhs(1, 1, 1, R::P, R::V)}},
      {"αPU+βPV", {t(1, M::alpha, R::P, R::U), t(1, M::beta, R::P, R::V)},
       {rhs(2, 1, 1, R::P, R::U), rhs(3, 1, 1, R::P, R::V)}},
      {"aPU-αQV", {t(1, M::a, R::P, R::U), t(-1, M::alpha, R::Q, R::V)},
       {rhs(4, 1, 1, R::P, R::U), rhs(5, 1, -1, R::Q, R::V)}},
      {"BQU+βQU", {t(1, M::B, R::Q, R::U), t(1, M::beta, R::Q, R::U)},
       {rhs(6, 1, 1, R::Q, R::U), rhs(7, 1, 1, R::Q, R::U)}},
      {"CQU-cQV", {t(1, M::C, R::Q, R::U), t(-1, M::c, R::Q, R::V)},
       {rhs(10, -1, -1, R::Q, R::U), rhs(11, -1, 1, R::Q, R::V)}},
      {"cPU-aQV", {t(1, M::c, R::P, R::U), t(-1, M::a, R::Q, R::V)},
       {rhs(8, 1, 1, R::P, R::U), rhs(9, 1, -1, R::Q, R::V)}},
  };
}

/// Checks a relation pointwise over every ±1 assignment of the variables it
/// mentions: two fresh values, the later slots of both sequences, and the
/// distant outcomes used.
inline RelationCheck verify_relation(const AlgebraicRelation& rel) {
  // Variables: fresh[0], fresh[1], later[0][0..1], later[1][0..1], remotes...
  std::vector<Remote> remotes;
  auto note_remote = [&](Remote r) {
    if (std::find(remotes.begin(), remotes.end(), r) == remotes.end()) remotes.push_back(r);
  };
  for (const auto& t : rel.lhs)
    for (std::size_t r = 0; r < t.n_remotes; ++r) note_remote(t.remotes[r]);
  for (const auto& t : rel.rhs)
    for (std::size_t r = 0; r < t.n_remotes; ++r) note_remote(t.remotes[r]);
  std::sort(remotes.begin(), remotes.end());

  std::array<std::size_t, 2> lhs_fresh{};
  for (std::size_t k = 0; k < 2; ++k) {
    bool found = false;
    for (std::size_t j = 0; j < 2; ++j)
      if (kSequences[rel.rhs[j].sequence][0] == rel.lhs[k].alice) {
        lhs_fresh[k] = j;
        found = true;
      }
    if (!found) throw InvalidArgument(rel.name + ": Bell term does not open a sequence");
  }

  const auto n = static_cast<unsigned>(6 + remotes.size());
  auto remote_var = [&](Remote r) {
    return 6u + static_cast<unsigned>(std::find(remotes.begin(), remotes.end(), r) - remotes.begin());
  };
  auto remote_product = [&](std::uint64_t i, const auto& term) {
    int v = 1;
    for (std::size_t r = 0; r < term.n_remotes; ++r) v *= spin(i, remote_var(term.remotes[r]), n);
    return v;
  };

  RelationCheck check{rel.name, true, std::uint64_t{1} << n, std::nullopt};
  for (std::uint64_t i = 0; i < check.points; ++i) {
    int lhs = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      lhs += rel.lhs[k].coef * spin(i, static_cast<unsigned>(lhs_fresh[k]), n) * remote_product(i, rel.lhs[k]);
    }
    int rhs = -rel.slack;
    for (std::size_t j = 0; j < 2; ++j) {
      const int f = spin(i, static_cast<unsigned>(j), n);
      const int xy = spin(i, 2 + 2 * static_cast<unsigned>(j), n) * spin(i, 3 + 2 * static_cast<unsigned>(j), n);
      rhs += rel.rhs[j].t_coef * f * xy + rel.rhs[j].s_coef * xy * remote_product(i, rel.rhs[j]);
    }
    if (lhs < rhs) {
      std::vector<std::pair<std::string, int>> cx;
      for (std::size_t j = 0; j < 2; ++j) {
        const auto& seq = kSequences[rel.rhs[j].sequence];
        const auto tag = sequence_text(seq) + ":";
        cx.emplace_back(tag + std::string(symbol(seq[0])) + "^", spin(i, static_cast<unsigned>(j), n));
        cx.emplace_back(tag + std::string(symbol(seq[1])), spin(i, 2 + 2 * static_cast<unsigned>(j), n));
        cx.emplace_back(tag + std::string(symbol(seq[2])), spin(i, 3 + 2 * static_cast<unsigned>(j), n));
      }
      for (auto r : remotes) cx.emplace_back(std::string(symbol(r)), spin(i, remote_var(r), n));
      check.holds = false;
      check.counterexample = std::move(cx);
      return check;
    }
  }
  return check;
}

inline std::vector<RelationCheck> verify_algebraic_relations(Parties p) {
  std::vector<RelationCheck> out;
  for (const auto& rel : algebraic_relations(p)) out.push_back(verify_relation(rel));
  return out;
}

}  // namespace ctxlab

#endif  // CTXLAB_HV_BOUNDS_HPP
