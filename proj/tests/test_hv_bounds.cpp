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

#include "ctxlab/hv_bounds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"

using namespace ctxlab;

namespace {

// Oracle: the expressions transcribed as text, evaluated by a separate
// brute-force loop. Letters: x = α, y = β, g = γ; "|W" marks the
// conditioning observable, which is not multiplied.
const std::vector<std::string> kTText = {"+CAB", "+BAC", "+xyg", "+yxg", "+aAx", "+xAa",
                                         "+Bby", "+yBb", "+cab", "+abc", "-Ccg", "-cCg"};
const std::vector<std::string> kSText = {"+ABP|C", "+ACP|B", "+ygP|x", "+xgP|y", "+AxP|a", "-AaQ|x",
                                         "+byQ|B", "+BbQ|y", "-cgQ|C", "+CgQ|c", "+abP|c", "-bcQ|a"};
const std::vector<std::string> kSPrimeText = {
    "+ABPV|C", "+ACPV|B", "+ygPU|x", "+xgPV|y", "+AxPU|a", "-AaQV|x",
    "+byQU|B", "+BbQU|y", "-cgQU|C", "+CgQV|c", "+abPU|c", "-bcQV|a"};
const std::string kAliceLetters = "ABCabcxyg";  // same order as Mermin enum
const std::string kRemoteLetters = "PQUV";

int text_value(const std::vector<std::string>& terms, const std::map<char, int>& v) {
  int total = 0;
  for (const auto& t : terms) {
    int prod = t[0] == '-' ? -1 : 1;
    for (std::size_t i = 1; i < t.size() && t[i] != '|'; ++i) prod *= v.at(t[i]);
    total += prod;
  }
  return total;
}

std::map<char, int> values_of(const NCAssignment& a) {
  std::map<char, int> v;
  for (std::size_t i = 0; i < 9; ++i) v[kAliceLetters[i]] = a.alice[i];
  for (std::size_t j = 0; j < 4; ++j) v[kRemoteLetters[j]] = a.distant[j];
  return v;
}

int oracle_max(const std::vector<std::vector<std::string>>& exprs, int n_remotes) {
  int best = -1000;
  const int n = 9 + n_remotes;
  for (int code = 0; code < (1 << n); ++code) {
    std::map<char, int> v;
    for (int i = 0; i < n; ++i) {
      const char name = i < 9 ? kAliceLetters[i] : kRemoteLetters[i - 9];
      v[name] = (code >> i) & 1 ? -1 : 1;
    }
    for (int j = n_remotes; j < 4; ++j) v[kRemoteLetters[j]] = 1;
    int total = 0;
    for (const auto& e : exprs) total += text_value(e, v);
    best = std::max(best, total);
  }
  return best;
}

HVAssignment random_hv(std::mt19937_64& rng) {
  std::bernoulli_distribution coin;
  auto pm = [&] { return coin(rng) ? 1 : -1; };
  HVAssignment h;
  for (auto& f : h.fresh) f = pm();
  for (auto& l : h.later) l = {pm(), pm()};
  for (auto& d : h.distant) d = pm();
  return h;
}

}  // namespace

TEST(noncontextual, T_and_S_match_text_oracle_pointwise) {
  for (std::uint64_t i = 0; i < (1u << 13); ++i) {
    const auto a = NCAssignment::from_index(i, 4);
    const auto v = values_of(a);
    ASSERT_EQ(nc_value_T(a), text_value(kTText, v));
    ASSERT_EQ(nc_value_S(a, Parties::Bipartite), text_value(kSText, v));
    ASSERT_EQ(nc_value_S(a, Parties::Tripartite), text_value(kSPrimeText, v));
  }
}

TEST(noncontextual, T_bound_is_eight) {
  const auto r = max_nchvt_T();
  EXPECT_EQ(r.bound, 8);
  EXPECT_EQ(r.bound, oracle_max({kTText}, 0));
  EXPECT_EQ(nc_value_T(r.witness), 8);
  EXPECT_EQ(r.enumerated, 512u);
  // First maximizer in enumeration order is the all-(+1) point.
  EXPECT_EQ(r.witness.alice, (std::array<int, 9>{1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(noncontextual, all_ones_point) {
  const NCAssignment ones;
  // T: ten + terms, two - terms.
  EXPECT_EQ(nc_value_T(ones), 10 - 2);
  // S: nine + terms, three - terms.
  EXPECT_EQ(nc_value_S(ones, Parties::Bipartite), 9 - 3);
}

TEST(noncontextual, gamma_flipped_point) {
  NCAssignment a;
  a.alice[index(Mermin::gamma)] = -1;
  // γ appears in αβγ, βαγ (+ terms -> -1 each) and Ccγ, cCγ (- terms -> +1 each).
  EXPECT_EQ(nc_value_T(a), 8 - 2 + 2);
  EXPECT_LE(nc_value_T(a), max_nchvt_T().bound);
}

TEST(noncontextual, S_bounds) {
  const auto s = max_nclhvt_S(Parties::Bipartite);
  EXPECT_EQ(s.bound, 10);
  EXPECT_EQ(s.bound, oracle_max({kSText}, 2));
  EXPECT_EQ(s.enumerated, 1u << 11);
  EXPECT_EQ(nc_value_S(s.witness, Parties::Bipartite), 10);

  const auto sp = max_nclhvt_S(Parties::Tripartite);
  EXPECT_EQ(sp.bound, oracle_max({kSPrimeText}, 4));
  EXPECT_EQ(sp.bound, 10);
  EXPECT_LE(sp.bound, 12);
  EXPECT_EQ(sp.enumerated, 1u << 13);
}

TEST(noncontextual, joint_bounds) {
  EXPECT_EQ(max_nc_joint(Parties::Bipartite).bound, oracle_max({kTText, kSText}, 2));
  EXPECT_EQ(max_nc_joint(Parties::Bipartite).bound, 18);
  EXPECT_EQ(max_nc_joint(Parties::Tripartite).bound, oracle_max({kTText, kSPrimeText}, 4));
}

TEST(noncontextual, partitioned_search_is_identical) {
  for (unsigned parts : {2u, 3u, 7u, 16u}) {
    const auto a = max_nclhvt_S(Parties::Tripartite, 1);
    const auto b = max_nclhvt_S(Parties::Tripartite, parts);
    EXPECT_EQ(a.bound, b.bound);
    EXPECT_EQ(a.witness.alice, b.witness.alice);
    EXPECT_EQ(a.witness.distant, b.witness.distant);
    const auto c = max_nchvt_T(parts);
    EXPECT_EQ(c.witness.alice, max_nchvt_T().witness.alice);
  }
}

TEST(exhaustive_argmax, ties_go_to_smallest_index) {
  const auto r = exhaustive_argmax(4, [](std::uint64_t i) { return i % 5 == 3 ? 1 : 0; }, 4);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.index, 3u);
  EXPECT_EQ(spin(0b1000, 0, 4), -1);
  EXPECT_EQ(spin(0b1000, 3, 4), 1);
}

TEST(lhvt, decomposition_matches_naive_evaluation) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto h = random_hv(rng);
    for (auto p : {Parties::Bipartite, Parties::Tripartite}) {
      ASSERT_EQ(hv_value(h, p), hv_value_decomposed(h, p));
    }
  }
}

TEST(lhvt, random_points_never_exceed_the_bound) {
  std::mt19937_64 rng(19);
  const int bound = max_lhvt_total(Parties::Bipartite).bound;
  for (int i = 0; i < 5000; ++i) ASSERT_LE(hv_value(random_hv(rng), Parties::Bipartite), bound);
}

TEST(lhvt, all_ones_point) {
  const HVAssignment h;
  // T: 10 - 2; S: 9 - 3.
  EXPECT_EQ(hv_value(h, Parties::Bipartite), 8 + 6);
  EXPECT_EQ(hv_value_decomposed(h, Parties::Bipartite), 14);
}

TEST(lhvt, bipartite_bound_is_eighteen_and_tight) {
  const auto r = max_lhvt_total(Parties::Bipartite);
  EXPECT_EQ(r.bound, 18);
  EXPECT_EQ(hv_value(r.witness, Parties::Bipartite), 18);
  EXPECT_EQ(r.outer_points, 256u);
  // Every noncontextual model is one of these models, so the joint NC
  // maximum cannot exceed it; here they coincide.
  EXPECT_EQ(max_nc_joint(Parties::Bipartite).bound, r.bound);
}

TEST(lhvt, tripartite_bound) {
  const auto r = max_lhvt_total(Parties::Tripartite);
  EXPECT_LE(r.bound, 18);
  EXPECT_EQ(r.bound, 18);
  EXPECT_EQ(hv_value(r.witness, Parties::Tripartite), r.bound);
  EXPECT_LE(max_nc_joint(Parties::Tripartite).bound, r.bound);
}

TEST(lhvt, partitioned_search_is_identical) {
  const auto a = max_lhvt_total(Parties::Tripartite, 1);
  const auto b = max_lhvt_total(Parties::Tripartite, 5);
  EXPECT_EQ(a.bound, b.bound);
  EXPECT_EQ(a.witness.fresh, b.witness.fresh);
  EXPECT_EQ(a.witness.later, b.witness.later);
  EXPECT_EQ(a.witness.distant, b.witness.distant);
}

TEST(lhvt, bound_equals_twelve_plus_bell_sum) {
  // Per sequence the best later-slot choice contributes 1 + (Bell term),
  // so the maximum is 12 + max Bell sum.
  EXPECT_EQ(max_lhvt_total(Parties::Bipartite).bound, 12 + max_bell_sum(Parties::Bipartite));
  EXPECT_EQ(max_lhvt_total(Parties::Tripartite).bound, 12 + max_bell_sum(Parties::Tripartite));
}

TEST(behavior_table, contextual_table_reaches_twelve) {
  const auto t = BehaviorTable::contextual();
  EXPECT_TRUE(t.no_disturbance());
  EXPECT_EQ(evaluate_behavior_S(t, {1, 1, 1, 1}, Parties::Bipartite), Rational(12));
  EXPECT_GT(evaluate_behavior_S(t, {1, 1, 1, 1}, Parties::Bipartite),
            Rational(max_nclhvt_S(Parties::Bipartite).bound));
}

TEST(behavior_table, contextual_table_marginals_are_uniform) {
  const auto t = BehaviorTable::contextual();
  for (std::size_t k = 0; k < 6; ++k)
    for (auto m : BehaviorTable::kContexts[k]) EXPECT_EQ(t.marginal_plus(k, m), Rational(1, 2));
}

TEST(behavior_table, contextual_table_pair_correlators) {
  const auto t = BehaviorTable::contextual();
  EXPECT_EQ(t.pair_correlator(Mermin::A, Mermin::B), Rational(1));
  EXPECT_EQ(t.pair_correlator(Mermin::A, Mermin::a), Rational(-1));
  EXPECT_EQ(t.pair_correlator(Mermin::c, Mermin::gamma), Rational(-1));
  EXPECT_EQ(t.pair_correlator(Mermin::b, Mermin::c), Rational(-1));
  EXPECT_THROW(t.pair_correlator(Mermin::A, Mermin::beta), InvalidArgument);
}

TEST(behavior_table, uniform_table_gives_zero) {
  EXPECT_EQ(evaluate_behavior_S(BehaviorTable::uniform(), {1, 1, 1, 1}, Parties::Bipartite), Rational(0));
}

TEST(behavior_table, rejects_invalid_tables) {
  BehaviorTable::Column bad_sum{Rational(1, 2), 0, 0, 0, 0, 0, 0, 0};
  BehaviorTable::Column u;
  u.fill(Rational(1, 8));
  EXPECT_THROW(BehaviorTable({bad_sum, u, u, u, u, u}), InvalidArgument);
  BehaviorTable::Column negative{Rational(-1, 8), Rational(3, 8), Rational(1, 8), Rational(1, 8),
                                 Rational(1, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)};
  EXPECT_THROW(BehaviorTable({negative, u, u, u, u, u}), InvalidArgument);

  // A = +1 always in ABC but uniform elsewhere: disturbs.
  BehaviorTable::Column a_plus{Rational(1), 0, 0, 0, 0, 0, 0, 0};
  const BehaviorTable disturbing({a_plus, u, u, u, u, u});
  EXPECT_FALSE(disturbing.no_disturbance());
  EXPECT_THROW(evaluate_behavior_S(disturbing, {1, 1, 1, 1}, Parties::Bipartite), InvalidArgument);
}

TEST(bell, chsh_and_sums) {
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(max_chsh(k), 2);
  EXPECT_EQ(max_bell_sum(Parties::Bipartite), 6);
  EXPECT_EQ(max_bell_sum(Parties::Tripartite), 6);
  const auto terms = bell_sum(Parties::Bipartite);
  EXPECT_EQ(max_deterministic(terms).points, 1u << 8);  // 6 Alice + P, Q
}

TEST(bell, bipartite_sum_is_the_three_chsh_added) {
  std::vector<BellTerm> added;
  for (const auto& c : chsh_inequalities()) added.insert(added.end(), c.begin(), c.end());
  const auto sum = bell_sum(Parties::Bipartite);
  ASSERT_EQ(added.size(), sum.size());
  auto key = [](const BellTerm& t) { return std::make_tuple(t.coef, t.alice, t.remotes[0]); };
  std::vector<std::tuple<int, Mermin, Remote>> ka, kb;
  for (const auto& t : added) ka.push_back(key(t));
  for (const auto& t : sum) kb.push_back(key(t));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  EXPECT_EQ(ka, kb);
}

TEST(relations, all_hold_exhaustively) {
  const std::vector<std::uint64_t> bi_points = {128, 128, 256, 128, 128, 256};
  const auto bi = verify_algebraic_relations(Parties::Bipartite);
  ASSERT_EQ(bi.size(), 6u);
  for (std::size_t i = 0; i < bi.size(); ++i) {
    EXPECT_TRUE(bi[i].holds) << bi[i].name;
    EXPECT_EQ(bi[i].points, bi_points[i]) << bi[i].name;
  }
  const auto tri = verify_algebraic_relations(Parties::Tripartite);
  ASSERT_EQ(tri.size(), 6u);
  for (const auto& r : tri) {
    EXPECT_TRUE(r.holds) << r.name;
    EXPECT_GE(r.points, 256u);
  }
}

TEST(relations, lhs_sums_reproduce_the_bell_sums) {
  for (auto p : {Parties::Bipartite, Parties::Tripartite}) {
    std::vector<std::tuple<int, Mermin, Remote, Remote>> from_rel, from_sum;
    for (const auto& r : algebraic_relations(p))
      for (const auto& t : r.lhs) from_rel.emplace_back(t.coef, t.alice, t.remotes[0], t.remotes[1]);
    for (const auto& t : bell_sum(p)) from_sum.emplace_back(t.coef, t.alice, t.remotes[0], t.remotes[1]);
    std::sort(from_rel.begin(), from_rel.end());
    std::sort(from_sum.begin(), from_sum.end());
    EXPECT_EQ(from_rel, from_sum);
  }
}

TEST(relations, all_ones_point_saturates) {
  // ĈP + B̂P = 2 and ĈAB + B̂AC + ABP + ACP - 2 = 2 at the all-(+1) point.
  const auto rel = algebraic_relations(Parties::Bipartite)[0];
  int lhs = rel.lhs[0].coef + rel.lhs[1].coef;
  int rhs = -rel.slack;
  for (const auto& r : rel.rhs) rhs += r.t_coef + r.s_coef;
  EXPECT_EQ(lhs, 2);
  EXPECT_EQ(rhs, 2);
}

TEST(relations, corrupted_relations_fail_with_counterexample) {
  for (auto p : {Parties::Bipartite, Parties::Tripartite}) {
    for (auto rel : algebraic_relations(p)) {
      auto flipped = rel;
      flipped.rhs[1].s_coef = -flipped.rhs[1].s_coef;
      const auto r1 = verify_relation(flipped);
      EXPECT_FALSE(r1.holds) << rel.name;
      ASSERT_TRUE(r1.counterexample.has_value());
      EXPECT_FALSE(r1.counterexample->empty());

      auto no_slack = rel;
      no_slack.slack = 0;
      EXPECT_FALSE(verify_relation(no_slack).holds) << rel.name;

      auto lhs_flip = rel;
      lhs_flip.lhs[0].coef = -lhs_flip.lhs[0].coef;
      EXPECT_FALSE(verify_relation(lhs_flip).holds) << rel.name;
    }
  }
}

TEST(relations, rejects_bell_term_not_opening_a_sequence) {
  auto rel = algebraic_relations(Parties::Bipartite)[0];
  rel.lhs[0].alice = Mermin::gamma;
  EXPECT_THROW(verify_relation(rel), InvalidArgument);
}
