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

// Observables, states and correlation expressions of the three scenarios:
//
//   singlet  Alice holds an ancilla (qubit 0) and half of a noisy singlet
//            (qubit 1); Bob holds qubit 2.
//   nonmax   as singlet, with the pair in d1|01> - d2|10>.
//   ghz      Alice's ancilla plus one qubit of a three-qubit GHZ-type state;
//            Bob holds qubit 2, Charlie qubit 3.
//
// Qubit indices are 0-based; qubit 0 is the leftmost tensor factor.

#ifndef CTXLAB_SCENARIO_HPP
#define CTXLAB_SCENARIO_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctxlab/error.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/state.hpp"
#include "ctxlab/tensor.hpp"
#include "ctxlab/terms.hpp"

namespace ctxlab {

inline constexpr double kDefaultChi = std::numbers::pi / 8;

/// The Peres-Mermin square on Alice's qubits 0 and 1:
///
///   A = z1     B = z2     C = z1 z2
///   a = x2     b = x1     c = x1 x2
///   α = z1 x2  β = x1 z2  γ = y1 y2
class MerminSquare {
 public:
  static constexpr std::array<std::array<Mermin, 3>, 3> kRows = {{
      {Mermin::A, Mermin::B, Mermin::C},
      {Mermin::a, Mermin::b, Mermin::c},
      {Mermin::alpha, Mermin::beta, Mermin::gamma},
  }};
  static constexpr std::array<std::array<Mermin, 3>, 3> kColumns = {{
      {Mermin::A, Mermin::a, Mermin::alpha},
      {Mermin::B, Mermin::b, Mermin::beta},
      {Mermin::C, Mermin::c, Mermin::gamma},
  }};

  MerminSquare()
      : obs_{make(Mermin::A, "ZI"), make(Mermin::B, "IZ"), make(Mermin::C, "ZZ"),
             make(Mermin::a, "IX"), make(Mermin::b, "XI"), make(Mermin::c, "XX"),
             make(Mermin::alpha, "ZX"), make(Mermin::beta, "XZ"), make(Mermin::gamma, "YY")} {}

  const Observable& operator[](Mermin m) const { return obs_[index(m)]; }

  /// Lookup by display symbol ("α") or ASCII name ("alpha").
  const Observable& at(std::string_view name) const {
    for (auto m : kAllMermin) {
      if (symbol(m) == name || ascii_name(m) == name) return (*this)[m];
    }
    throw InvalidArgument("MerminSquare: no observable named '" + std::string(name) + "'");
  }

 private:
  static Observable make(Mermin m, std::string_view paulis) {
    auto o = pauli_string(paulis, 2);
    return Observable(std::string(symbol(m)), o.qubits(), o.matrix());
  }

  std::array<Observable, kMerminCount> obs_;
};

/// Single-qubit observable n·σ; `n` must be a unit vector.
inline Observable bloch_observable(std::string name, std::size_t qubit, double nx, double ny,
                                   double nz) {
  if (std::abs(nx * nx + ny * ny + nz * nz - 1.0) > kStructuralTol) {
    throw InvalidArgument("bloch_observable: direction is not a unit vector");
  }
  auto m = pauli::X() * nx + pauli::Y() * ny + pauli::Z() * nz;
  return Observable(std::move(name), {qubit}, std::move(m));
}

/// Bob's settings P, Q and, in the tripartite scenario, Charlie's U, V.
struct DistantSettings {
  Observable P;
  Observable Q;
  std::optional<Observable> U;
  std::optional<Observable> V;

  Parties parties() const { return U && V ? Parties::Tripartite : Parties::Bipartite; }

  const Observable& get(Remote r) const {
    switch (r) {
      case Remote::P: return P;
      case Remote::Q: return Q;
      case Remote::U:
        if (!U) throw InvalidArgument("DistantSettings: U is not set");
        return *U;
      case Remote::V:
        if (!V) throw InvalidArgument("DistantSettings: V is not set");
        return *V;
    }
    throw InvalidArgument("DistantSettings: bad setting");
  }
};

/// P = -(z3 + x3)/√2, Q = -(z3 - x3)/√2.
inline DistantSettings bob_settings_singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  return {bloch_observable("P", 2, -h, 0, -h), bloch_observable("Q", 2, h, 0, -h), {}, {}};
}

/// Settings for d1|01> - d2|10> with d1 = cos(theta), d2 = sin(theta):
/// P = -cos(t) z3 - sin(t) x3 and Q = -cos(t) z3 + sin(t) x3, where
/// cos(t) = 1/√(1 + 4 (d1 d2)^2) and sin(t) >= 0. Reduces to
/// bob_settings_singlet() at theta = π/4.
inline DistantSettings bob_settings_nonmax(double theta) {
  const double d1d2 = std::cos(theta) * std::sin(theta);
  const double cos_t = 1.0 / std::sqrt(1.0 + 4.0 * d1d2 * d1d2);
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
  return {bloch_observable("P", 2, -sin_t, 0, -cos_t),
          bloch_observable("Q", 2, sin_t, 0, -cos_t), {}, {}};
}

/// P = z3, Q = x3; U = z4, V = x4.
inline DistantSettings ghz_settings() {
  return {bloch_observable("P", 2, 0, 0, 1), bloch_observable("Q", 2, 1, 0, 0),
          bloch_observable("U", 3, 0, 0, 1), bloch_observable("V", 3, 1, 0, 0)};
}

// ---------------------------------------------------------------------------
// States

namespace detail {

inline ComplexMatrix ancilla(double chi) {
  const std::array<Complex, 2> amp = {std::cos(chi), std::sin(chi)};
  return QuantumState::projector_onto(amp);
}

inline ComplexMatrix white_noise_mix(const ComplexMatrix& pure, double visibility) {
  const auto dim = pure.dim();
  return pure * visibility + ComplexMatrix::identity(dim) * ((1.0 - visibility) / double(dim));
}

inline void check_visibility(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("visibility must lie in [0, 1]");
}

}  // namespace detail

/// |χ>_1 ⊗ [v |ψ-><ψ-| + (1-v) I/4]_23 with |χ> = cos(chi)|0> + sin(chi)|1>.
inline QuantumState build_state_singlet(double chi_angle = kDefaultChi, double visibility = 1.0) {
  detail::check_visibility(visibility);
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> singlet = {0, h, -h, 0};
  auto pair = detail::white_noise_mix(QuantumState::projector_onto(singlet), visibility);
  return QuantumState(kron(detail::ancilla(chi_angle), pair),
                      {Party::Alice, Party::Alice, Party::Bob});
}

/// Ancilla ⊗ (cos θ |01> - sin θ |10>), optionally mixed with white noise.
inline QuantumState build_state_nonmax(double theta, double chi_angle = kDefaultChi,
                                       double visibility = 1.0) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-15)) {
    throw InvalidArgument("theta must lie in [0, π/2]");
  }
  detail::check_visibility(visibility);
  const std::array<Complex, 4> amp = {0, std::cos(theta), -std::sin(theta), 0};
  auto pair = detail::white_noise_mix(QuantumState::projector_onto(amp), visibility);
  return QuantumState(kron(detail::ancilla(chi_angle), pair),
                      {Party::Alice, Party::Alice, Party::Bob});
}

/// The three-qubit state shared by Alice, Bob and Charlie (qubits 2-4 in
/// one-based numbering), before noise.
inline std::array<Complex, 8> ghz_amplitudes() {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  return {s, s, s, -s, s, -s, -s, -s};
}

/// Ancilla ⊗ [v |ψ><ψ| + (1-v) I/8] on the GHZ triple.
inline QuantumState build_state_ghz(double visibility = 1.0, double chi_angle = kDefaultChi) {
  detail::check_visibility(visibility);
  const auto amp = ghz_amplitudes();
  auto triple = detail::white_noise_mix(QuantumState::projector_onto(amp), visibility);
  return QuantumState(kron(detail::ancilla(chi_angle), triple),
                      {Party::Alice, Party::Alice, Party::Bob, Party::Charlie});
}

// ---------------------------------------------------------------------------
// Correlation expressions

/// One signed term: the Alice observables are measured in `sequence` order,
/// the outcomes at `product_mask` positions are multiplied together with
/// every `distant` outcome. Positions outside the mask are measured but
/// marginalized (they condition the term, without post-selection).
struct CorrelationSpec {
  std::vector<Observable> sequence;
  std::vector<std::size_t> product_mask;
  std::vector<Observable> distant;
  int sign = 1;
  std::string label;

  /// Throws unless the Alice sequence is mutually compatible and the mask
  /// indexes the sequence.
  void validate() const {
    for (std::size_t i = 0; i < sequence.size(); ++i)
      for (std::size_t j = i + 1; j < sequence.size(); ++j)
        if (!commutes(sequence[i], sequence[j])) {
          throw IncompatibleObservables(label + ": " + sequence[i].name() + " and " +
                                        sequence[j].name() + " do not commute");
        }
    for (auto p : product_mask) {
      if (p >= sequence.size()) throw InvalidArgument(label + ": mask position out of range");
    }
    if (sign != 1 && sign != -1) throw InvalidArgument(label + ": sign must be ±1");
  }
};

struct InequalityExpression {
  std::string name;
  std::vector<CorrelationSpec> terms;
  Rational classical_bound;
};

namespace detail {

inline std::vector<Observable> resolve(const MerminSquare& sq, const Sequence& seq) {
  return {sq[seq[0]], sq[seq[1]], sq[seq[2]]};
}

}  // namespace detail

inline InequalityExpression build_expression_T(const MerminSquare& sq = MerminSquare{}) {
  InequalityExpression e{"T", {}, Rational(8)};
  for (const auto& t : kTTerms) {
    e.terms.push_back({detail::resolve(sq, kSequences[t.sequence]), {0, 1, 2}, {}, t.sign,
                       t_label(t)});
  }
  return e;
}

/// <S> (bipartite settings) or <S'> (tripartite settings), chosen from the
/// parties present in `settings`.
inline InequalityExpression build_expression_distant(const DistantSettings& settings,
                                                     const MerminSquare& sq = MerminSquare{}) {
  const Parties parties = settings.parties();
  InequalityExpression e{parties == Parties::Bipartite ? "S" : "S'", {}, Rational(12)};
  for (const auto& t : kSTerms) {
    std::vector<Observable> distant;
    if (parties == Parties::Bipartite) {
      distant.push_back(settings.get(t.bob));
    } else {
      distant.push_back(settings.get(t.bob_charlie[0]));
      distant.push_back(settings.get(t.bob_charlie[1]));
    }
    e.terms.push_back({detail::resolve(sq, kSequences[t.sequence]), {1, 2}, std::move(distant),
                       t.sign, s_label(t, parties)});
  }
  return e;
}

inline InequalityExpression build_expression_S(const DistantSettings& settings,
                                               const MerminSquare& sq = MerminSquare{}) {
  if (settings.parties() != Parties::Bipartite) {
    throw InvalidArgument("build_expression_S: expects Bob-only settings");
  }
  return build_expression_distant(settings, sq);
}

inline InequalityExpression build_expression_S_prime(const DistantSettings& settings,
                                                     const MerminSquare& sq = MerminSquare{}) {
  if (settings.parties() != Parties::Tripartite) {
    throw InvalidArgument("build_expression_S_prime: Charlie's settings U, V are required");
  }
  return build_expression_distant(settings, sq);
}

/// Concatenates terms; the combined classical bound is the LHVT bound 18.
inline InequalityExpression combine(const InequalityExpression& first,
                                    const InequalityExpression& second,
                                    Rational bound = Rational(18)) {
  InequalityExpression e{first.name + "+" + second.name, first.terms, bound};
  e.terms.insert(e.terms.end(), second.terms.begin(), second.terms.end());
  return e;
}

}  // namespace ctxlab

#endif  // CTXLAB_SCENARIO_HPP
