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

#ifndef CTXLAB_STATE_HPP
#define CTXLAB_STATE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ctxlab/error.hpp"
#include "ctxlab/tensor.hpp"

namespace ctxlab {

enum class Party { Alice, Bob, Charlie };

inline constexpr double kPsdTol = 1e-10;

inline double min_eigenvalue(const ComplexMatrix& hermitian) {
  const auto n = static_cast<Eigen::Index>(hermitian.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = hermitian(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// Density operator on 1-4 qubits with a qubit -> party assignment.
/// Construction validates Hermiticity, unit trace and positivity.
class QuantumState {
 public:
  QuantumState(ComplexMatrix density, std::vector<Party> party_map)
      : density_(std::move(density)), party_map_(std::move(party_map)) {
    const std::size_t n = qubit_count(density_.dim());
    if (party_map_.size() != n) {
      throw InvalidArgument("QuantumState: party map size does not match qubit count");
    }
    if (!is_hermitian(density_)) throw InvalidArgument("QuantumState: density is not Hermitian");
    const Complex tr = density_.trace();
    if (std::abs(tr - Complex(1.0)) > kStructuralTol) {
      throw InvalidArgument("QuantumState: trace is not 1");
    }
    if (min_eigenvalue(density_) < -kPsdTol) {
      throw InvalidArgument("QuantumState: density is not positive semidefinite");
    }
  }

  /// Pure state |psi><psi|; `amplitudes` need not be normalized.
  static QuantumState pure(std::span<const Complex> amplitudes, std::vector<Party> party_map) {
    return QuantumState(projector_onto(amplitudes), std::move(party_map));
  }

  static ComplexMatrix projector_onto(std::span<const Complex> amplitudes) {
    double norm2 = 0.0;
    for (const auto& z : amplitudes) norm2 += std::norm(z);
    if (norm2 <= 0.0) throw InvalidArgument("QuantumState: zero vector");
    ComplexMatrix m(amplitudes.size());
    for (std::size_t r = 0; r < amplitudes.size(); ++r)
      for (std::size_t c = 0; c < amplitudes.size(); ++c)
        m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
    return m;
  }

  std::size_t n_qubits() const { return party_map_.size(); }
  const ComplexMatrix& density() const { return density_; }
  const std::vector<Party>& party_map() const { return party_map_; }
  Party party_of(std::size_t qubit) const { return party_map_.at(qubit); }

  /// Re Tr(rho O) for a full-register operator O.
  double expectation(const ComplexMatrix& op) const { return (density_ * op).trace().real(); }

 private:
  ComplexMatrix density_;
  std::vector<Party> party_map_;
};

}  // namespace ctxlab

#endif  // CTXLAB_STATE_HPP
