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

#ifndef CTXLAB_RANDOM_STATE_HPP
#define CTXLAB_RANDOM_STATE_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "ctxlab/state.hpp"
#include "ctxlab/tensor.hpp"

namespace ctxlab {

/// Random full-rank density matrix G G† / Tr(G G†) with Gaussian G.
template <class Rng>
ComplexMatrix random_density(std::size_t n_qubits, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  auto rho = g * g.adjoint();
  // Symmetrize away rounding so the Hermiticity check is exact.
  rho = (rho + rho.adjoint()) * 0.5;
  return rho * (1.0 / rho.trace().real());
}

/// Random state on Alice's two qubits plus Bob's qubit (possibly entangled).
template <class Rng>
QuantumState random_alice_bob_state(Rng& rng) {
  return QuantumState(random_density(3, rng), {Party::Alice, Party::Alice, Party::Bob});
}

}  // namespace ctxlab

#endif  // CTXLAB_RANDOM_STATE_HPP
