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

#ifndef CTXLAB_TENSOR_HPP
#define CTXLAB_TENSOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxlab/error.hpp"

namespace ctxlab {

using Complex = std::complex<double>;

/// Largest register this library handles (4 qubits).
inline constexpr std::size_t kMaxDim = 16;

/// Tolerance for structural identities (Hermiticity, involution, commutation).
inline constexpr double kStructuralTol = 1e-12;

/// Dense square complex matrix, row-major. Dimension is a power of two
/// no larger than kMaxDim.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    check_dim(dim);
  }

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), data_(std::move(entries)) {
    check_dim(dim);
    if (data_.size() != dim * dim) {
      throw InvalidArgument("ComplexMatrix: entry count does not match dim*dim");
    }
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidArgument("ComplexMatrix: non-finite entry");
      }
    }
  }

  /// Row-major literal, e.g. ComplexMatrix{{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : ComplexMatrix(rows.size(), flatten(rows)) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest absolute entry. Used as the comparison norm throughout.
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  static void check_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
      throw InvalidArgument("ComplexMatrix: dimension must be a power of two");
    }
    if (dim > kMaxDim) {
      throw InvalidArgument("ComplexMatrix: dimension exceeds the 4-qubit limit");
    }
  }

  static std::vector<Complex> flatten(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> out;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw InvalidArgument("ComplexMatrix: literal is not square");
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }

  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_) throw InvalidArgument("ComplexMatrix: dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = kStructuralTol) {
  return a.dim() == b.dim() && (a - b).max_abs() <= tol;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol) {
  return approx_equal(m, m.adjoint(), tol);
}

/// Tensor product with `a` as the more significant (left) factor.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() * b.dim() > kMaxDim) {
    throw InvalidArgument("kron: result would exceed the 4-qubit limit");
  }
  const std::size_t nb = b.dim();
  ComplexMatrix out(a.dim() * nb);
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac)
      for (std::size_t br = 0; br < nb; ++br)
        for (std::size_t bc = 0; bc < nb; ++bc) out(ar * nb + br, ac * nb + bc) = a(ar, ac) * b(br, bc);
  return out;
}

namespace pauli {
inline ComplexMatrix I() { return {{1, 0}, {0, 1}}; }
inline ComplexMatrix X() { return {{0, 1}, {1, 0}}; }
inline ComplexMatrix Y() { return {{0, Complex(0, -1)}, {Complex(0, 1), 0}}; }
inline ComplexMatrix Z() { return {{1, 0}, {0, -1}}; }

inline ComplexMatrix from_label(char label) {
  switch (label) {
    case 'I': return I();
    case 'X': return X();
    case 'Y': return Y();
    case 'Z': return Z();
    default: throw InvalidArgument(std::string("pauli: unknown label '") + label + "'");
  }
}
}  // namespace pauli

inline std::size_t qubit_count(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

/// A ±1-valued observable: a Hermitian involution acting on an ordered list
/// of global qubit indices (0-based, qubit 0 is the leftmost tensor factor).
/// `matrix` is expressed on the local space of `qubits`, in that order.
class Observable {
 public:
  Observable(std::string name, std::vector<std::size_t> qubits, ComplexMatrix matrix)
      : name_(std::move(name)), qubits_(std::move(qubits)), matrix_(std::move(matrix)) {
    if (matrix_.dim() != (std::size_t{1} << qubits_.size())) {
      throw InvalidArgument("Observable '" + name_ + "': matrix size does not match qubit count");
    }
    auto sorted = qubits_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("Observable '" + name_ + "': repeated qubit index");
    }
    if (!is_hermitian(matrix_)) {
      throw InvalidArgument("Observable '" + name_ + "': matrix is not Hermitian");
    }
    const auto id = ComplexMatrix::identity(matrix_.dim());
    if (!approx_equal(matrix_ * matrix_, id)) {
      throw InvalidArgument("Observable '" + name_ + "': matrix does not square to identity");
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<std::size_t>& qubits() const { return qubits_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Full-register operator on `n_qubits`, padding with identities.
  ComplexMatrix embed(std::size_t n_qubits) const {
    for (auto q : qubits_) {
      if (q >= n_qubits) {
        throw InvalidArgument("Observable '" + name_ + "': acts outside a " +
                              std::to_string(n_qubits) + "-qubit register");
      }
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    ComplexMatrix out(dim);
    const std::size_t k = qubits_.size();
    std::size_t acting_mask = 0;
    for (auto q : qubits_) acting_mask |= bit_of(q, n_qubits);
    auto local_index = [&](std::size_t full) {
      std::size_t li = 0;
      for (std::size_t j = 0; j < k; ++j) {
        li = (li << 1) | ((full & bit_of(qubits_[j], n_qubits)) ? 1u : 0u);
      }
      return li;
    };
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        if ((r & ~acting_mask) != (c & ~acting_mask)) continue;
        out(r, c) = matrix_(local_index(r), local_index(c));
      }
    return out;
  }

 private:
  static std::size_t bit_of(std::size_t qubit, std::size_t n_qubits) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
  }

  std::string name_;
  std::vector<std::size_t> qubits_;
  ComplexMatrix matrix_;
};

/// Pauli string over all `n_qubits` qubits, e.g. "ZX" is z1 x2.
inline Observable pauli_string(std::string_view labels, std::size_t n_qubits) {
  if (labels.size() != n_qubits) {
    throw InvalidArgument("pauli_string: label count does not match qubit count");
  }
  if (n_qubits == 0) throw InvalidArgument("pauli_string: empty string");
  ComplexMatrix m = pauli::from_label(labels[0]);
  for (std::size_t i = 1; i < labels.size(); ++i) m = kron(m, pauli::from_label(labels[i]));
  std::vector<std::size_t> qubits(n_qubits);
  for (std::size_t i = 0; i < n_qubits; ++i) qubits[i] = i;
  return Observable(std::string(labels), std::move(qubits), std::move(m));
}

/// Register size needed to hold both observables.
inline std::size_t common_register(const Observable& a, const Observable& b) {
  std::size_t n = 0;
  for (auto q : a.qubits()) n = std::max(n, q + 1);
  for (auto q : b.qubits()) n = std::max(n, q + 1);
  return n;
}

inline bool commutes(const Observable& a, const Observable& b) {
  const std::size_t n = common_register(a, b);
  const auto ma = a.embed(n);
  const auto mb = b.embed(n);
  return (ma * mb - mb * ma).max_abs() < kStructuralTol;
}

struct Eigenprojectors {
  ComplexMatrix plus;
  ComplexMatrix minus;
};

/// P± = (I ± O)/2 for an involution O given as a full-register matrix.
inline Eigenprojectors eigenprojectors(const ComplexMatrix& involution) {
  const auto id = ComplexMatrix::identity(involution.dim());
  if (!is_hermitian(involution) || !approx_equal(involution * involution, id)) {
    throw InvalidArgument("eigenprojectors: operator is not a Hermitian involution");
  }
  return {(id + involution) * 0.5, (id - involution) * 0.5};
}

inline Eigenprojectors eigenprojectors(const Observable& o) {
  return eigenprojectors(o.matrix());
}

}  // namespace ctxlab

#endif  // CTXLAB_TENSOR_HPP
