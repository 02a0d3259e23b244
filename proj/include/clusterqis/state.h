// Copyright 2026 The clusterqis Authors
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

// Dense statevector and density-matrix kernel.
//
// Bit order: qubit 0 is the leftmost label of a ket. For an n-qubit register
// the basis index of |q0 q1 ... q(n-1)> is sum_k q_k * 2^(n-1-k), so |0101>
// is index 5. Every module uses this convention.
//
// A StateVector may be unnormalized (post-selected branches keep their
// prefactors so that squared norms are branch probabilities). The
// normalized() flag records whether the value is claimed to be a unit vector.

#ifndef CLUSTERQIS_STATE_H
#define CLUSTERQIS_STATE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace clusterqis {

using Complex = std::complex<double>;

inline constexpr double kIdentityTol = 1e-12;  // algebraic identities
inline constexpr double kPsdTol = 1e-10;       // eigenvalue positivity
inline constexpr int kMaxQubits = 12;

/// 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> m{};

  constexpr Complex operator()(int r, int c) const { return m[2 * r + c]; }
  constexpr Complex& operator()(int r, int c) { return m[2 * r + c]; }

  static Mat2 identity();
  static Mat2 pauli_x();
  static Mat2 pauli_y();
  static Mat2 pauli_z();
  static Mat2 hadamard();
  /// |0><1| - |1><0|
  static Mat2 u1();

  Mat2 adjoint() const;
  bool is_unitary(double tol = kIdentityTol) const;
  bool is_hermitian(double tol = kIdentityTol) const;
  double max_abs_diff(const Mat2& other) const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(Complex s, const Mat2& a);
};

class StateVector {
 public:
  /// The zero-qubit scalar 1. Used for the empty remainder after measuring
  /// every qubit of a register.
  StateVector();

  /// Validates the length (power of two) and, when normalized is true, that
  /// the norm is 1 within kIdentityTol.
  static StateVector from_amplitudes(std::vector<Complex> amps,
                                     bool normalized);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  bool normalized() const { return normalized_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  /// Renormalized copy; throws ConfigError for a zero vector.
  StateVector normalize() const;
  StateVector scaled(Complex factor) const;

  /// Max entrywise |a - b|; dimensions must agree.
  double max_abs_diff(const StateVector& other) const;

  std::string to_string(int precision = 6) const;

 private:
  StateVector(int num_qubits, std::vector<Complex> amps, bool normalized);

  int num_qubits_ = 0;
  std::vector<Complex> amps_;
  bool normalized_ = true;
};

/// Bit mask for qubit q in an n-qubit register.
constexpr std::size_t qubit_mask(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

StateVector basis_state(int num_qubits, std::uint64_t index);

/// Applies a unitary to one qubit. Throws if u is not unitary.
StateVector apply_1q(const StateVector& state, int target, const Mat2& u);

/// Applies an arbitrary 2x2 operator (projector, Kraus element). The result
/// is marked unnormalized.
StateVector apply_operator_1q(const StateVector& state, int target,
                              const Mat2& op);

StateVector apply_cnot(const StateVector& state, int control, int target);

/// Tensor product a (x) b; a's qubits come first.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Reorders qubits: qubit k of the result is qubit order[k] of the input.
StateVector permute_qubits(const StateVector& state, std::span<const int> order);

/// <a|b>, conjugate-linear in a.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 for normalized states. Throws on unnormalized input.
double fidelity_pure(const StateVector& a, const StateVector& b);

/// Fidelity after renormalizing both sides; handy for unnormalized branches.
double overlap_fidelity(const StateVector& a, const StateVector& b);

/// min over phases of max |a - e^{i phi} b| after aligning on the largest
/// overlap. Dimensions must agree.
double distance_up_to_phase(const StateVector& a, const StateVector& b);

class DensityMatrix {
 public:
  DensityMatrix() = default;
  /// Row-major entries; dim must be a power of two. No validation beyond
  /// shape; see check_valid().
  DensityMatrix(std::size_t dim, std::vector<Complex> entries);

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int num_qubits);

  std::size_t dim() const { return dim_; }
  int num_qubits() const;
  Complex operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  std::span<const Complex> entries() const { return entries_; }

  Complex trace() const;
  bool is_hermitian(double tol = kIdentityTol) const;
  std::vector<double> eigenvalues() const;
  /// Hermitian, unit trace and PSD within the global tolerances. Throws
  /// ConfigError naming the violated property.
  void check_valid() const;

  double max_abs_diff(const DensityMatrix& other) const;
  DensityMatrix operator-(const DensityMatrix& other) const;
  DensityMatrix operator+(const DensityMatrix& other) const;
  DensityMatrix scaled(double factor) const;

  /// <psi| rho |psi> for a normalized psi.
  double expectation(const StateVector& psi) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Reduced state on `keep` (qubit indices, order preserved in the result).
/// The input is renormalized, so the result always has unit trace.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// (1/2) ||a - b||_1 from the eigenvalues of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(A) + S(B) - S(AB) for a pure (possibly unnormalized) state split into
/// qubit sets a and b (which together need not cover the register; the rest
/// is traced out).
double mutual_information(const StateVector& state, std::span<const int> a,
                          std::span<const int> b);

/// Eigenvalues of an n x n Hermitian matrix (row-major), ascending. Cyclic
/// Jacobi on the real 2n x 2n embedding; converges when the off-diagonal
/// Frobenius norm drops below 1e-13 (relative to the matrix scale).
std::vector<double> hermitian_eigenvalues(std::span<const Complex> matrix,
                                          std::size_t n);

}  // namespace clusterqis

#endif  // CLUSTERQIS_STATE_H
