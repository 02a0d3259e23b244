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

#include "clusterqis/state.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <utility>

#include "clusterqis/errors.h"

namespace clusterqis {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ConfigError("length " + std::to_string(n) + " is not a power of two");
  }
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.num_qubits()) {
    throw ConfigError("qubit index " + std::to_string(q) + " out of range for " +
                      std::to_string(s.num_qubits()) + "-qubit state");
  }
}

// Extracts the bits of `index` at the given qubit positions, packed with the
// first listed qubit most significant.
std::size_t gather_bits(std::size_t index, int num_qubits, std::span<const int> qubits) {
  std::size_t out = 0;
  for (int q : qubits) {
    out = (out << 1) | ((index & qubit_mask(num_qubits, q)) ? 1U : 0U);
  }
  return out;
}

std::vector<int> complement(int num_qubits, std::span<const int> keep) {
  std::vector<bool> kept(static_cast<std::size_t>(num_qubits), false);
  for (int q : keep) {
    if (q < 0 || q >= num_qubits) {
      throw ConfigError("keep index " + std::to_string(q) + " out of range");
    }
    if (kept[static_cast<std::size_t>(q)]) {
      throw ConfigError("keep set lists qubit " + std::to_string(q) + " twice");
    }
    kept[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q) {
    if (!kept[static_cast<std::size_t>(q)]) rest.push_back(q);
  }
  return rest;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
Mat2 Mat2::pauli_x() { return Mat2{{0.0, 1.0, 1.0, 0.0}}; }
Mat2 Mat2::pauli_y() {
  return Mat2{{0.0, Complex(0, -1), Complex(0, 1), 0.0}};
}
Mat2 Mat2::pauli_z() { return Mat2{{1.0, 0.0, 0.0, -1.0}}; }
Mat2 Mat2::hadamard() {
  const double h = std::numbers::sqrt2 / 2;
  return Mat2{{h, h, h, -h}};
}
Mat2 Mat2::u1() { return Mat2{{0.0, 1.0, -1.0, 0.0}}; }

Mat2 Mat2::adjoint() const {
  return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return out;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}

Mat2 operator*(Complex s, const Mat2& a) {
  Mat2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = s * a.m[i];
  return out;
}

double Mat2::max_abs_diff(const Mat2& other) const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i] - other.m[i]));
  return d;
}

bool Mat2::is_unitary(double tol) const {
  return (adjoint() * *this).max_abs_diff(identity()) <= tol;
}

bool Mat2::is_hermitian(double tol) const { return adjoint().max_abs_diff(*this) <= tol; }

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector() : num_qubits_(0), amps_{Complex(1.0, 0.0)}, normalized_(true) {}

StateVector::StateVector(int num_qubits, std::vector<Complex> amps, bool normalized)
    : num_qubits_(num_qubits), amps_(std::move(amps)), normalized_(normalized) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps, bool normalized) {
  const int n = log2_exact(amps.size());
  if (n > kMaxQubits) {
    throw ConfigError("register of " + std::to_string(n) + " qubits exceeds the limit of " +
                      std::to_string(kMaxQubits));
  }
  for (const Complex& a : amps) {
    if (!is_finite(a)) throw ConfigError("amplitude is not finite");
  }
  StateVector s(n, std::move(amps), normalized);
  if (normalized && std::abs(s.norm_squared() - 1.0) > kIdentityTol) {
    throw ConfigError("state claimed normalized but has squared norm " +
                      std::to_string(s.norm_squared()));
  }
  return s;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const Complex& a : amps_) acc += std::norm(a);
  return acc;
}

StateVector StateVector::normalize() const {
  const double n2 = norm_squared();
  if (n2 <= 0.0) throw ConfigError("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<Complex> out(amps_.size());
  std::transform(amps_.begin(), amps_.end(), out.begin(), [inv](Complex a) { return a * inv; });
  return StateVector(num_qubits_, std::move(out), true);
}

StateVector StateVector::scaled(Complex factor) const {
  std::vector<Complex> out(amps_.size());
  std::transform(amps_.begin(), amps_.end(), out.begin(),
                 [factor](Complex a) { return a * factor; });
  const bool unit = normalized_ && std::abs(std::abs(factor) - 1.0) <= kIdentityTol;
  return StateVector(num_qubits_, std::move(out), unit);
}

double StateVector::max_abs_diff(const StateVector& other) const {
  if (other.dim() != dim()) throw ConfigError("dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) d = std::max(d, std::abs(amps_[i] - other.amps_[i]));
  return d;
}

std::string StateVector::to_string(int precision) const {
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (std::abs(amps_[i]) < 1e-14) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << amps_[i].real();
    if (amps_[i].imag() != 0.0) os << (amps_[i].imag() < 0 ? "-" : "+") << std::abs(amps_[i].imag()) << "i";
    os << ")|";
    for (int q = 0; q < num_qubits_; ++q) os << ((i & qubit_mask(num_qubits_, q)) ? '1' : '0');
    os << ">";
  }
  if (first) os << "0";
  return os.str();
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) throw ConfigError("bad qubit count");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw ConfigError("basis index " + std::to_string(index) + " out of range for " +
                      std::to_string(num_qubits) + " qubits");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector::from_amplitudes(std::move(amps), true);
}

namespace {

std::vector<Complex> apply_matrix(const StateVector& state, int target, const Mat2& op) {
  check_qubit(state, target);
  const std::size_t mask = qubit_mask(state.num_qubits(), target);
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = out[i];
    const Complex a1 = out[i | mask];
    out[i] = op(0, 0) * a0 + op(0, 1) * a1;
    out[i | mask] = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return out;
}

}  // namespace

StateVector apply_operator_1q(const StateVector& state, int target, const Mat2& op) {
  return StateVector::from_amplitudes(apply_matrix(state, target, op), false);
}

StateVector apply_1q(const StateVector& state, int target, const Mat2& u) {
  if (!u.is_unitary()) throw ConfigError("apply_1q: matrix is not unitary");
  return StateVector::from_amplitudes(apply_matrix(state, target, u), state.normalized());
}

StateVector apply_cnot(const StateVector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw ConfigError("apply_cnot: control equals target");
  const int n = state.num_qubits();
  const std::size_t cmask = qubit_mask(n, control);
  const std::size_t tmask = qubit_mask(n, target);
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(out[i], out[i | tmask]);
  }
  // A permutation is exact, so the flag carries over unchanged.
  return StateVector::from_amplitudes(std::move(out), state.normalized());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  }
  return StateVector::from_amplitudes(std::move(out), a.normalized() && b.normalized());
}

StateVector permute_qubits(const StateVector& state, std::span<const int> order) {
  const int n = state.num_qubits();
  if (static_cast<int>(order.size()) != n) throw ConfigError("permutation has wrong length");
  if (!complement(n, order).empty()) throw ConfigError("not a permutation");
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) out[gather_bits(i, n, order)] = state[i];
  return StateVector::from_amplitudes(std::move(out), state.normalized());
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw ConfigError("inner_product: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double fidelity_pure(const StateVector& a, const StateVector& b) {
  if (!a.normalized() || !b.normalized()) {
    throw ConfigError("fidelity_pure: both states must be normalized");
  }
  return std::min(1.0, std::norm(inner_product(a, b)));
}

double overlap_fidelity(const StateVector& a, const StateVector& b) {
  return fidelity_pure(a.normalize(), b.normalize());
}

double distance_up_to_phase(const StateVector& a, const StateVector& b) {
  const Complex ov = inner_product(b, a);
  const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex(1.0, 0.0);
  return a.max_abs_diff(b.scaled(phase));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  log2_exact(dim_);
  if (entries_.size() != dim_ * dim_) throw ConfigError("density matrix has wrong entry count");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const StateVector n = psi.normalize();
  std::vector<Complex> e(n.dim() * n.dim());
  for (std::size_t r = 0; r < n.dim(); ++r) {
    for (std::size_t c = 0; c < n.dim(); ++c) e[r * n.dim() + c] = n[r] * std::conj(n[c]);
  }
  return DensityMatrix(n.dim(), std::move(e));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  std::vector<Complex> e(d * d);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0 / static_cast<double>(d);
  return DensityMatrix(d, std::move(e));
}

int DensityMatrix::num_qubits() const { return log2_exact(dim_); }

Complex DensityMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

std::vector<double> DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(entries_, dim_); }

void DensityMatrix::check_valid() const {
  if (!is_hermitian()) throw ConfigError("density matrix is not Hermitian");
  if (std::abs(trace() - 1.0) > kIdentityTol) throw ConfigError("density matrix trace is not 1");
  const auto ev = eigenvalues();
  if (!ev.empty() && ev.front() < -kPsdTol) {
    throw ConfigError("density matrix is not positive semidefinite");
  }
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw ConfigError("dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
  return d;
}

DensityMatrix DensityMatrix::operator-(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw ConfigError("dimension mismatch");
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] - other.entries_[i];
  return DensityMatrix(dim_, std::move(e));
}

DensityMatrix DensityMatrix::operator+(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw ConfigError("dimension mismatch");
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] + other.entries_[i];
  return DensityMatrix(dim_, std::move(e));
}

DensityMatrix DensityMatrix::scaled(double factor) const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] * factor;
  return DensityMatrix(dim_, std::move(e));
}

double DensityMatrix::expectation(const StateVector& psi) const {
  if (psi.dim() != dim_) throw ConfigError("dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) acc += std::conj(psi[r]) * (*this)(r, c) * psi[c];
  }
  return acc.real();
}

DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
  if (keep.empty()) throw ConfigError("partial_trace: keep set is empty");
  const int n = state.num_qubits();
  const std::vector<int> rest = complement(n, keep);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t de = std::size_t{1} << rest.size();
  // Reshape psi into a dk x de matrix M; rho = M M^dagger.
  std::vector<Complex> m(dk * de);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    m[gather_bits(i, n, keep) * de + gather_bits(i, n, rest)] = state[i];
  }
  const double n2 = state.norm_squared();
  if (n2 <= 0.0) throw ConfigError("partial_trace of the zero vector");
  std::vector<Complex> rho(dk * dk);
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = r; c < dk; ++c) {
      Complex acc = 0.0;
      for (std::size_t e = 0; e < de; ++e) acc += m[r * de + e] * std::conj(m[c * de + e]);
      rho[r * dk + c] = acc / n2;
      rho[c * dk + r] = std::conj(acc) / n2;
    }
  }
  return DensityMatrix(dk, std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw ConfigError("partial_trace: keep set is empty");
  const int n = rho.num_qubits();
  const std::vector<int> rest = complement(n, keep);
  const std::size_t dk = std::size_t{1} << keep.size();
  std::vector<Complex> out(dk * dk);
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    const std::size_t rk = gather_bits(r, n, keep);
    const std::size_t re = gather_bits(r, n, rest);
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      if (gather_bits(c, n, rest) != re) continue;
      out[rk * dk + gather_bits(c, n, keep)] += rho(r, c);
    }
  }
  const Complex tr = rho.trace();
  if (std::abs(tr) <= 0.0) throw ConfigError("partial_trace of a zero-trace matrix");
  for (Complex& x : out) x /= tr.real();
  return DensityMatrix(dk, std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw ConfigError("trace_distance: dimension mismatch");
  if (!a.is_hermitian() || !b.is_hermitian()) {
    throw ConfigError("trace_distance: input is not Hermitian");
  }
  double acc = 0.0;
  for (double ev : (a - b).eigenvalues()) acc += std::abs(ev);
  return std::clamp(0.5 * acc, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  rho.check_valid();
  double s = 0.0;
  for (double ev : rho.eigenvalues()) {
    if (ev > 0.0) s -= ev * std::log2(ev);
  }
  return std::max(0.0, s);
}

double mutual_information(const StateVector& state, std::span<const int> a,
                          std::span<const int> b) {
  std::vector<int> ab(a.begin(), a.end());
  ab.insert(ab.end(), b.begin(), b.end());
  const double sa = von_neumann_entropy(partial_trace(state, a));
  const double sb = von_neumann_entropy(partial_trace(state, b));
  const double sab = von_neumann_entropy(partial_trace(state, ab));
  return std::max(0.0, sa + sb - sab);
}

std::vector<double> hermitian_eigenvalues(std::span<const Complex> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw ConfigError("hermitian_eigenvalues: bad shape");
  // Real symmetric embedding [[Re, -Im], [Im, Re]]; its spectrum is the
  // Hermitian spectrum with every eigenvalue doubled.
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = matrix[r * n + c];
      a[r * m + c] = z.real();
      a[(r + n) * m + (c + n)] = z.real();
      a[r * m + (c + n)] = -z.imag();
      a[(r + n) * m + c] = z.imag();
      scale += std::norm(z);
    }
  }
  const double threshold = 1e-13 * std::max(1.0, std::sqrt(scale));
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        if (r != c) s += a[r * m + c] * a[r * m + c];
      }
    }
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < 100 && off_norm() >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = a[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * m + q] - a[p * m + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k * m + p];
          const double akq = a[k * m + q];
          a[k * m + p] = c * akp - s * akq;
          a[k * m + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p * m + k];
          const double aqk = a[q * m + k];
          a[p * m + k] = c * apk - s * aqk;
          a[q * m + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(m);
  for (std::size_t i = 0; i < m; ++i) diag[i] = a[i * m + i];
  std::sort(diag.begin(), diag.end());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
  return out;
}

}  // namespace clusterqis
