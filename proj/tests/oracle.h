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

// Brute-force reference for the tests. Everything here is built from dense
// Kronecker products of explicit matrices and shares no code with the
// library: no bit masks, no index arithmetic beyond matrix products.

#ifndef CLUSTERQIS_TESTS_ORACLE_H
#define CLUSTERQIS_TESTS_ORACLE_H

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;

struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<C> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Mat(std::size_t r, std::size_t c, std::initializer_list<C> v) : rows(r), cols(c), a(v) {
    assert(a.size() == r * c);
  }

  C& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  C operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline Mat identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l)
          out(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
  return out;
}

inline Mat kron_all(const std::vector<Mat>& ms) {
  Mat out = identity(1);
  for (const Mat& m : ms) out = kron(out, m);
  return out;
}

inline Mat mul(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k)
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) += x(i, k) * y(k, j);
  return out;
}

inline Mat adjoint(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

inline Mat add(const Mat& x, const Mat& y, C scale = 1.0) {
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += scale * y.a[i];
  return out;
}

inline Mat column(const Vec& v) {
  Mat m(v.size(), 1);
  m.a = v;
  return m;
}

inline Vec as_vec(const Mat& col) {
  assert(col.cols == 1);
  return col.a;
}

inline Vec apply(const Mat& m, const Vec& v) { return as_vec(mul(m, column(v))); }

inline Vec kron(const Vec& x, const Vec& y) { return as_vec(kron(column(x), column(y))); }

inline Vec kron_all(const std::vector<Vec>& vs) {
  Vec out{1.0};
  for (const Vec& v : vs) out = kron(out, v);
  return out;
}

inline C dot(const Vec& x, const Vec& y) {  // <x|y>
  C s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline double norm2(const Vec& v) { return std::real(dot(v, v)); }

inline Vec scale(const Vec& v, C s) {
  Vec out = v;
  for (C& x : out) x *= s;
  return out;
}

inline Vec plus(const Vec& x, const Vec& y) {
  Vec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

// Single-qubit kets and gates.
inline Vec ket0() { return {1.0, 0.0}; }
inline Vec ket1() { return {0.0, 1.0}; }
inline Vec ket_plus() { return {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}; }

inline Mat X() { return Mat(2, 2, {0.0, 1.0, 1.0, 0.0}); }
inline Mat Y() { return Mat(2, 2, {0.0, C(0, -1), C(0, 1), 0.0}); }
inline Mat Z() { return Mat(2, 2, {1.0, 0.0, 0.0, -1.0}); }
inline Mat I2() { return identity(2); }
inline Mat P0() { return Mat(2, 2, {1.0, 0.0, 0.0, 0.0}); }
inline Mat P1() { return Mat(2, 2, {0.0, 0.0, 0.0, 1.0}); }

// Pauli by letter.
inline Mat pauli(char c) {
  switch (c) {
    case 'X': return X();
    case 'Y': return Y();
    case 'Z': return Z();
    default: return I2();
  }
}

// Gate on qubit k of n, qubit 0 the leftmost Kronecker factor.
inline Mat on_qubit(int n, int k, const Mat& g) {
  std::vector<Mat> fs;
  for (int i = 0; i < n; ++i) fs.push_back(i == k ? g : I2());
  return kron_all(fs);
}

inline Mat cnot(int n, int control, int target) {
  std::vector<Mat> keep, flip;
  for (int i = 0; i < n; ++i) {
    keep.push_back(i == control ? P0() : I2());
    flip.push_back(i == control ? P1() : (i == target ? X() : I2()));
  }
  return add(kron_all(keep), kron_all(flip));
}

// Bell states by wire code: 0 Phi+, 1 Phi-, 2 Psi+, 3 Psi-.
inline Vec bell(int wire) {
  const double s = 1.0 / std::sqrt(2.0);
  const Vec k00 = kron(ket0(), ket0()), k01 = kron(ket0(), ket1());
  const Vec k10 = kron(ket1(), ket0()), k11 = kron(ket1(), ket1());
  switch (wire) {
    case 0: return scale(plus(k00, k11), s);
    case 1: return scale(plus(k00, scale(k11, -1.0)), s);
    case 2: return scale(plus(k01, k10), s);
    default: return scale(plus(k01, scale(k10, -1.0)), s);
  }
}

// alpha|0000> + beta|1010> + gamma|0101> - eta|1111>.
inline Vec cluster(double alpha, double beta, double gamma, double eta) {
  const Vec k0 = ket0(), k1 = ket1();
  Vec v = scale(kron_all({k0, k0, k0, k0}), alpha);
  v = plus(v, scale(kron_all({k1, k0, k1, k0}), beta));
  v = plus(v, scale(kron_all({k0, k1, k0, k1}), gamma));
  v = plus(v, scale(kron_all({k1, k1, k1, k1}), -eta));
  return v;
}

// <B|_{p,q} (x) I on the remaining qubits: a 2^(n-2) x 2^n matrix built as a
// sum over the four computational terms of the Bell bra.
inline Mat bell_bra_on(int n, int p, int q, int wire) {
  const Vec b = bell(wire);
  const Mat bra0(1, 2, {1.0, 0.0}), bra1(1, 2, {0.0, 1.0});
  Mat total(std::size_t{1} << (n - 2), std::size_t{1} << n);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const C coeff = std::conj(b[static_cast<std::size_t>(2 * x + y)]);
      if (coeff == C(0.0)) continue;
      std::vector<Mat> fs;
      for (int k = 0; k < n; ++k) {
        if (k == p) fs.push_back(x ? bra1 : bra0);
        else if (k == q) fs.push_back(y ? bra1 : bra0);
        else fs.push_back(I2());
      }
      total = add(total, kron_all(fs), coeff);
    }
  }
  return total;
}

inline Vec project_bell(const Vec& psi, int n, int p, int q, int wire) {
  return oracle::apply(bell_bra_on(n, p, q, wire), psi);
}

// Fully traced-out reduced density matrix of qubit k (as a 2x2) from a pure
// state, via <psi| (|i><j| on k) |psi>.
inline Mat reduced_1q(const Vec& psi, int n, int k) {
  Mat rho(2, 2);
  const double nn = norm2(psi);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat e(2, 2);
      e(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1.0;  // |j><i|
      rho(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = dot(psi, oracle::apply(on_qubit(n, k, e), psi)) / nn;
    }
  return rho;
}

// 1/2 ||a - b||_1 for 2x2 Hermitian matrices: half the sum of |eigenvalues|.
inline double trace_distance_2x2(const Mat& a, const Mat& b) {
  const Mat d = add(a, b, -1.0);
  const double tr = std::real(d(0, 0) + d(1, 1));
  const double det = std::real(d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0));
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return 0.5 * (std::abs(tr / 2.0 + disc) + std::abs(tr / 2.0 - disc));
}

// |<a|b>|^2 / (<a|a><b|b>).
inline double fidelity(const Vec& a, const Vec& b) {
  return std::norm(dot(a, b)) / (norm2(a) * norm2(b));
}

// min over phases of ||a - e^{i t} b||_inf, approximated by aligning on the
// overlap (exact when a and b are parallel).
inline double phase_distance(const Vec& a, const Vec& b) {
  const C ov = dot(b, a);
  const C ph = std::abs(ov) > 0 ? ov / std::abs(ov) : C(1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - ph * b[i]));
  return worst;
}

// Random normalized vector of complex Gaussians.
inline Vec random_state(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  Vec v(dim);
  for (C& x : v) x = C(g(rng), g(rng));
  return scale(v, 1.0 / std::sqrt(norm2(v)));
}

}  // namespace oracle

#endif  // CLUSTERQIS_TESTS_ORACLE_H
