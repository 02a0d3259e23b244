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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "clusterqis/errors.h"
#include "clusterqis/state.h"
#include "oracle.h"
#include "test_util.h"

namespace clusterqis {
namespace {

using testutil::from_vec;
using testutil::to_vec;

Mat2 to_mat2(const oracle::Mat& m) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

TEST(StateVector, RejectsBadShapes) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}, false), ConfigError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}, true), ConfigError);
  EXPECT_NO_THROW(StateVector::from_amplitudes({1.0, 1.0}, false));
  EXPECT_THROW(StateVector::from_amplitudes({0.0, 0.0}, false).normalize(), ConfigError);
}

TEST(StateVector, ZeroQubitScalar) {
  const StateVector s;
  EXPECT_EQ(s.num_qubits(), 0);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, ScaledKeepsFlagOnlyForUnitFactors) {
  const StateVector s = basis_state(2, 3);
  EXPECT_TRUE(s.scaled(Complex(0.0, 1.0)).normalized());
  EXPECT_FALSE(s.scaled(0.5).normalized());
  EXPECT_DOUBLE_EQ(s.scaled(0.5).norm_squared(), 0.25);
}

TEST(Gates, SingleQubitGateMatchesKronecker) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < n; ++k) {
      const oracle::Vec psi = oracle::random_state(rng, std::size_t{1} << n);
      for (char p : {'X', 'Y', 'Z'}) {
        const oracle::Vec want = oracle::apply(oracle::on_qubit(n, k, oracle::pauli(p)), psi);
        const StateVector got = apply_1q(from_vec(psi, true), k, to_mat2(oracle::pauli(p)));
        EXPECT_LT(got.max_abs_diff(from_vec(want)), 1e-14) << n << ' ' << k << ' ' << p;
      }
    }
  }
}

TEST(Gates, CnotMatchesKronecker) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 5; ++n) {
    for (int c = 0; c < n; ++c) {
      for (int t = 0; t < n; ++t) {
        if (c == t) continue;
        const oracle::Vec psi = oracle::random_state(rng, std::size_t{1} << n);
        const oracle::Vec want = oracle::apply(oracle::cnot(n, c, t), psi);
        const StateVector got = apply_cnot(from_vec(psi, true), c, t);
        EXPECT_LT(got.max_abs_diff(from_vec(want)), 1e-14);
      }
    }
  }
  EXPECT_THROW(apply_cnot(basis_state(2, 0), 1, 1), ConfigError);
}

TEST(Gates, UnitariesPreserveNorm) {
  std::mt19937_64 rng(3);
  for (const Mat2& u : {Mat2::hadamard(), Mat2::u1(), Mat2::pauli_y()}) {
    EXPECT_TRUE(u.is_unitary());
    const StateVector psi = from_vec(oracle::random_state(rng, 8), true);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(apply_1q(psi, k, u).norm_squared(), 1.0, 1e-14);
  }
}

TEST(Tensor, MatchesKronecker) {
  std::mt19937_64 rng(4);
  const oracle::Vec a = oracle::random_state(rng, 2);
  const oracle::Vec b = oracle::random_state(rng, 8);
  const StateVector t = tensor(from_vec(a, true), from_vec(b, true));
  EXPECT_EQ(t.num_qubits(), 4);
  EXPECT_LT(t.max_abs_diff(from_vec(oracle::kron(a, b))), 1e-15);
}

TEST(Permute, MovesQubits) {
  // |0 1 1> with order {2, 0, 1}: new qubit 0 is old qubit 2, and so on.
  const StateVector s = basis_state(3, 0b011);
  const std::array<int, 3> order = {2, 0, 1};
  const StateVector p = permute_qubits(s, order);
  EXPECT_NEAR(std::abs(p[0b101]), 1.0, 1e-15);
  const std::array<int, 3> bad = {0, 0, 1};
  EXPECT_THROW(permute_qubits(s, bad), ConfigError);
}

TEST(Permute, InverseRoundTrip) {
  std::mt19937_64 rng(5);
  const StateVector psi = from_vec(oracle::random_state(rng, 32), true);
  const std::array<int, 5> order = {3, 0, 4, 1, 2};
  std::array<int, 5> inverse{};
  for (int k = 0; k < 5; ++k) inverse[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  EXPECT_LT(permute_qubits(permute_qubits(psi, order), inverse).max_abs_diff(psi), 1e-15);
}

TEST(Fidelity, PhaseInsensitive) {
  std::mt19937_64 rng(6);
  const StateVector psi = from_vec(oracle::random_state(rng, 4), true);
  const StateVector rotated = psi.scaled(std::polar(1.0, 0.7));
  EXPECT_NEAR(fidelity_pure(psi, rotated), 1.0, 1e-14);
  EXPECT_LT(distance_up_to_phase(psi, rotated), 1e-14);
  EXPECT_NEAR(fidelity_pure(basis_state(1, 0), basis_state(1, 1)), 0.0, 1e-15);
  EXPECT_THROW(fidelity_pure(psi.scaled(2.0), psi), ConfigError);
}

TEST(PartialTrace, SingleQubitMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const oracle::Vec psi = oracle::random_state(rng, 16);
    for (int k = 0; k < 4; ++k) {
      const std::array<int, 1> keep = {k};
      const DensityMatrix got = partial_trace(from_vec(psi, true), keep);
      const oracle::Mat want = oracle::reduced_1q(psi, 4, k);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) EXPECT_LT(std::abs(got(r, c) - want(r, c)), 1e-14);
    }
  }
}

TEST(PartialTrace, KeepOrderIsRespected) {
  // |0>|1>: keeping {1, 0} gives |1 0><1 0|.
  const std::array<int, 2> keep = {1, 0};
  const DensityMatrix rho = partial_trace(basis_state(2, 0b01), keep);
  EXPECT_NEAR(std::real(rho(0b10, 0b10)), 1.0, 1e-15);
}

TEST(PartialTrace, UnnormalizedInputIsRenormalized) {
  const StateVector half = basis_state(2, 0).scaled(0.5);
  const std::array<int, 1> keep = {0};
  EXPECT_NEAR(std::real(partial_trace(half, keep).trace()), 1.0, 1e-15);
}

TEST(DensityMatrix, TraceDistanceMatchesClosedForm) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::Vec a = oracle::random_state(rng, 4);
    const oracle::Vec b = oracle::random_state(rng, 4);
    const std::array<int, 1> keep = {0};
    const DensityMatrix ra = partial_trace(from_vec(a, true), keep);
    const DensityMatrix rb = partial_trace(from_vec(b, true), keep);
    const double want = oracle::trace_distance_2x2(oracle::reduced_1q(a, 2, 0), oracle::reduced_1q(b, 2, 0));
    EXPECT_NEAR(trace_distance(ra, rb), want, 1e-12);
  }
}

TEST(DensityMatrix, PureStatesTraceDistance) {
  // For pure states D = sqrt(1 - F).
  std::mt19937_64 rng(9);
  const StateVector a = from_vec(oracle::random_state(rng, 8), true);
  const StateVector b = from_vec(oracle::random_state(rng, 8), true);
  const double f = fidelity_pure(a, b);
  EXPECT_NEAR(trace_distance(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b)), std::sqrt(1.0 - f), 1e-12);
}

TEST(DensityMatrix, EntropyAndMutualInformation) {
  const StateVector bell = from_vec(oracle::bell(0), true);
  const std::array<int, 1> a = {0}, b = {1};
  EXPECT_NEAR(von_neumann_entropy(partial_trace(bell, a)), 1.0, 1e-12);
  EXPECT_NEAR(mutual_information(bell, a, b), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(basis_state(2, 1), a, b), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), 3.0, 1e-12);
}

TEST(DensityMatrix, CheckValid) {
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(2).check_valid());
  EXPECT_THROW(DensityMatrix(2, {1.0, 0.0, 0.0, 1.0}).check_valid(), ConfigError);    // trace 2
  EXPECT_THROW(DensityMatrix(2, {1.5, 0.0, 0.0, -0.5}).check_valid(), ConfigError);   // negative
  EXPECT_THROW(DensityMatrix(2, {0.5, 1.0, 0.0, 0.5}).check_valid(), ConfigError);    // not Hermitian
}

TEST(DensityMatrix, ExpectationOfPureState) {
  std::mt19937_64 rng(10);
  const StateVector a = from_vec(oracle::random_state(rng, 4), true);
  const StateVector b = from_vec(oracle::random_state(rng, 4), true);
  EXPECT_NEAR(DensityMatrix::from_pure(a).expectation(b), fidelity_pure(a, b), 1e-14);
}

// Power sums of the spectrum equal traces of matrix powers; for an n x n
// matrix the first n power sums pin the spectrum down.
TEST(Eigen, SpectrumMatchesTracePowers) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (std::size_t n : {2u, 3u, 4u, 8u}) {
    oracle::Mat a(n, n);
    for (auto& x : a.a) x = oracle::C(g(rng), g(rng));
    const oracle::Mat h = oracle::add(a, oracle::adjoint(a));
    const std::vector<double> ev = hermitian_eigenvalues(h.a, n);
    ASSERT_EQ(ev.size(), n);
    oracle::Mat power = oracle::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      power = oracle::mul(power, h);
      double tr = 0.0;
      for (std::size_t i = 0; i < n; ++i) tr += std::real(power(i, i));
      double sum = 0.0;
      for (double l : ev) sum += std::pow(l, static_cast<double>(k));
      EXPECT_NEAR(sum, tr, 1e-9 * std::max(1.0, std::abs(tr))) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Eigen, DiagonalAndDegenerate) {
  const std::vector<Complex> diag = {3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0};
  std::vector<double> ev = hermitian_eigenvalues(diag, 3);
  std::sort(ev.begin(), ev.end());
  EXPECT_NEAR(ev[0], -1.0, 1e-14);
  EXPECT_NEAR(ev[1], -1.0, 1e-14);
  EXPECT_NEAR(ev[2], 3.0, 1e-14);
}

}  // namespace
}  // namespace clusterqis
