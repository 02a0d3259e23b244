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

#include "clusterqis/measurement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "clusterqis/errors.h"
#include "clusterqis/rng.h"

namespace clusterqis {

std::string_view wire_code(BellOutcome b) {
  switch (b) {
    case BellOutcome::kPhiPlus: return "00";
    case BellOutcome::kPhiMinus: return "01";
    case BellOutcome::kPsiPlus: return "10";
    case BellOutcome::kPsiMinus: return "11";
  }
  return "??";
}

BellOutcome bell_from_wire(std::string_view code) {
  for (BellOutcome b : kBellOutcomes) {
    if (wire_code(b) == code) return b;
  }
  throw ConfigError("invalid Bell outcome code '" + std::string(code) + "'");
}

std::string_view bell_name(BellOutcome b) {
  switch (b) {
    case BellOutcome::kPhiPlus: return "Phi+";
    case BellOutcome::kPhiMinus: return "Phi-";
    case BellOutcome::kPsiPlus: return "Psi+";
    case BellOutcome::kPsiMinus: return "Psi-";
  }
  return "?";
}

BellOutcome bell_from_name(std::string_view name) {
  for (BellOutcome b : kBellOutcomes) {
    if (bell_name(b) == name) return b;
  }
  throw ConfigError("invalid Bell state name '" + std::string(name) + "'");
}

std::array<Complex, 4> bell_vector(BellOutcome b) {
  const double h = std::numbers::sqrt2 / 2;
  const double s = bell_sign(b);
  if (is_phi(b)) return {h, 0.0, 0.0, s * h};
  return {0.0, h, s * h, 0.0};
}

StateVector project_bell(const StateVector& state, QubitPair pair, BellOutcome b) {
  const int n = state.num_qubits();
  const auto [p, q] = pair;
  if (p < 0 || q < 0 || p >= n || q >= n) throw ConfigError("Bell pair index out of range");
  if (p == q) throw ConfigError("Bell pair indices must differ");
  const auto bv = bell_vector(b);
  const std::size_t pm = qubit_mask(n, p);
  const std::size_t qm = qubit_mask(n, q);
  std::vector<Complex> out(std::size_t{1} << (n - 2));
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const std::size_t xy = ((i & pm) ? 2U : 0U) | ((i & qm) ? 1U : 0U);
    // Compress out the two measured bits, keeping the rest in order.
    std::size_t r = 0;
    for (int k = 0; k < n; ++k) {
      if (k == p || k == q) continue;
      r = (r << 1) | ((i & qubit_mask(n, k)) ? 1U : 0U);
    }
    out[r] += std::conj(bv[xy]) * state[i];
  }
  return StateVector::from_amplitudes(std::move(out), false);
}

std::vector<BellBranch> bell_distribution(const StateVector& state, QubitPair pair) {
  if (!state.normalized()) throw ConfigError("bell_distribution expects a normalized state");
  std::vector<BellBranch> out;
  out.reserve(4);
  for (BellOutcome b : kBellOutcomes) {
    StateVector rem = project_bell(state, pair, b);
    const double p = rem.norm_squared();
    out.push_back(BellBranch{b, p, std::move(rem)});
  }
  return out;
}

BellSample bsm_sample(const StateVector& state, QubitPair pair, std::uint64_t seed) {
  const auto branches = bell_distribution(state, pair);
  double total = 0.0;
  for (const auto& br : branches) total += br.probability;
  const double u = uniform01(seed) * total;
  double acc = 0.0;
  const BellBranch* chosen = nullptr;
  for (const auto& br : branches) {
    if (br.probability <= 0.0) continue;
    chosen = &br;
    acc += br.probability;
    if (u < acc) break;
  }
  if (chosen == nullptr) throw ConfigError("bsm_sample: all branches have zero probability");
  return BellSample{chosen->outcome, chosen->remainder.normalize(), chosen->probability / total};
}

// ---------------------------------------------------------------------------
// POVM

std::string_view povm_name(PovmOutcome k) {
  switch (k) {
    case PovmOutcome::kK1: return "K1";
    case PovmOutcome::kK2: return "K2";
    case PovmOutcome::kK3: return "K3";
  }
  return "?";
}

namespace {

Mat2 outer(const std::array<Complex, 2>& v) {
  Mat2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = v[r] * std::conj(v[c]);
  }
  return out;
}

// Principal square root of a 2x2 Hermitian PSD matrix:
// sqrt(A) = (A + s I) / t, s = sqrt(det A), t = sqrt(tr A + 2 s).
Mat2 sqrt_psd(const Mat2& a) {
  const double det = std::max(0.0, (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real());
  const double s = std::sqrt(det);
  const double t2 = (a(0, 0) + a(1, 1)).real() + 2.0 * s;
  if (t2 <= 0.0) return Mat2{};
  return Complex(1.0 / std::sqrt(t2)) * (a + Complex(s) * Mat2::identity());
}

std::size_t index_of(PovmOutcome k) { return static_cast<std::size_t>(k) - 1; }

}  // namespace

double povm_k3_min_eigenvalue(double beta, double gamma, double rho) {
  const double b2 = beta * beta;
  const double g2 = gamma * gamma;
  return 1.0 - 2.0 * std::max(b2, g2) / (rho * (b2 + g2));
}

double povm_min_rho(double beta, double gamma) {
  const double b2 = beta * beta;
  const double g2 = gamma * gamma;
  return 2.0 * std::max(b2, g2) / (b2 + g2);
}

PovmSet PovmSet::construct(double beta, double gamma, double rho) {
  if (!std::isfinite(beta) || !std::isfinite(gamma) || !std::isfinite(rho)) {
    throw ConfigError("POVM parameters must be finite");
  }
  if (beta == 0.0 || gamma == 0.0) throw ConfigError("POVM coefficients must be nonzero");
  if (rho <= 0.0) throw ConfigError("POVM rho must be positive");

  PovmSet p;
  p.beta_ = beta;
  p.gamma_ = gamma;
  p.rho_ = rho;
  p.varsigma_ = 1.0 / (gamma * gamma) + 1.0 / (beta * beta);
  const double norm = 1.0 / std::sqrt(p.varsigma_);
  p.m1_ = {norm / gamma, norm / beta};
  p.m2_ = {norm / gamma, -norm / beta};
  const Complex inv_rho(1.0 / rho);
  p.elements_[0] = inv_rho * outer(p.m1_);
  p.elements_[1] = inv_rho * outer(p.m2_);
  p.elements_[2] = Mat2::identity() - p.elements_[0] - p.elements_[1];

  // K3 is real symmetric; its eigenvalues in closed form.
  const Mat2& k3 = p.elements_[2];
  const double a = k3(0, 0).real();
  const double d = k3(1, 1).real();
  const double off = std::abs(k3(0, 1));
  p.k3_min_eig_ = 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  if (p.k3_min_eig_ < -kIdentityTol) {
    throw PovmInvalidError("POVM K3 not positive semidefinite (min eigenvalue " +
                               std::to_string(p.k3_min_eig_) + "; rho must be at least " +
                               std::to_string(povm_min_rho(beta, gamma)) + ")",
                           p.k3_min_eig_);
  }
  for (std::size_t i = 0; i < 3; ++i) p.kraus_[i] = sqrt_psd(p.elements_[i]);
  return p;
}

const Mat2& PovmSet::element(PovmOutcome k) const { return elements_[index_of(k)]; }
const Mat2& PovmSet::kraus(PovmOutcome k) const { return kraus_[index_of(k)]; }

double povm_weight(const StateVector& state, int target, const PovmSet& povm, PovmOutcome k) {
  const StateVector applied = apply_operator_1q(state, target, povm.element(k));
  return inner_product(state, applied).real();
}

std::array<double, 3> povm_probabilities(const StateVector& state, int target,
                                         const PovmSet& povm) {
  const double n2 = state.norm_squared();
  if (n2 <= 0.0) throw ConfigError("POVM on the zero vector");
  std::array<double, 3> p{};
  for (std::size_t i = 0; i < 3; ++i) {
    p[i] = std::max(0.0, povm_weight(state, target, povm, kPovmOutcomes[i]) / n2);
  }
  return p;
}

StateVector povm_collapse(const StateVector& state, int target, const PovmSet& povm,
                          PovmOutcome k) {
  return apply_operator_1q(state, target, povm.kraus(k));
}

PovmSample povm_sample(const StateVector& state, int target, const PovmSet& povm,
                       std::uint64_t seed) {
  const auto probs = povm_probabilities(state, target, povm);
  const double total = probs[0] + probs[1] + probs[2];
  const double u = uniform01(seed) * total;
  double acc = 0.0;
  std::size_t pick = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (probs[i] <= 0.0) continue;
    pick = i;
    acc += probs[i];
    if (u < acc) break;
  }
  if (pick == 3) throw ConfigError("povm_sample: no outcome has positive probability");
  const PovmOutcome k = kPovmOutcomes[pick];
  return PovmSample{k, povm_collapse(state, target, povm, k).normalize(), probs[pick] / total};
}

}  // namespace clusterqis
