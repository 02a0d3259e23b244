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

#ifndef CLUSTERQIS_TESTS_TEST_UTIL_H
#define CLUSTERQIS_TESTS_TEST_UTIL_H

#include <vector>

#include "clusterqis/channel.h"
#include "clusterqis/state.h"
#include "oracle.h"

namespace testutil {

inline oracle::Vec to_vec(const clusterqis::StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

inline clusterqis::StateVector from_vec(const oracle::Vec& v, bool normalized = false) {
  return clusterqis::StateVector::from_amplitudes(v, normalized);
}

inline oracle::Vec input_vec(const clusterqis::SingleInput& in) { return {in.a0, in.b0}; }

inline oracle::Vec input_vec(const clusterqis::TwoInput& in) {
  return {in.amps.begin(), in.amps.end()};
}

inline oracle::Vec cluster_vec(const clusterqis::ClusterParams& p) {
  return oracle::cluster(p.alpha, p.beta, p.gamma, p.eta);
}

// Post-measurement remainder on qubit 4 of A 1 2 3 4 after Alice measures
// (A,1) and Bob measures (2,3).
inline oracle::Vec teleport_branch(const clusterqis::SingleInput& in, const clusterqis::ClusterParams& p,
                                   int alice_wire, int bob_wire) {
  const oracle::Vec psi = oracle::kron(input_vec(in), cluster_vec(p));
  const oracle::Vec after_alice = oracle::project_bell(psi, 5, 0, 1, alice_wire);  // 2 3 4
  return oracle::project_bell(after_alice, 3, 0, 1, bob_wire);                    // 4
}

// Remainder on (4,5) of a b 1 2 3 4 5 6 after (a,1), (b,6), (2,3).
inline oracle::Vec qis_branch(const clusterqis::TwoInput& in, const clusterqis::ClusterParams& p, int a1,
                              int a2, int bob) {
  const oracle::Vec psi = oracle::kron_all({input_vec(in), cluster_vec(p), oracle::bell(0)});
  const oracle::Vec s1 = oracle::project_bell(psi, 8, 0, 2, a1);  // b 2 3 4 5 6
  const oracle::Vec s2 = oracle::project_bell(s1, 6, 0, 5, a2);   // 2 3 4 5
  return oracle::project_bell(s2, 4, 0, 1, bob);                  // 4 5
}

}  // namespace testutil

#endif  // CLUSTERQIS_TESTS_TEST_UTIL_H
