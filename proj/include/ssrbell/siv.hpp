// Copyright 2026 The ssrbell developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSRBELL_SIV_HPP
#define SSRBELL_SIV_HPP

#include <cstdint>

#include "ssrbell/fock.hpp"
#include "ssrbell/reference.hpp"

namespace ssrbell {

// Superselection-induced variance: 4x the variance of one party's particle
// number. One unit corresponds to (|n,n+1> + |n+1,n>)/sqrt(2). Nonzero
// coherence parameter witnesses nonzero variance, and for the two-particle
// family the bound is tight.

/// 4 Var(N_A) of a pure state. For number-compliant states this equals
/// 4 Var(N_B); the equality is checked and a mismatch beyond 1e-12 fails
/// loudly.
double pure_siv(const PureState &phi);

/// Certified lower bound 4 (p_phi r0 r1)^2 on the variance of formation of
/// the two-particle family.
double vf_bound_minimal(const MinimalReference &m);

/// |coherence| <= sqrt(variance-of-formation bound)/2, an equality for this
/// family; evaluated through the actual density/coherence pipeline.
bool siv_witness_relation(const MinimalReference &m);

/// Randomized upper bound on the variance of formation: within each fixed
/// total-number sector, seeded random isometries reshuffle the eigen-
/// ensemble (sizes up to twice the sector rank) and the cheapest ensemble
/// average is kept. The eigen-ensemble itself is always a candidate.
/// Requires a number-compliant state.
double vf_ensemble_upper_bound(const DensityOperator &rho, int restarts = 64,
                               std::uint64_t seed = 0);

struct SIVReport {
  double pure_siv = 0.0;        // variance units of the coherent component
  double vf_lower_bound = 0.0;  // certified bound on the formation variance
  double v_abs = 0.0;           // |coherence parameter|
};

SIVReport siv_report_minimal(const MinimalReference &m);

}  // namespace ssrbell

#endif  // SSRBELL_SIV_HPP
