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

#ifndef SSRBELL_SSR_HPP
#define SSRBELL_SSR_HPP

#include <utility>

#include "ssrbell/fock.hpp"

namespace ssrbell {

// Particle-number superselection machinery: dephasing (twirling) channels,
// compliance tests, the ladder shift operators and the coherence parameter
// they witness.

/// Shift operators raising/lowering the occupation of a single mode by delta.
/// r_minus is the adjoint of r_plus; both have empty diagonals for delta >= 1.
struct LadderPair {
  int delta = 1;
  int dim = 2;
  Matrix r_plus;
  Matrix r_minus;

  static LadderPair make(int delta, int dim);
};

/// Dephases with respect to the total particle number: sum_n P_n rho P_n.
DensityOperator twirl_global(const DensityOperator &rho);

/// Dephases with respect to the particle number of one party only.
DensityOperator twirl_local(const DensityOperator &rho, Side side);

/// True iff rho commutes with the total-number operator (max-norm distance
/// from its global twirl at most 1e-10).
bool is_ssr_compliant(const DensityOperator &rho);

/// True iff rho is diagonal in the product number basis within 1e-10, i.e.
/// preparable by number-respecting local operations and classical
/// communication.
bool is_ssr_locc(const DensityOperator &rho);

// Coherence parameter: Re tr[(R+ (x) R-) rho] for the given delta. Nonzero
// value certifies off-diagonal number coherence shared between the parties.
// Requires 1 <= delta < min(dim_a, dim_b).
double coherence_parameter(const DensityOperator &rho, int delta);
double coherence_parameter(const PureState &phi, int delta);

struct CoherenceWitness {
  double v_abs = 0.0;    // largest |coherence| over the scanned deltas
  double v_signed = 0.0; // signed value at the maximizing delta
  int delta = 1;
};

/// Scans delta = 1..min(dim)-1 and reports the largest |coherence|. A zero
/// result for every delta is the witness condition for SSR-LOCC
/// preparability.
CoherenceWitness ssr_locc_witness(const DensityOperator &rho);

/// Returns (coherence of twirl_global(rho), coherence of rho). The two agree
/// because the ladder pair conserves total particle number; callers assert
/// the equality.
std::pair<double, double> twirl_invariance_check(const DensityOperator &rho,
                                                 int delta);

}  // namespace ssrbell

#endif  // SSRBELL_SSR_HPP
