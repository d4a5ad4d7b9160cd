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

#ifndef SSRBELL_BELL_HPP
#define SSRBELL_BELL_HPP

#include <cstdint>
#include <vector>

#include "ssrbell/fock.hpp"
#include "ssrbell/ssr.hpp"

namespace ssrbell {

// Number-conserving Bell experiment: entangled principal pair, shared
// reference state, dichotomic local measurements compatible with the
// particle-number superselection rule, and CHSH evaluation.

/// Entangled principal system shared by the two parties.
///
/// The standard form superposes occupations (2, 2+delta) against
/// (2+delta, 2); the shifted variant uses (0, delta), which covers the
/// single-particle scenario at delta = 1 but demands a reference with no
/// vacuum component. The general form is an arbitrary fixed-total-number
/// superposition sum c_n |n, N-n>; it supports the randomized-observable
/// statistics check only, not the angle-parameterized measurements.
class PrincipalState {
 public:
  static PrincipalState standard(int delta);
  static PrincipalState single_particle(int delta = 1);
  static PrincipalState general(const std::vector<Complex> &coeffs);

  int delta() const { return delta_; }
  /// Lower occupation of the entangled pair: 2 (standard), 0 (shifted),
  /// -1 for the general form.
  int base() const { return base_; }
  const PureState &state() const { return state_; }
  bool supports_observables() const { return base_ >= 0; }

 private:
  PrincipalState(int delta, int base, PureState state);

  int delta_;
  int base_;
  PureState state_;
};

/// Dichotomic observable on one party's (principal, reference) pair.
/// Each eigenvector carries a fixed local total particle number, so the
/// measurement respects the superselection rule. Families are indexed by
/// a = -delta..n_ref (a = 0..n_ref for the shifted variant).
struct SSRObservable {
  double angle = 0.0;
  int delta = 1;
  int n_ref = 0;           // highest reference occupation the space holds
  Side side = Side::A;
  int principal_base = 2;
  std::vector<int> labels;
  std::vector<PureState> eigvecs_plus;
  std::vector<PureState> eigvecs_minus;
};

/// Builds the measurement eigenbasis on a local pair space with the given
/// cutoff (principal dimension, reference dimension). The principal
/// dimension must hold occupations up to principal_base + delta + 1, the
/// reference dimension must be n_ref + 1 or larger, and n_ref >= delta.
SSRObservable build_observable(double angle, int delta, int n_ref, Side side,
                               const FockCutoff &local_cutoff,
                               int principal_base = 2);
/// Same, on the minimal space: principal dimension base+delta+2, reference
/// dimension n_ref+1.
SSRObservable build_observable(double angle, int delta, int n_ref, Side side,
                               int principal_base = 2);

/// Joint outcome probabilities for one run: Alice measures at angle alpha,
/// Bob at beta, on the principal state together with a pure
/// fixed-total-number reference. Probabilities are squared overlaps with the
/// measurement eigenvectors; any weight outside the listed eigenbasis (the
/// "null" outcome) beyond 1e-12 is a loud contract failure.
struct OutcomeProbabilities {
  int delta = 1;
  std::vector<int> a_labels;
  std::vector<int> b_labels;
  // p_xy(i, j): probability of Alice outcome x and Bob outcome y at family
  // indices a_labels[i], b_labels[j]; p = +1 eigenvector, m = -1.
  Eigen::MatrixXd p_pp, p_pm, p_mp, p_mm;
  double null_mass = 0.0;

  double total() const;
  double correlation() const;  // sum of (p_pp + p_mm - p_pm - p_mp)
};

OutcomeProbabilities outcome_probabilities(const PrincipalState &psi,
                                           const PureState &phi_ref,
                                           double alpha, double beta);

/// Correlation computed along both routes, which must agree within 1e-10:
/// brute force (eigenbasis overlaps on the assembled joint state, convex
/// over the reference's fixed-number pure components) and the closed form
/// -cos2a cos2b + V sin2a sin2b with V the reference's coherence parameter.
struct CorrelationBreakdown {
  double brute_force = 0.0;
  double closed_form = 0.0;
  double coherence = 0.0;
  double max_prob_dev = 0.0;  // worst |table total - 1| over components
};

CorrelationBreakdown correlation_breakdown(const PrincipalState &psi,
                                           const DensityOperator &rho_ref,
                                           double alpha, double beta);

double correlation(const PrincipalState &psi, const DensityOperator &rho_ref,
                   double alpha, double beta);
double correlation(const PrincipalState &psi, const PureState &phi_ref,
                   double alpha, double beta);

struct CHSHSettings {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// E(a1,b1) + E(a1,b2) + E(a2,b1) - E(a2,b2).
double chsh(const PrincipalState &psi, const DensityOperator &rho_ref,
            const CHSHSettings &settings);

struct OptimalCHSH {
  double s_max = 2.0;
  CHSHSettings settings;
};

/// Largest CHSH value reachable with coherence v: 2 sqrt(1 + v^2), attained
/// at alpha1 = 0, alpha2 = pi/4, beta1 = -beta2 with (cos 2b, sin 2b)
/// proportional to (-2, 2v). Requires |v| <= 1.
OptimalCHSH chsh_optimal(double v);

/// Statistics-equality check behind the no-violation theorem for locally
/// prepared references: draws `trials` seeded random number-respecting local
/// projective observables (block rotations within fixed local-total sectors)
/// and compares every joint outcome probability on (i) the coherent joint
/// state and (ii) the dephased separable mixture. True iff all probabilities
/// agree within 1e-10. The reference must be diagonal in the product number
/// basis.
bool ssr_locc_lhv_check(const PrincipalState &psi, const DensityOperator &ref,
                        std::uint64_t seed, int trials = 1);

// Sector-pure convex decomposition of a number-compliant density operator:
// the reference is projected onto each total-number sector and each block is
// eigendecomposed, so every component is a fixed-total-number pure state.
std::vector<std::pair<double, PureState>> sector_pure_decomposition(
    const DensityOperator &rho);

}  // namespace ssrbell

#endif  // SSRBELL_BELL_HPP
