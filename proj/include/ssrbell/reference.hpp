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

#ifndef SSRBELL_REFERENCE_HPP
#define SSRBELL_REFERENCE_HPP

#include <utility>
#include <vector>

#include "ssrbell/fock.hpp"

namespace ssrbell {

// Reference-frame design: the two-particle mixed family with an exact
// separability condition, and product references maximizing the coherence
// parameter.

/// Two-particle reference family: p00 |00><00| + p11 |11><11| + p_phi
/// |phi><phi| with |phi> = r0 |0,1> + r1 |1,0>, all coefficients real.
struct MinimalReference {
  double p00 = 1.0;
  double p11 = 0.0;
  double p_phi = 0.0;
  double r0 = 1.0;
  double r1 = 0.0;

  MinimalReference() = default;
  MinimalReference(double p00, double p11, double p_phi, double r0, double r1);

  double coherence() const { return p_phi * r0 * r1; }
};

DensityOperator minimal_to_density(const MinimalReference &m);

/// Analytic separability decision p00 p11 >= (p_phi r0 r1)^2, with slack
/// matched to the numeric positivity floor so that it agrees with the
/// partial-transpose route near the boundary.
bool is_separable_minimal(const MinimalReference &m);

/// Numeric route: smallest eigenvalue of the partial transpose (exact
/// separability test for this 2x2-per-side family when >= -1e-10).
double minimal_ppt_min_eigenvalue(const MinimalReference &m);

struct MaxSeparableCoherence {
  double v_max = 0.0;
  MinimalReference witness;
};

/// Maximizes p_phi r0 r1 over the separable members of the family by a
/// deterministic coarse grid (step 1e-3) plus golden-section refinement,
/// ties toward smaller p_phi. The optimum is 1/4 at p00 = p11 = 1/4,
/// p_phi = 1/2, r0 = r1 = 1/sqrt(2).
MaxSeparableCoherence max_v_separable_minimal();

/// Product reference |a'> (x) |b'> with real, normalized coefficient
/// vectors over occupations 0..N and 0..M.
struct ProductReference {
  Eigen::VectorXd a_coeffs;
  Eigen::VectorXd b_coeffs;

  ProductReference() = default;
  ProductReference(Eigen::VectorXd a, Eigen::VectorXd b);
};

PureState product_to_pure(const ProductReference &ref);

/// Closed-form per-side maximum of <a'|R+|a'>: cos(pi / (n + 2)).
double max_side_overlap(int n);

/// Closed-form optimal amplitudes sqrt(2/(n+2)) sin(pi (k+1)/(n+2)).
Eigen::VectorXd optimal_amplitudes(int n);

struct OptimalProduct {
  ProductReference ref;
  double f_n = 0.0;
  double g_m = 0.0;
  double v = 0.0;  // f_n * g_m
};

/// Product reference maximizing the coherence parameter at delta = 1. The
/// closed form is cross-checked inside against the top eigenvalue of the
/// (n+1)-dimensional symmetric matrix with unit strips off the diagonal;
/// disagreement beyond 1e-12 is a contract failure.
OptimalProduct optimal_product_reference(int n, int m);

/// Number-compliant separable reference: globally dephases the product
/// mixture {(1 - sum of weights, ref)} + mixing. Dephasing is local-ops plus
/// classical-communication (though not number-respecting locally), so the
/// output stays separable, and it leaves the coherence parameter unchanged.
DensityOperator separable_ssr_reference(
    const ProductReference &ref,
    const std::vector<std::pair<double, ProductReference>> &mixing = {});

}  // namespace ssrbell

#endif  // SSRBELL_REFERENCE_HPP
