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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssrbell/siv.hpp"
#include "ssrbell/ssr.hpp"
#include "test_util.hpp"

using namespace ssrbell;
using namespace ssrbell::testing;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

PureState unit_state(int n) {
  FockCutoff c(n + 2, n + 2);
  Vector v = Vector::Zero(c.total_dim());
  v(c.index(n, n + 1)) = kInvSqrt2;
  v(c.index(n + 1, n)) = kInvSqrt2;
  return PureState(c, std::move(v));
}

}  // namespace

TEST_CASE("variance units") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(pure_siv(unit_state(n)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("number eigenstates carry none") {
    CHECK(pure_siv(PureState::basis(FockCutoff(3, 4), 2, 1)) == 0.0);
  }
  SUBCASE("two-particle split carries four units") {
    FockCutoff c(3, 3);
    Vector v = Vector::Zero(9);
    v(c.index(0, 2)) = kInvSqrt2;
    v(c.index(2, 0)) = kInvSqrt2;
    CHECK(pure_siv(PureState(c, v)) == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("party symmetry on compliant states") {
    std::mt19937_64 rng(51);
    for (int n_prime = 1; n_prime <= 6; ++n_prime) {
      CHECK_NOTHROW(pure_siv(random_sector_pure(n_prime, rng)));
    }
  }
  SUBCASE("non-compliant states are still measured on side A") {
    FockCutoff c(2, 2);
    Vector v = Vector::Zero(4);
    v(c.index(0, 0)) = kInvSqrt2;
    v(c.index(1, 1)) = kInvSqrt2;
    CHECK(pure_siv(PureState(c, v)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("variance-of-formation lower bound") {
  CHECK(vf_bound_minimal(MinimalReference(0, 0, 1, kInvSqrt2, kInvSqrt2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(vf_bound_minimal(MinimalReference(0.3, 0.7, 0.0, 1, 0)) == 0.0);
  CHECK(vf_bound_minimal(MinimalReference(0.25, 0.25, 0.5, kInvSqrt2,
                                          kInvSqrt2)) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("witness relation holds across the family") {
  CHECK(siv_witness_relation(MinimalReference(0.3, 0.7, 0.0, 1, 0)));
  std::mt19937_64 rng(53);
  for (int i = 0; i < 2000; ++i) {
    CHECK(siv_witness_relation(random_minimal(rng)));
  }
  SUBCASE("nonzero coherence forces a nonzero bound") {
    std::mt19937_64 rng2(54);
    for (int i = 0; i < 200; ++i) {
      MinimalReference m = random_minimal(rng2);
      if (std::abs(m.coherence()) > 0) CHECK(vf_bound_minimal(m) > 0);
    }
  }
}

TEST_CASE("ensemble upper bound") {
  SUBCASE("pure compliant state: the single-element ensemble") {
    FockCutoff c(2, 2);
    Vector v = Vector::Zero(4);
    v(c.index(0, 1)) = kInvSqrt2;
    v(c.index(1, 0)) = kInvSqrt2;
    PureState phi(c, v);
    double ub =
        vf_ensemble_upper_bound(DensityOperator::from_pure(phi), 16, 1);
    CHECK(ub == doctest::Approx(pure_siv(phi)).epsilon(1e-9));
  }
  SUBCASE("product-basis diagonal states cost nothing") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 10; ++i) {
      DensityOperator diag = random_diag(FockCutoff(3, 3), rng);
      CHECK(vf_ensemble_upper_bound(diag, 8, rng()) <= 1e-9);
      CHECK(std::abs(coherence_parameter(diag, 1)) < 1e-12);
    }
  }
  SUBCASE("minimal family sandwich") {
    MinimalReference m(0.25, 0.25, 0.5, kInvSqrt2, kInvSqrt2);
    double lower = vf_bound_minimal(m);
    double upper = vf_ensemble_upper_bound(minimal_to_density(m), 16, 2);
    CHECK(lower == doctest::Approx(0.25).epsilon(1e-12));
    // Every sector block of this family is rank one, so the roof is exactly
    // p_phi times the coherent component's variance.
    CHECK(upper == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(upper >= lower - 1e-9);
  }
  SUBCASE("sandwich holds on random members") {
    std::mt19937_64 rng(56);
    for (int i = 0; i < 500; ++i) {
      MinimalReference m = random_minimal(rng);
      double upper = vf_ensemble_upper_bound(minimal_to_density(m), 4, rng());
      CHECK(upper >= vf_bound_minimal(m) - 1e-9);
    }
  }
  SUBCASE("more restarts never hurt") {
    std::mt19937_64 rng(57);
    DensityOperator rho =
        twirl_global(random_density(FockCutoff(3, 3), rng, 4));
    double eigen_only = vf_ensemble_upper_bound(rho, 0, 3);
    double refined = vf_ensemble_upper_bound(rho, 64, 3);
    CHECK(refined <= eigen_only + 1e-12);
    CHECK(refined >= 0.0);
  }
  SUBCASE("same seed, same answer") {
    std::mt19937_64 rng(58);
    DensityOperator rho =
        twirl_global(random_density(FockCutoff(3, 3), rng, 4));
    CHECK(vf_ensemble_upper_bound(rho, 32, 9) ==
          vf_ensemble_upper_bound(rho, 32, 9));
  }
  SUBCASE("cross-sector coherence is rejected") {
    FockCutoff c(2, 2);
    Vector v = Vector::Zero(4);
    v(c.index(0, 0)) = kInvSqrt2;
    v(c.index(1, 1)) = kInvSqrt2;
    CHECK_THROWS_AS(
        vf_ensemble_upper_bound(DensityOperator::from_pure(PureState(c, v)), 4, 0),
        std::invalid_argument);
  }
}

TEST_CASE("minimal-family report") {
  MinimalReference m(0.25, 0.25, 0.5, kInvSqrt2, kInvSqrt2);
  SIVReport rep = siv_report_minimal(m);
  CHECK(rep.pure_siv == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.vf_lower_bound == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rep.v_abs == doctest::Approx(0.25).epsilon(1e-12));
}
