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

#include <Eigen/Eigenvalues>

#include "ssrbell/fock.hpp"
#include "test_util.hpp"

using namespace ssrbell;
using ssrbell::testing::random_density;
using ssrbell::testing::random_pure;

namespace {

// Test-side oracle: trace out the second tensor factor from the regrouped
// ((A,A'),(B,B')) layout, recovering the first factor.
Matrix trace_out_second_factor(const DensityOperator &joint,
                               const FockCutoff &c1, const FockCutoff &c2) {
  const FockCutoff &cj = joint.cutoff();
  Matrix out = Matrix::Zero(c1.total_dim(), c1.total_dim());
  for (int a1 = 0; a1 < c1.dim_a; ++a1)
    for (int b1 = 0; b1 < c1.dim_b; ++b1)
      for (int a1p = 0; a1p < c1.dim_a; ++a1p)
        for (int b1p = 0; b1p < c1.dim_b; ++b1p)
          for (int a2 = 0; a2 < c2.dim_a; ++a2)
            for (int b2 = 0; b2 < c2.dim_b; ++b2) {
              out(c1.index(a1, b1), c1.index(a1p, b1p)) += joint.mat()(
                  cj.index(a1 * c2.dim_a + a2, b1 * c2.dim_b + b2),
                  cj.index(a1p * c2.dim_a + a2, b1p * c2.dim_b + b2));
            }
  return out;
}

}  // namespace

TEST_CASE("cutoff validation and index math") {
  CHECK_THROWS_AS(FockCutoff(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FockCutoff(3, -1), std::invalid_argument);
  FockCutoff c(3, 4);
  CHECK(c.total_dim() == 12);
  CHECK(c.index(2, 3) == 11);
  CHECK(c.occupation_a(11) == 2);
  CHECK(c.occupation_b(11) == 3);
  CHECK(c.max_total_number() == 5);
}

TEST_CASE("pure state norm is enforced") {
  FockCutoff c(2, 2);
  Vector v = Vector::Zero(4);
  v(0) = 0.9;
  CHECK_THROWS_WITH_AS(PureState(c, v), doctest::Contains("norm"),
                       std::invalid_argument);
  v(0) = 1.0;
  CHECK_NOTHROW(PureState(c, v));
}

TEST_CASE("density operator invariants are enforced") {
  FockCutoff c(2, 1);
  SUBCASE("trace") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 0.9;
    CHECK_THROWS_WITH_AS(DensityOperator(c, m), doctest::Contains("0.9"),
                         std::invalid_argument);
  }
  SUBCASE("hermiticity") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = Complex(0.0, 1e-3);
    CHECK_THROWS_WITH_AS(DensityOperator(c, m), doctest::Contains("Hermitian"),
                         std::invalid_argument);
  }
  SUBCASE("positivity") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(DensityOperator(c, m),
                         doctest::Contains("eigenvalue"), std::invalid_argument);
  }
}

TEST_CASE("tensor groups each party's subsystems") {
  FockCutoff c(2, 2);
  PureState x = PureState::basis(c, 0, 1);
  PureState y = PureState::basis(c, 1, 0);
  PureState joint = tensor(x, y);
  CHECK(joint.cutoff() == FockCutoff(4, 4));
  // Alice holds (0, 1) -> flat 1, Bob holds (1, 0) -> flat 2.
  CHECK(joint.amp(1, 2) == Complex(1.0, 0.0));
  CHECK(joint.amps().cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("tensor preserves norm and trace") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    PureState x = random_pure(FockCutoff(2, 3), rng);
    PureState y = random_pure(FockCutoff(3, 2), rng);
    CHECK(tensor(x, y).amps().squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    DensityOperator rx = random_density(FockCutoff(2, 2), rng);
    DensityOperator ry = random_density(FockCutoff(2, 3), rng);
    CHECK(tensor(rx, ry).mat().trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("tensor rejects oversized products") {
  std::mt19937_64 rng(3);
  PureState x = random_pure(FockCutoff(8, 8), rng);
  PureState y = random_pure(FockCutoff(9, 9), rng);
  CHECK_THROWS_AS(tensor(x, y), std::length_error);
  CHECK_NOTHROW(tensor(x, y, 8 * 9 * 8 * 9));
}

TEST_CASE("partial trace of a product state") {
  FockCutoff c(2, 2);
  DensityOperator rho = DensityOperator::from_pure(PureState::basis(c, 0, 1));
  LocalOperator a = partial_trace(rho, Side::B);
  CHECK(a.dim == 2);
  CHECK(std::abs(a.mat(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(a.mat(1, 1)) < 1e-15);
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  FockCutoff c(2, 2);
  Vector v = Vector::Zero(4);
  v(c.index(0, 1)) = 1 / std::sqrt(2.0);
  v(c.index(1, 0)) = 1 / std::sqrt(2.0);
  DensityOperator rho = DensityOperator::from_pure(PureState(c, v));
  LocalOperator a = partial_trace(rho, Side::B);
  CHECK(std::abs(a.mat(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(a.mat(1, 1) - 0.5) < 1e-15);
  CHECK(std::abs(a.mat(0, 1)) < 1e-15);
}

TEST_CASE("partial trace preserves trace on random states") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    DensityOperator rho = random_density(FockCutoff(3, 4), rng);
    CHECK(partial_trace(rho, Side::A).mat.trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(partial_trace(rho, Side::B).mat.trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("tensor and partial trace are mutually consistent") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    FockCutoff c1(2, 3), c2(3, 2);
    DensityOperator rho = random_density(c1, rng);
    DensityOperator sigma = random_density(c2, rng);
    DensityOperator joint = tensor(rho, sigma);

    Matrix back = trace_out_second_factor(joint, c1, c2);
    CHECK((back - rho.mat()).cwiseAbs().maxCoeff() < 1e-12);

    // Side marginal of the product factorizes into side marginals.
    LocalOperator lhs = partial_trace(joint, Side::B);
    Matrix rhs = Matrix::Zero(lhs.dim, lhs.dim);
    LocalOperator ra = partial_trace(rho, Side::B);
    LocalOperator sa = partial_trace(sigma, Side::B);
    for (int i1 = 0; i1 < ra.dim; ++i1)
      for (int i2 = 0; i2 < sa.dim; ++i2)
        for (int j1 = 0; j1 < ra.dim; ++j1)
          for (int j2 = 0; j2 < sa.dim; ++j2)
            rhs(i1 * sa.dim + i2, j1 * sa.dim + j2) =
                ra.mat(i1, j1) * sa.mat(i2, j2);
    CHECK((lhs.mat - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("partial transpose basics") {
  std::mt19937_64 rng(17);
  SUBCASE("diagonal states are fixed points") {
    FockCutoff c(2, 2);
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 0.25;
    m(1, 1) = 0.25;
    m(2, 2) = 0.25;
    m(3, 3) = 0.25;
    DensityOperator rho(c, m);
    CHECK((partial_transpose(rho, Side::B) - m).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("Bell pair has negative eigenvalue -1/2") {
    FockCutoff c(2, 2);
    Vector v = Vector::Zero(4);
    v(c.index(0, 1)) = 1 / std::sqrt(2.0);
    v(c.index(1, 0)) = 1 / std::sqrt(2.0);
    Matrix pt = partial_transpose(DensityOperator::from_pure(PureState(c, v)),
                                  Side::B);
    Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("double application is the identity, hermiticity kept") {
    auto pt_raw = [](const Matrix &m, const FockCutoff &c, Side side) {
      Matrix out(m.rows(), m.cols());
      for (int a = 0; a < c.dim_a; ++a)
        for (int b = 0; b < c.dim_b; ++b)
          for (int ap = 0; ap < c.dim_a; ++ap)
            for (int bp = 0; bp < c.dim_b; ++bp)
              out(c.index(a, b), c.index(ap, bp)) =
                  side == Side::B ? m(c.index(a, bp), c.index(ap, b))
                                  : m(c.index(ap, b), c.index(a, bp));
      return out;
    };
    for (Side side : {Side::A, Side::B}) {
      DensityOperator rho = random_density(FockCutoff(3, 3), rng);
      Matrix pt = partial_transpose(rho, side);
      CHECK((pt - pt.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
      Matrix back = pt_raw(pt, rho.cutoff(), side);
      CHECK((back - rho.mat()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("total number projectors") {
  FockCutoff c(3, 3);
  SUBCASE("n = 0 is the vacuum projector") {
    Matrix p0 = total_number_projector(0, c);
    CHECK(p0(0, 0) == Complex(1.0, 0.0));
    CHECK(p0.cwiseAbs().sum() == 1.0);
  }
  SUBCASE("out-of-range n gives the zero matrix") {
    CHECK(total_number_projector(-1, c).cwiseAbs().maxCoeff() == 0.0);
    CHECK(total_number_projector(5, c).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("family is complete and orthogonal, entries exact") {
    Matrix sum = Matrix::Zero(9, 9);
    for (int n = 0; n <= c.max_total_number(); ++n) {
      Matrix pn = total_number_projector(n, c);
      sum += pn;
      for (int m = 0; m <= c.max_total_number(); ++m) {
        Matrix pm = total_number_projector(m, c);
        Matrix prod = pn * pm;
        if (n == m) {
          CHECK((prod - pn).cwiseAbs().maxCoeff() == 0.0);
        } else {
          CHECK(prod.cwiseAbs().maxCoeff() == 0.0);
        }
      }
    }
    CHECK((sum - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() == 0.0);
  }
}
