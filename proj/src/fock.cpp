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

#include "ssrbell/fock.hpp"

#include <cstdio>

#include <Eigen/Eigenvalues>

namespace ssrbell {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

FockCutoff::FockCutoff(int a, int b) : dim_a(a), dim_b(b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("FockCutoff dimensions must be >= 1, got " +
                                std::to_string(a) + "x" + std::to_string(b));
  }
}

PureState::PureState(FockCutoff cutoff, Vector amps)
    : cutoff_(cutoff), amps_(std::move(amps)) {
  if (amps_.size() != cutoff_.total_dim()) {
    throw std::invalid_argument(
        "amplitude vector length " + std::to_string(amps_.size()) +
        " does not match cutoff dimension " +
        std::to_string(cutoff_.total_dim()));
  }
  double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw std::invalid_argument("pure state has squared norm " +
                                fmt_double(norm2) + ", expected 1");
  }
}

PureState PureState::basis(FockCutoff cutoff, int n_a, int n_b) {
  if (n_a < 0 || n_a >= cutoff.dim_a || n_b < 0 || n_b >= cutoff.dim_b) {
    throw std::invalid_argument("basis occupation (" + std::to_string(n_a) +
                                "," + std::to_string(n_b) +
                                ") outside cutoff");
  }
  Vector v = Vector::Zero(cutoff.total_dim());
  v(cutoff.index(n_a, n_b)) = 1.0;
  return PureState(cutoff, std::move(v));
}

DensityOperator::DensityOperator(FockCutoff cutoff, Matrix mat)
    : cutoff_(cutoff), mat_(std::move(mat)) {
  const int d = cutoff_.total_dim();
  if (mat_.rows() != d || mat_.cols() != d) {
    throw std::invalid_argument("density matrix is " +
                                std::to_string(mat_.rows()) + "x" +
                                std::to_string(mat_.cols()) +
                                ", cutoff requires " + std::to_string(d));
  }
  double herm_dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kNormTol) {
    throw std::invalid_argument("density matrix not Hermitian, deviation " +
                                fmt_double(herm_dev));
  }
  Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kNormTol) {
    throw std::invalid_argument("density matrix has trace " +
                                fmt_double(tr.real()) + (tr.imag() >= 0 ? "+" : "") +
                                fmt_double(tr.imag()) + "i, expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPsdFloor) {
    throw std::invalid_argument("density matrix has negative eigenvalue " +
                                fmt_double(min_eig));
  }
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
  Matrix m = psi.amps() * psi.amps().adjoint();
  return DensityOperator(psi.cutoff(), std::move(m));
}

LocalOperator::LocalOperator(int d, Matrix m) : dim(d), mat(std::move(m)) {
  if (mat.rows() != dim || mat.cols() != dim) {
    throw std::invalid_argument("local operator shape does not match dim");
  }
  if (!mat.allFinite()) {
    throw std::invalid_argument("local operator has non-finite entries");
  }
}

namespace {

FockCutoff combined_cutoff(const FockCutoff &c1, const FockCutoff &c2,
                           int max_dim) {
  long da = static_cast<long>(c1.dim_a) * c2.dim_a;
  long db = static_cast<long>(c1.dim_b) * c2.dim_b;
  if (da * db > max_dim) {
    throw std::length_error("tensor product dimension " +
                            std::to_string(da * db) +
                            " exceeds the configured maximum " +
                            std::to_string(max_dim));
  }
  return FockCutoff(static_cast<int>(da), static_cast<int>(db));
}

}  // namespace

PureState tensor(const PureState &x, const PureState &y, int max_dim) {
  const FockCutoff &c1 = x.cutoff();
  const FockCutoff &c2 = y.cutoff();
  FockCutoff out = combined_cutoff(c1, c2, max_dim);
  Vector v(out.total_dim());
  for (int a1 = 0; a1 < c1.dim_a; ++a1)
    for (int a2 = 0; a2 < c2.dim_a; ++a2)
      for (int b1 = 0; b1 < c1.dim_b; ++b1)
        for (int b2 = 0; b2 < c2.dim_b; ++b2) {
          int a = a1 * c2.dim_a + a2;
          int b = b1 * c2.dim_b + b2;
          v(out.index(a, b)) = x.amp(a1, b1) * y.amp(a2, b2);
        }
  return PureState(out, std::move(v));
}

DensityOperator tensor(const DensityOperator &x, const DensityOperator &y,
                       int max_dim) {
  const FockCutoff &c1 = x.cutoff();
  const FockCutoff &c2 = y.cutoff();
  FockCutoff out = combined_cutoff(c1, c2, max_dim);
  const int d = out.total_dim();
  Matrix m(d, d);
  // Row index (a1 a2, b1 b2), column (a1' a2', b1' b2'); entry is the product
  // of the two factors' entries with matching primed/unprimed labels.
  for (int r = 0; r < d; ++r) {
    int a = out.occupation_a(r), b = out.occupation_b(r);
    int a1 = a / c2.dim_a, a2 = a % c2.dim_a;
    int b1 = b / c2.dim_b, b2 = b % c2.dim_b;
    int r1 = c1.index(a1, b1), r2 = c2.index(a2, b2);
    for (int c = 0; c < d; ++c) {
      int ac = out.occupation_a(c), bc = out.occupation_b(c);
      int a1c = ac / c2.dim_a, a2c = ac % c2.dim_a;
      int b1c = bc / c2.dim_b, b2c = bc % c2.dim_b;
      m(r, c) = x.mat()(r1, c1.index(a1c, b1c)) * y.mat()(r2, c2.index(a2c, b2c));
    }
  }
  return DensityOperator(out, std::move(m));
}

LocalOperator partial_trace(const DensityOperator &rho, Side traced_out) {
  const FockCutoff &c = rho.cutoff();
  if (traced_out == Side::B) {
    Matrix m = Matrix::Zero(c.dim_a, c.dim_a);
    for (int a = 0; a < c.dim_a; ++a)
      for (int ap = 0; ap < c.dim_a; ++ap)
        for (int b = 0; b < c.dim_b; ++b)
          m(a, ap) += rho.mat()(c.index(a, b), c.index(ap, b));
    return LocalOperator(c.dim_a, std::move(m));
  }
  Matrix m = Matrix::Zero(c.dim_b, c.dim_b);
  for (int b = 0; b < c.dim_b; ++b)
    for (int bp = 0; bp < c.dim_b; ++bp)
      for (int a = 0; a < c.dim_a; ++a)
        m(b, bp) += rho.mat()(c.index(a, b), c.index(a, bp));
  return LocalOperator(c.dim_b, std::move(m));
}

Matrix partial_transpose(const DensityOperator &rho, Side side) {
  const FockCutoff &c = rho.cutoff();
  const int d = c.total_dim();
  Matrix m(d, d);
  for (int a = 0; a < c.dim_a; ++a)
    for (int b = 0; b < c.dim_b; ++b)
      for (int ap = 0; ap < c.dim_a; ++ap)
        for (int bp = 0; bp < c.dim_b; ++bp) {
          if (side == Side::B) {
            m(c.index(a, b), c.index(ap, bp)) =
                rho.mat()(c.index(a, bp), c.index(ap, b));
          } else {
            m(c.index(a, b), c.index(ap, bp)) =
                rho.mat()(c.index(ap, b), c.index(a, bp));
          }
        }
  return m;
}

Matrix total_number_projector(int n, const FockCutoff &cutoff) {
  const int d = cutoff.total_dim();
  Matrix m = Matrix::Zero(d, d);
  if (n < 0 || n > cutoff.max_total_number()) return m;
  for (int a = 0; a < cutoff.dim_a; ++a) {
    int b = n - a;
    if (b >= 0 && b < cutoff.dim_b) {
      int i = cutoff.index(a, b);
      m(i, i) = 1.0;
    }
  }
  return m;
}

}  // namespace ssrbell
