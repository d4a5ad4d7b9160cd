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

#include "ssrbell/ssr.hpp"

namespace ssrbell {

namespace {

constexpr double kComplianceTol = 1e-10;

void check_delta(int delta, const FockCutoff &c) {
  int min_dim = std::min(c.dim_a, c.dim_b);
  if (delta < 1 || delta >= min_dim) {
    throw std::invalid_argument("delta " + std::to_string(delta) +
                                " out of range [1, " +
                                std::to_string(min_dim - 1) + "]");
  }
}

}  // namespace

LadderPair LadderPair::make(int delta, int dim) {
  if (delta < 1 || dim < 1) {
    throw std::invalid_argument("ladder pair requires delta >= 1, dim >= 1");
  }
  Matrix plus = Matrix::Zero(dim, dim);
  for (int a = 0; a + delta < dim; ++a) plus(a + delta, a) = 1.0;
  LadderPair lp;
  lp.delta = delta;
  lp.dim = dim;
  lp.r_plus = plus;
  lp.r_minus = plus.adjoint();
  return lp;
}

DensityOperator twirl_global(const DensityOperator &rho) {
  const FockCutoff &c = rho.cutoff();
  const int d = c.total_dim();
  Matrix m = rho.mat();
  for (int r = 0; r < d; ++r) {
    int tr = c.occupation_a(r) + c.occupation_b(r);
    for (int col = 0; col < d; ++col) {
      int tc = c.occupation_a(col) + c.occupation_b(col);
      if (tr != tc) m(r, col) = 0.0;
    }
  }
  return DensityOperator(c, std::move(m));
}

DensityOperator twirl_local(const DensityOperator &rho, Side side) {
  const FockCutoff &c = rho.cutoff();
  const int d = c.total_dim();
  Matrix m = rho.mat();
  for (int r = 0; r < d; ++r) {
    int nr = side == Side::A ? c.occupation_a(r) : c.occupation_b(r);
    for (int col = 0; col < d; ++col) {
      int nc = side == Side::A ? c.occupation_a(col) : c.occupation_b(col);
      if (nr != nc) m(r, col) = 0.0;
    }
  }
  return DensityOperator(c, std::move(m));
}

bool is_ssr_compliant(const DensityOperator &rho) {
  const FockCutoff &c = rho.cutoff();
  const int d = c.total_dim();
  double dev = 0.0;
  for (int r = 0; r < d; ++r) {
    int tr = c.occupation_a(r) + c.occupation_b(r);
    for (int col = 0; col < d; ++col) {
      int tc = c.occupation_a(col) + c.occupation_b(col);
      if (tr != tc) dev = std::max(dev, std::abs(rho.mat()(r, col)));
    }
  }
  return dev <= kComplianceTol;
}

bool is_ssr_locc(const DensityOperator &rho) {
  const int d = rho.dim();
  double dev = 0.0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c) dev = std::max(dev, std::abs(rho.mat()(r, c)));
  return dev <= kComplianceTol;
}

double coherence_parameter(const DensityOperator &rho, int delta) {
  const FockCutoff &c = rho.cutoff();
  check_delta(delta, c);
  // tr[(R+ (x) R-) rho] = sum over the ladder's nonzero entries of the
  // matching rho element: row (a+delta, b-delta), column (a, b).
  Complex sum = 0.0;
  for (int a = 0; a + delta < c.dim_a; ++a)
    for (int b = delta; b < c.dim_b; ++b)
      sum += rho.mat()(c.index(a, b), c.index(a + delta, b - delta));
  return sum.real();
}

double coherence_parameter(const PureState &phi, int delta) {
  const FockCutoff &c = phi.cutoff();
  check_delta(delta, c);
  Complex sum = 0.0;
  for (int a = 0; a + delta < c.dim_a; ++a)
    for (int b = delta; b < c.dim_b; ++b)
      sum += std::conj(phi.amp(a + delta, b - delta)) * phi.amp(a, b);
  return sum.real();
}

CoherenceWitness ssr_locc_witness(const DensityOperator &rho) {
  const FockCutoff &c = rho.cutoff();
  CoherenceWitness w;
  int min_dim = std::min(c.dim_a, c.dim_b);
  for (int delta = 1; delta < min_dim; ++delta) {
    double v = coherence_parameter(rho, delta);
    if (std::abs(v) > w.v_abs) {
      w.v_abs = std::abs(v);
      w.v_signed = v;
      w.delta = delta;
    }
  }
  return w;
}

std::pair<double, double> twirl_invariance_check(const DensityOperator &rho,
                                                 int delta) {
  return {coherence_parameter(twirl_global(rho), delta),
          coherence_parameter(rho, delta)};
}

}  // namespace ssrbell
