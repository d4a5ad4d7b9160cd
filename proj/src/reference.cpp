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

#include "ssrbell/reference.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "ssrbell/ssr.hpp"

namespace ssrbell {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MinimalReference::MinimalReference(double p00_, double p11_, double p_phi_,
                                   double r0_, double r1_)
    : p00(p00_), p11(p11_), p_phi(p_phi_), r0(r0_), r1(r1_) {
  if (p00 < 0 || p11 < 0 || p_phi < 0) {
    throw std::invalid_argument("mixture weights must be nonnegative");
  }
  double psum = p00 + p11 + p_phi;
  if (std::abs(psum - 1.0) > kNormTol) {
    throw std::invalid_argument("mixture weights sum to " + fmt_double(psum) +
                                ", expected 1");
  }
  double rnorm = r0 * r0 + r1 * r1;
  if (std::abs(rnorm - 1.0) > kNormTol) {
    throw std::invalid_argument("r0^2 + r1^2 = " + fmt_double(rnorm) +
                                ", expected 1");
  }
}

DensityOperator minimal_to_density(const MinimalReference &m) {
  FockCutoff c(2, 2);
  Matrix mat = Matrix::Zero(4, 4);
  mat(c.index(0, 0), c.index(0, 0)) = m.p00;
  mat(c.index(1, 1), c.index(1, 1)) = m.p11;
  Vector phi = Vector::Zero(4);
  phi(c.index(0, 1)) = m.r0;
  phi(c.index(1, 0)) = m.r1;
  mat += m.p_phi * (phi * phi.adjoint());
  mat /= mat.trace().real();  // absorbs the 1e-12 slack of the invariants
  return DensityOperator(c, std::move(mat));
}

bool is_separable_minimal(const MinimalReference &m) {
  double v = m.coherence();
  // Slack matched to the -1e-10 eigenvalue floor of the numeric route: a
  // violation x = v^2 - p00 p11 sits at partial-transpose eigenvalue
  // about -x / (p00 + p11), or -|v| when both weights vanish.
  double slack = 1e-10 * std::max(m.p00 + m.p11, std::abs(v));
  return m.p00 * m.p11 - v * v >= -slack;
}

double minimal_ppt_min_eigenvalue(const MinimalReference &m) {
  DensityOperator rho = minimal_to_density(m);
  Matrix pt = partial_transpose(rho, Side::B);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

namespace {

// Golden-section maximization of a unimodal function on [lo, hi].
double golden_max(const std::function<double(double)> &f, double lo, double hi,
                  double *arg_out) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  double x = (a + b) / 2;
  if (arg_out) *arg_out = x;
  return f(x);
}

// Best coherence at fixed weights: r0 r1 is capped at 1/2, and feasibility
// caps the product at sqrt(p00 p11).
double coherence_at(double p_phi, double p00) {
  double p11 = 1.0 - p_phi - p00;
  if (p11 < 0) return 0.0;
  return std::min(p_phi / 2.0, std::sqrt(p00 * p11));
}

}  // namespace

MaxSeparableCoherence max_v_separable_minimal() {
  const double step = 1e-3;
  double best_v = -1.0, best_phi = 0.0, best_p00 = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    double p_phi = i * step;
    for (int j = 0; i * step + j * step <= 1.0 + 1e-15; ++j) {
      double v = coherence_at(p_phi, j * step);
      if (v > best_v) {
        best_v = v;
        best_phi = p_phi;
        best_p00 = j * step;
      }
    }
  }
  auto outer = [&](double p_phi) {
    double inner_arg = 0.0;
    double hi = std::max(0.0, 1.0 - p_phi);
    return golden_max([&](double p00) { return coherence_at(p_phi, p00); },
                      0.0, hi, &inner_arg);
  };
  double phi_arg = best_phi;
  double refined = golden_max(outer, std::max(0.0, best_phi - 2 * step),
                              std::min(1.0, best_phi + 2 * step), &phi_arg);
  double p00_arg = best_p00;
  golden_max([&](double p00) { return coherence_at(phi_arg, p00); },
             std::max(0.0, best_p00 - 2 * step),
             std::min(1.0 - phi_arg, best_p00 + 2 * step), &p00_arg);

  MaxSeparableCoherence out;
  out.v_max = refined;
  double p11 = std::max(0.0, 1.0 - phi_arg - p00_arg);
  double c = phi_arg > 0 ? refined / phi_arg : 0.0;  // target r0 r1
  double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * c * c));
  double r0 = std::sqrt((1.0 + disc) / 2.0);
  double r1 = std::sqrt(std::max(0.0, 1.0 - r0 * r0));
  out.witness = MinimalReference(p00_arg, p11, phi_arg, r0, r1);
  return out;
}

ProductReference::ProductReference(Eigen::VectorXd a, Eigen::VectorXd b)
    : a_coeffs(std::move(a)), b_coeffs(std::move(b)) {
  if (a_coeffs.size() < 1 || b_coeffs.size() < 1) {
    throw std::invalid_argument("coefficient vectors must be nonempty");
  }
  for (const auto *side : {&a_coeffs, &b_coeffs}) {
    double n2 = side->squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTol) {
      throw std::invalid_argument("coefficient vector has squared norm " +
                                  fmt_double(n2) + ", expected 1");
    }
  }
}

PureState product_to_pure(const ProductReference &ref) {
  FockCutoff c(static_cast<int>(ref.a_coeffs.size()),
               static_cast<int>(ref.b_coeffs.size()));
  Vector v(c.total_dim());
  for (int i = 0; i < c.dim_a; ++i)
    for (int j = 0; j < c.dim_b; ++j)
      v(c.index(i, j)) = ref.a_coeffs(i) * ref.b_coeffs(j);
  return PureState(c, std::move(v));
}

double max_side_overlap(int n) {
  if (n < 1) throw std::invalid_argument("side size must be >= 1");
  return std::cos(std::numbers::pi / (n + 2));
}

Eigen::VectorXd optimal_amplitudes(int n) {
  if (n < 1) throw std::invalid_argument("side size must be >= 1");
  Eigen::VectorXd a(n + 1);
  for (int k = 0; k <= n; ++k) {
    a(k) = std::sqrt(2.0 / (n + 2)) *
           std::sin(std::numbers::pi * (k + 1) / (n + 2));
  }
  a /= a.norm();
  return a;
}

namespace {

double numeric_top_overlap(int n) {
  // Symmetric matrix with unit strips above and below the diagonal; the best
  // overlap <a'|R+|a'> over real unit vectors is half its top eigenvalue.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i < n; ++i) t(i, i + 1) = t(i + 1, i) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff() / 2.0;
}

}  // namespace

OptimalProduct optimal_product_reference(int n, int m) {
  OptimalProduct out;
  out.f_n = max_side_overlap(n);
  out.g_m = max_side_overlap(m);
  out.v = out.f_n * out.g_m;
  double v_numeric = numeric_top_overlap(n) * numeric_top_overlap(m);
  if (std::abs(out.v - v_numeric) > 1e-12) {
    throw ContractError("closed-form coherence " + fmt_double(out.v) +
                        " disagrees with eigensolver value " +
                        fmt_double(v_numeric));
  }
  out.ref = ProductReference(optimal_amplitudes(n), optimal_amplitudes(m));
  return out;
}

DensityOperator separable_ssr_reference(
    const ProductReference &ref,
    const std::vector<std::pair<double, ProductReference>> &mixing) {
  double wsum = 0.0;
  for (const auto &[w, r] : mixing) {
    if (w < -1e-12) throw std::invalid_argument("negative mixture weight");
    wsum += w;
  }
  if (wsum > 1.0 + 1e-12) {
    throw std::invalid_argument("mixture weights sum to " + fmt_double(wsum) +
                                " > 1");
  }
  std::vector<std::pair<double, const ProductReference *>> ensemble;
  ensemble.emplace_back(1.0 - wsum, &ref);
  for (const auto &[w, r] : mixing) ensemble.emplace_back(w, &r);

  int da = 0, db = 0;
  for (const auto &[w, r] : ensemble) {
    da = std::max(da, static_cast<int>(r->a_coeffs.size()));
    db = std::max(db, static_cast<int>(r->b_coeffs.size()));
  }
  FockCutoff c(da, db);
  Matrix mat = Matrix::Zero(c.total_dim(), c.total_dim());
  for (const auto &[w, r] : ensemble) {
    if (w <= 0) continue;
    Vector v = Vector::Zero(c.total_dim());
    for (int i = 0; i < r->a_coeffs.size(); ++i)
      for (int j = 0; j < r->b_coeffs.size(); ++j)
        v(c.index(i, j)) = r->a_coeffs(i) * r->b_coeffs(j);
    mat += w * (v * v.adjoint());
  }
  mat /= mat.trace().real();
  return twirl_global(DensityOperator(c, std::move(mat)));
}

}  // namespace ssrbell
