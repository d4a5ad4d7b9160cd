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

#include "ssrbell/siv.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "ssrbell/ssr.hpp"

namespace ssrbell {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double four_times_variance(const PureState &phi, Side side) {
  const FockCutoff &c = phi.cutoff();
  double mean = 0.0, second = 0.0;
  for (int i = 0; i < c.total_dim(); ++i) {
    double w = std::norm(phi.amps()(i));
    double n = side == Side::A ? c.occupation_a(i) : c.occupation_b(i);
    mean += n * w;
    second += n * n * w;
  }
  return 4.0 * std::max(0.0, second - mean * mean);
}

bool pure_is_number_compliant(const PureState &phi) {
  const FockCutoff &c = phi.cutoff();
  int sector = -1;
  for (int i = 0; i < c.total_dim(); ++i) {
    if (std::abs(phi.amps()(i)) <= 1e-10) continue;
    int n = c.occupation_a(i) + c.occupation_b(i);
    if (sector < 0) sector = n;
    if (n != sector) return false;
  }
  return true;
}

}  // namespace

double pure_siv(const PureState &phi) {
  double va = four_times_variance(phi, Side::A);
  if (pure_is_number_compliant(phi)) {
    double vb = four_times_variance(phi, Side::B);
    if (std::abs(va - vb) > 1e-12) {
      throw ContractError("party-exchange symmetry broken: A-side variance " +
                          fmt_double(va) + " vs B-side " + fmt_double(vb));
    }
  }
  return va;
}

double vf_bound_minimal(const MinimalReference &m) {
  double v = m.coherence();
  return 4.0 * v * v;
}

bool siv_witness_relation(const MinimalReference &m) {
  double v = coherence_parameter(minimal_to_density(m), 1);
  return std::abs(v) <= std::sqrt(vf_bound_minimal(m)) / 2.0 + 1e-12;
}

double vf_ensemble_upper_bound(const DensityOperator &rho, int restarts,
                               std::uint64_t seed) {
  if (!is_ssr_compliant(rho)) {
    throw std::invalid_argument(
        "variance of formation is defined over number-compliant ensembles; "
        "the state has cross-sector coherences");
  }
  if (restarts < 0) throw std::invalid_argument("restarts must be >= 0");
  const FockCutoff &c = rho.cutoff();
  const int d = c.total_dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double total = 0.0;
  for (int n = 0; n <= c.max_total_number(); ++n) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i) {
      if (c.occupation_a(i) + c.occupation_b(i) == n) idx.push_back(i);
    }
    const int s = static_cast<int>(idx.size());
    Matrix block(s, s);
    for (int r = 0; r < s; ++r)
      for (int q = 0; q < s; ++q) block(r, q) = rho.mat()(idx[r], idx[q]);
    if (block.trace().real() <= 1e-14) continue;

    Eigen::SelfAdjointEigenSolver<Matrix> es(block);
    std::vector<int> keep;
    for (int k = 0; k < s; ++k) {
      if (es.eigenvalues()(k) > 1e-14) keep.push_back(k);
    }
    const int rank = static_cast<int>(keep.size());
    if (rank == 0) continue;

    auto state_from = [&](const Vector &sector_vec) {
      Vector full = Vector::Zero(d);
      for (int r = 0; r < s; ++r) full(idx[r]) = sector_vec(r);
      full /= full.norm();
      return PureState(c, std::move(full));
    };

    // Eigen-ensemble candidate.
    double best = 0.0;
    for (int k : keep) {
      best += es.eigenvalues()(k) * pure_siv(state_from(es.eigenvectors().col(k)));
    }

    // sqrt(rho) columns scaled by sqrt(eigenvalue); any isometry U mixing
    // them yields another valid ensemble of the same sector block.
    Matrix roots(s, rank);
    for (int j = 0; j < rank; ++j) {
      roots.col(j) =
          std::sqrt(es.eigenvalues()(keep[j])) * es.eigenvectors().col(keep[j]);
    }
    for (int trial = 0; trial < restarts; ++trial) {
      int size = rank + (rank > 0 ? trial % (rank + 1) : 0);  // rank..2*rank
      Matrix g(size, rank);
      for (int r = 0; r < size; ++r)
        for (int q = 0; q < rank; ++q) g(r, q) = Complex(gauss(rng), gauss(rng));
      Eigen::HouseholderQR<Matrix> qr(g);
      Matrix thin_q = qr.householderQ() * Matrix::Identity(size, rank);
      double value = 0.0;
      for (int i = 0; i < size; ++i) {
        Vector unnorm = Vector::Zero(s);
        for (int j = 0; j < rank; ++j) unnorm += thin_q(i, j) * roots.col(j);
        double w = unnorm.squaredNorm();
        if (w <= 1e-16) continue;
        value += w * pure_siv(state_from(unnorm));
      }
      best = std::min(best, value);
    }
    total += best;
  }
  return total;
}

SIVReport siv_report_minimal(const MinimalReference &m) {
  SIVReport rep;
  FockCutoff c(2, 2);
  Vector phi = Vector::Zero(4);
  phi(c.index(0, 1)) = m.r0;
  phi(c.index(1, 0)) = m.r1;
  double n2 = phi.squaredNorm();
  if (n2 > 0) {
    phi /= std::sqrt(n2);
    rep.pure_siv = pure_siv(PureState(c, std::move(phi)));
  }
  rep.vf_lower_bound = vf_bound_minimal(m);
  rep.v_abs = std::abs(coherence_parameter(minimal_to_density(m), 1));
  return rep;
}

}  // namespace ssrbell
