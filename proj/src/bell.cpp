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

#include "ssrbell/bell.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace ssrbell {

namespace {

constexpr double kRouteAgreementTol = 1e-10;
constexpr double kNullMassTol = 1e-12;
constexpr double kSectorAmpTol = 1e-10;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

PrincipalState::PrincipalState(int delta, int base, PureState state)
    : delta_(delta), base_(base), state_(std::move(state)) {}

PrincipalState PrincipalState::standard(int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  int dim = 4 + delta;  // room for occupations 1, 2, 2+delta, 3+delta
  FockCutoff c(dim, dim);
  Vector v = Vector::Zero(c.total_dim());
  const double w = 1.0 / std::sqrt(2.0);
  v(c.index(2, 2 + delta)) = w;
  v(c.index(2 + delta, 2)) = w;
  return PrincipalState(delta, 2, PureState(c, std::move(v)));
}

PrincipalState PrincipalState::single_particle(int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  int dim = delta + 2;  // occupations 0, delta, delta+1
  FockCutoff c(dim, dim);
  Vector v = Vector::Zero(c.total_dim());
  const double w = 1.0 / std::sqrt(2.0);
  v(c.index(0, delta)) = w;
  v(c.index(delta, 0)) = w;
  return PrincipalState(delta, 0, PureState(c, std::move(v)));
}

PrincipalState PrincipalState::general(const std::vector<Complex> &coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  int n_total = static_cast<int>(coeffs.size()) - 1;
  FockCutoff c(n_total + 1, n_total + 1);
  Vector v = Vector::Zero(c.total_dim());
  for (int n = 0; n <= n_total; ++n) v(c.index(n, n_total - n)) = coeffs[n];
  return PrincipalState(0, -1, PureState(c, std::move(v)));
}

SSRObservable build_observable(double angle, int delta, int n_ref, Side side,
                               const FockCutoff &local_cutoff,
                               int principal_base) {
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  if (principal_base != 0 && principal_base != 2) {
    throw std::invalid_argument("principal base must be 2 or 0");
  }
  if (n_ref < delta) {
    throw std::invalid_argument(
        "reference bound n_ref = " + std::to_string(n_ref) +
        " is below delta = " + std::to_string(delta) +
        "; the eigenbasis index ranges are empty or ill-formed");
  }
  int needed_principal = principal_base + delta + 2;
  if (local_cutoff.dim_a < needed_principal) {
    throw std::length_error("principal cutoff " +
                            std::to_string(local_cutoff.dim_a) +
                            " too small; the eigenbasis needs dimension " +
                            std::to_string(needed_principal));
  }
  if (local_cutoff.dim_b < n_ref + 1) {
    throw std::length_error("reference cutoff " +
                            std::to_string(local_cutoff.dim_b) +
                            " cannot hold occupation " + std::to_string(n_ref));
  }

  SSRObservable obs;
  obs.angle = angle;
  obs.delta = delta;
  obs.n_ref = n_ref;
  obs.side = side;
  obs.principal_base = principal_base;

  const double co = std::cos(angle);
  const double si = std::sin(angle);
  const int lo = principal_base >= 1 ? -delta : 0;
  for (int a = lo; a <= n_ref; ++a) {
    // Each family index a pairs two kets of equal local total
    // principal_base + a + delta; the pair depends on whether the reference
    // occupation would underflow (a < 0) or overflow (a > n_ref - delta).
    int p1, r1, p2, r2;
    if (a < 0) {
      p1 = principal_base - 1;
      r1 = a + delta + 1;
      p2 = principal_base;
      r2 = a + delta;
    } else if (a <= n_ref - delta) {
      p1 = principal_base + delta;
      r1 = a;
      p2 = principal_base;
      r2 = a + delta;
    } else {
      p1 = principal_base + delta;
      r1 = a;
      p2 = principal_base + delta + 1;
      r2 = a - 1;
    }
    Vector plus = Vector::Zero(local_cutoff.total_dim());
    Vector minus = Vector::Zero(local_cutoff.total_dim());
    plus(local_cutoff.index(p1, r1)) = co;
    plus(local_cutoff.index(p2, r2)) = si;
    minus(local_cutoff.index(p1, r1)) = si;
    minus(local_cutoff.index(p2, r2)) = -co;
    obs.labels.push_back(a);
    obs.eigvecs_plus.emplace_back(local_cutoff, std::move(plus));
    obs.eigvecs_minus.emplace_back(local_cutoff, std::move(minus));
  }
  return obs;
}

SSRObservable build_observable(double angle, int delta, int n_ref, Side side,
                               int principal_base) {
  FockCutoff c(principal_base + delta + 2, n_ref + 1);
  return build_observable(angle, delta, n_ref, side, c, principal_base);
}

double OutcomeProbabilities::total() const {
  return p_pp.sum() + p_pm.sum() + p_mp.sum() + p_mm.sum();
}

double OutcomeProbabilities::correlation() const {
  return p_pp.sum() + p_mm.sum() - p_pm.sum() - p_mp.sum();
}

namespace {

// Total particle number of a pure state concentrated on one sector; throws
// if more than one sector carries amplitude above tolerance.
int fixed_total_number(const PureState &phi) {
  const FockCutoff &c = phi.cutoff();
  int best = -1;
  double best_w = -1.0;
  std::vector<double> weight(c.max_total_number() + 1, 0.0);
  for (int i = 0; i < c.total_dim(); ++i) {
    weight[c.occupation_a(i) + c.occupation_b(i)] += std::norm(phi.amps()(i));
  }
  for (int n = 0; n < static_cast<int>(weight.size()); ++n) {
    if (weight[n] > best_w) {
      best_w = weight[n];
      best = n;
    }
  }
  for (int i = 0; i < c.total_dim(); ++i) {
    int n = c.occupation_a(i) + c.occupation_b(i);
    if (n != best && std::abs(phi.amps()(i)) > kSectorAmpTol) {
      throw std::invalid_argument(
          "reference pure state spans several total-number sectors (" +
          std::to_string(best) + " and " + std::to_string(n) +
          "); a fixed total is required");
    }
  }
  return best;
}

Eigen::MatrixXcd stack_vectors(const std::vector<PureState> &vecs) {
  Eigen::MatrixXcd m(vecs.front().amps().size(),
                     static_cast<Eigen::Index>(vecs.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = vecs[j].amps();
  return m;
}

}  // namespace

OutcomeProbabilities outcome_probabilities(const PrincipalState &psi,
                                           const PureState &phi_ref,
                                           double alpha, double beta) {
  if (!psi.supports_observables()) {
    throw std::invalid_argument(
        "general principal states have no angle-parameterized eigenbasis; "
        "use the fixed-pair forms");
  }
  const int delta = psi.delta();
  const FockCutoff &rc = phi_ref.cutoff();
  if (rc.dim_a < delta + 1 || rc.dim_b < delta + 1) {
    throw std::invalid_argument(
        "reference space too small for delta = " + std::to_string(delta) +
        "; embed the state in at least " + std::to_string(delta + 1) +
        " dimensions per side");
  }
  fixed_total_number(phi_ref);  // enforces the fixed-total precondition

  if (psi.base() == 0) {
    // The shifted pair has no eigenvectors catching reference occupations
    // below delta, so such components must be absent.
    for (int i = 0; i < rc.total_dim(); ++i) {
      int na = rc.occupation_a(i), nb = rc.occupation_b(i);
      if ((na < delta || nb < delta) &&
          std::abs(phi_ref.amps()(i)) > kSectorAmpTol) {
        throw std::invalid_argument(
            "the shifted principal pair requires a reference with at least " +
            std::to_string(delta) +
            " particle(s) on each side (no vacuum component); found weight on "
            "occupation (" +
            std::to_string(na) + "," + std::to_string(nb) + ")");
      }
    }
  }

  PureState joint = tensor(psi.state(), phi_ref);
  const int principal_dim = psi.state().cutoff().dim_a;
  SSRObservable obs_a =
      build_observable(alpha, delta, rc.dim_a - 1, Side::A,
                       FockCutoff(principal_dim, rc.dim_a), psi.base());
  SSRObservable obs_b =
      build_observable(beta, delta, rc.dim_b - 1, Side::B,
                       FockCutoff(principal_dim, rc.dim_b), psi.base());

  const int dim_alice = joint.cutoff().dim_a;
  const int dim_bob = joint.cutoff().dim_b;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      joint_mat(joint.amps().data(), dim_alice, dim_bob);

  Eigen::MatrixXcd ua_p = stack_vectors(obs_a.eigvecs_plus);
  Eigen::MatrixXcd ua_m = stack_vectors(obs_a.eigvecs_minus);
  Eigen::MatrixXcd ub_p = stack_vectors(obs_b.eigvecs_plus).conjugate();
  Eigen::MatrixXcd ub_m = stack_vectors(obs_b.eigvecs_minus).conjugate();

  Eigen::MatrixXcd ta_p = ua_p.adjoint() * joint_mat;
  Eigen::MatrixXcd ta_m = ua_m.adjoint() * joint_mat;

  OutcomeProbabilities out;
  out.delta = delta;
  out.a_labels = obs_a.labels;
  out.b_labels = obs_b.labels;
  out.p_pp = (ta_p * ub_p).cwiseAbs2();
  out.p_pm = (ta_p * ub_m).cwiseAbs2();
  out.p_mp = (ta_m * ub_p).cwiseAbs2();
  out.p_mm = (ta_m * ub_m).cwiseAbs2();
  out.null_mass = 1.0 - out.total();
  if (out.null_mass > kNullMassTol) {
    throw ContractError(
        "measurement eigenbasis misses probability mass " +
        fmt_double(out.null_mass) +
        "; the principal/reference combination is outside the construction's "
        "domain");
  }
  return out;
}

std::vector<std::pair<double, PureState>> sector_pure_decomposition(
    const DensityOperator &rho) {
  const FockCutoff &c = rho.cutoff();
  const int d = c.total_dim();
  std::vector<std::pair<double, PureState>> out;
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
    for (int k = 0; k < s; ++k) {
      double w = es.eigenvalues()(k);
      if (w <= 1e-14) continue;
      Vector v = Vector::Zero(d);
      for (int r = 0; r < s; ++r) v(idx[r]) = es.eigenvectors()(r, k);
      out.emplace_back(w, PureState(c, std::move(v)));
    }
  }
  return out;
}

CorrelationBreakdown correlation_breakdown(const PrincipalState &psi,
                                           const DensityOperator &rho_ref,
                                           double alpha, double beta) {
  if (!is_ssr_compliant(rho_ref)) {
    throw std::invalid_argument(
        "reference state does not commute with the total-number operator");
  }
  CorrelationBreakdown br;
  for (const auto &[w, phi] : sector_pure_decomposition(rho_ref)) {
    OutcomeProbabilities table = outcome_probabilities(psi, phi, alpha, beta);
    br.brute_force += w * table.correlation();
    br.max_prob_dev = std::max(br.max_prob_dev, std::abs(table.total() - 1.0));
  }
  br.coherence = coherence_parameter(rho_ref, psi.delta());
  br.closed_form = -std::cos(2 * alpha) * std::cos(2 * beta) +
                   br.coherence * std::sin(2 * alpha) * std::sin(2 * beta);
  if (std::abs(br.brute_force - br.closed_form) > kRouteAgreementTol) {
    throw ContractError("correlation routes disagree: brute force " +
                        fmt_double(br.brute_force) + " vs closed form " +
                        fmt_double(br.closed_form));
  }
  return br;
}

double correlation(const PrincipalState &psi, const DensityOperator &rho_ref,
                   double alpha, double beta) {
  return correlation_breakdown(psi, rho_ref, alpha, beta).brute_force;
}

double correlation(const PrincipalState &psi, const PureState &phi_ref,
                   double alpha, double beta) {
  return correlation(psi, DensityOperator::from_pure(phi_ref), alpha, beta);
}

double chsh(const PrincipalState &psi, const DensityOperator &rho_ref,
            const CHSHSettings &s) {
  return correlation(psi, rho_ref, s.alpha1, s.beta1) +
         correlation(psi, rho_ref, s.alpha1, s.beta2) +
         correlation(psi, rho_ref, s.alpha2, s.beta1) -
         correlation(psi, rho_ref, s.alpha2, s.beta2);
}

OptimalCHSH chsh_optimal(double v) {
  if (std::abs(v) > 1.0 + 1e-12) {
    throw std::invalid_argument("coherence parameter " + fmt_double(v) +
                                " outside [-1, 1]");
  }
  v = std::clamp(v, -1.0, 1.0);
  OptimalCHSH out;
  out.s_max = 2.0 * std::sqrt(1.0 + v * v);
  double beta = 0.5 * std::atan2(2.0 * v, -2.0);
  out.settings = CHSHSettings{0.0, std::numbers::pi / 4.0, beta, -beta};
  return out;
}

namespace {

// Block-diagonal random unitary on a (principal, reference) pair space: a
// pseudo-random rotation within every fixed local-total sector.
Eigen::MatrixXcd block_random_unitary(const FockCutoff &local,
                                      std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = local.total_dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  for (int t = 0; t <= local.max_total_number(); ++t) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i) {
      if (local.occupation_a(i) + local.occupation_b(i) == t) idx.push_back(i);
    }
    const int s = static_cast<int>(idx.size());
    Eigen::MatrixXcd g(s, s);
    for (int r = 0; r < s; ++r)
      for (int q = 0; q < s; ++q) g(r, q) = Complex(gauss(rng), gauss(rng));
    Eigen::MatrixXcd q =
        Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    for (int r = 0; r < s; ++r)
      for (int col = 0; col < s; ++col) u(idx[r], idx[col]) = q(r, col);
  }
  return u;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) {
  Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

}  // namespace

bool ssr_locc_lhv_check(const PrincipalState &psi, const DensityOperator &ref,
                        std::uint64_t seed, int trials) {
  if (!is_ssr_locc(ref)) {
    throw std::invalid_argument(
        "reference is not diagonal in the product number basis; the "
        "statistics-equality argument requires an SSR-LOCC state");
  }
  DensityOperator psi_rho = DensityOperator::from_pure(psi.state());
  DensityOperator coherent = tensor(psi_rho, ref);
  DensityOperator dephased_psi = twirl_local(psi_rho, Side::A);
  DensityOperator ref_diag = twirl_local(twirl_local(ref, Side::A), Side::B);
  DensityOperator separable = tensor(dephased_psi, ref_diag);

  FockCutoff alice_local(psi.state().cutoff().dim_a, ref.cutoff().dim_a);
  FockCutoff bob_local(psi.state().cutoff().dim_b, ref.cutoff().dim_b);

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXcd ua = block_random_unitary(alice_local, rng);
    Eigen::MatrixXcd ub = block_random_unitary(bob_local, rng);
    Eigen::MatrixXcd w = kron(ua, ub);
    Eigen::MatrixXcd xc = coherent.mat() * w;
    Eigen::MatrixXcd xs = separable.mat() * w;
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
      double pc = w.col(k).dot(xc.col(k)).real();
      double ps = w.col(k).dot(xs.col(k)).real();
      if (std::abs(pc - ps) > 1e-10) return false;
    }
  }
  return true;
}

}  // namespace ssrbell
