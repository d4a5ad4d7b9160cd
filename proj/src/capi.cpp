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

#include "ssrbell.h"

#include <cstring>
#include <fstream>
#include <string>

#include "ssrbell/acceptance.hpp"
#include "ssrbell/bell.hpp"
#include "ssrbell/fock.hpp"
#include "ssrbell/photonic.hpp"
#include "ssrbell/reference.hpp"
#include "ssrbell/siv.hpp"
#include "ssrbell/ssr.hpp"
#include "ssrbell/state_io.hpp"

using namespace ssrbell;

struct ssrb_state {
  LoadedState inner;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string &msg) {
  g_last_error = msg;
  return code;
}

// Translates the C++ error idiom into codes + thread-local message.
template <typename Fn>
int guarded(Fn &&fn) {
  try {
    fn();
    return SSRB_OK;
  } catch (const std::length_error &e) {
    return set_error(SSRB_ERR_SIZE, e.what());
  } catch (const ContractError &e) {
    return set_error(SSRB_ERR_CONTRACT, e.what());
  } catch (const IoError &e) {
    return set_error(SSRB_ERR_IO, e.what());
  } catch (const std::invalid_argument &e) {
    return set_error(SSRB_ERR_ARG, e.what());
  } catch (const std::exception &e) {
    return set_error(SSRB_ERR_INTERNAL, e.what());
  }
}

int require(bool ok, const char *msg) {
  return ok ? SSRB_OK : set_error(SSRB_ERR_ARG, msg);
}

Matrix dense_from_parts(int rows, int cols, const double *re,
                        const double *im) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int i = r * cols + c;
      m(r, c) = Complex(re[i], im ? im[i] : 0.0);
    }
  return m;
}

}  // namespace

extern "C" {

const char *ssrb_version(void) { return "ssrbell 1.0.0"; }

const char *ssrb_last_error(void) { return g_last_error.c_str(); }

int ssrb_state_pure(int dim_a, int dim_b, const double *re, const double *im,
                    ssrb_state **out) {
  if (int rc = require(re && out, "re and out must not be NULL")) return rc;
  return guarded([&] {
    FockCutoff c(dim_a, dim_b);
    Vector v(c.total_dim());
    for (int i = 0; i < c.total_dim(); ++i) {
      v(i) = Complex(re[i], im ? im[i] : 0.0);
    }
    LoadedState st;
    st.kind = StateKind::Pure;
    st.pure = PureState(c, std::move(v));
    *out = new ssrb_state{std::move(st)};
  });
}

int ssrb_state_density(int dim_a, int dim_b, const double *re,
                       const double *im, ssrb_state **out) {
  if (int rc = require(re && out, "re and out must not be NULL")) return rc;
  return guarded([&] {
    FockCutoff c(dim_a, dim_b);
    LoadedState st;
    st.kind = StateKind::Density;
    st.density =
        DensityOperator(c, dense_from_parts(c.total_dim(), c.total_dim(), re, im));
    *out = new ssrb_state{std::move(st)};
  });
}

int ssrb_state_minimal(double p00, double p11, double p_phi, double r0,
                       double r1, ssrb_state **out) {
  if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
  return guarded([&] {
    LoadedState st;
    st.kind = StateKind::Minimal;
    st.minimal = MinimalReference(p00, p11, p_phi, r0, r1);
    *out = new ssrb_state{std::move(st)};
  });
}

int ssrb_state_product(int n, int m, const double *a_coeffs,
                       const double *b_coeffs, ssrb_state **out) {
  if (int rc = require(a_coeffs && b_coeffs && out, "NULL argument")) return rc;
  return guarded([&] {
    if (n < 0 || m < 0) throw std::invalid_argument("n and m must be >= 0");
    Eigen::VectorXd a(n + 1), b(m + 1);
    for (int i = 0; i <= n; ++i) a(i) = a_coeffs[i];
    for (int i = 0; i <= m; ++i) b(i) = b_coeffs[i];
    LoadedState st;
    st.kind = StateKind::Pure;
    st.pure = product_to_pure(ProductReference(std::move(a), std::move(b)));
    *out = new ssrb_state{std::move(st)};
  });
}

int ssrb_state_load(const char *path, ssrb_state **out) {
  if (int rc = require(path && out, "path and out must not be NULL")) return rc;
  return guarded([&] { *out = new ssrb_state{load_state(path)}; });
}

int ssrb_state_save(const ssrb_state *st, const char *path) {
  if (int rc = require(st && path, "state and path must not be NULL")) return rc;
  return guarded([&] {
    switch (st->inner.kind) {
      case StateKind::Pure:
        save_state(*st->inner.pure, path);
        break;
      case StateKind::Density:
        save_state(*st->inner.density, path);
        break;
      case StateKind::Minimal:
        save_state(*st->inner.minimal, path);
        break;
    }
  });
}

void ssrb_state_free(ssrb_state *st) { delete st; }

int ssrb_state_kind(const ssrb_state *st, int *kind) {
  if (int rc = require(st && kind, "NULL argument")) return rc;
  switch (st->inner.kind) {
    case StateKind::Pure:
      *kind = SSRB_KIND_PURE;
      break;
    case StateKind::Density:
      *kind = SSRB_KIND_DENSITY;
      break;
    case StateKind::Minimal:
      *kind = SSRB_KIND_MINIMAL;
      break;
  }
  return SSRB_OK;
}

int ssrb_state_dims(const ssrb_state *st, int *dim_a, int *dim_b) {
  if (int rc = require(st && dim_a && dim_b, "NULL argument")) return rc;
  return guarded([&] {
    FockCutoff c = st->inner.as_density().cutoff();
    *dim_a = c.dim_a;
    *dim_b = c.dim_b;
  });
}

int ssrb_state_twirl_global(const ssrb_state *st, ssrb_state **out) {
  if (int rc = require(st && out, "NULL argument")) return rc;
  return guarded([&] {
    LoadedState twirled;
    twirled.kind = StateKind::Density;
    twirled.density = twirl_global(st->inner.as_density());
    *out = new ssrb_state{std::move(twirled)};
  });
}

int ssrb_state_twirl_local(const ssrb_state *st, int side, ssrb_state **out) {
  if (int rc = require(st && out, "NULL argument")) return rc;
  if (int rc = require(side == 0 || side == 1, "side must be 0 or 1")) return rc;
  return guarded([&] {
    LoadedState twirled;
    twirled.kind = StateKind::Density;
    twirled.density =
        twirl_local(st->inner.as_density(), side == 0 ? Side::A : Side::B);
    *out = new ssrb_state{std::move(twirled)};
  });
}

int ssrb_is_ssr_compliant(const ssrb_state *st, int *flag) {
  if (int rc = require(st && flag, "NULL argument")) return rc;
  return guarded([&] { *flag = is_ssr_compliant(st->inner.as_density()); });
}

int ssrb_is_ssr_locc(const ssrb_state *st, int *flag) {
  if (int rc = require(st && flag, "NULL argument")) return rc;
  return guarded([&] { *flag = is_ssr_locc(st->inner.as_density()); });
}

int ssrb_coherence(const ssrb_state *st, int delta, double *v) {
  if (int rc = require(st && v, "NULL argument")) return rc;
  return guarded(
      [&] { *v = coherence_parameter(st->inner.as_density(), delta); });
}

int ssrb_witness(const ssrb_state *st, double *v_abs, double *v_signed,
                 int *delta) {
  if (int rc = require(st != nullptr, "state must not be NULL")) return rc;
  return guarded([&] {
    CoherenceWitness w = ssr_locc_witness(st->inner.as_density());
    if (v_abs) *v_abs = w.v_abs;
    if (v_signed) *v_signed = w.v_signed;
    if (delta) *delta = w.delta;
  });
}

int ssrb_chsh_optimal(double v, double *s_max, double *angles) {
  if (int rc = require(s_max != nullptr, "s_max must not be NULL")) return rc;
  return guarded([&] {
    OptimalCHSH opt = chsh_optimal(v);
    *s_max = opt.s_max;
    if (angles) {
      angles[0] = opt.settings.alpha1;
      angles[1] = opt.settings.alpha2;
      angles[2] = opt.settings.beta1;
      angles[3] = opt.settings.beta2;
    }
  });
}

int ssrb_correlation(const ssrb_state *ref, int delta, double alpha,
                     double beta, double *e) {
  if (int rc = require(ref && e, "NULL argument")) return rc;
  return guarded([&] {
    *e = correlation(PrincipalState::standard(delta), ref->inner.as_density(),
                     alpha, beta);
  });
}

int ssrb_chsh(const ssrb_state *ref, int delta, const double *angles,
              double *s) {
  if (int rc = require(ref && angles && s, "NULL argument")) return rc;
  return guarded([&] {
    CHSHSettings settings{angles[0], angles[1], angles[2], angles[3]};
    *s = chsh(PrincipalState::standard(delta), ref->inner.as_density(),
              settings);
  });
}

int ssrb_minimal_separable(const ssrb_state *minimal, int *flag,
                           double *ppt_min_eig) {
  if (int rc = require(minimal != nullptr, "state must not be NULL")) return rc;
  return guarded([&] {
    if (minimal->inner.kind != StateKind::Minimal) {
      throw std::invalid_argument("state is not a minimal-family reference");
    }
    const MinimalReference &m = *minimal->inner.minimal;
    if (flag) *flag = is_separable_minimal(m);
    if (ppt_min_eig) *ppt_min_eig = minimal_ppt_min_eigenvalue(m);
  });
}

int ssrb_minimal_max_v(double *v_max, double *params_out) {
  if (int rc = require(v_max != nullptr, "v_max must not be NULL")) return rc;
  return guarded([&] {
    MaxSeparableCoherence best = max_v_separable_minimal();
    *v_max = best.v_max;
    if (params_out) {
      params_out[0] = best.witness.p00;
      params_out[1] = best.witness.p11;
      params_out[2] = best.witness.p_phi;
      params_out[3] = best.witness.r0;
      params_out[4] = best.witness.r1;
    }
  });
}

int ssrb_optimal_product(int n, int m, double *f_n, double *g_m, double *v,
                         double *a_coeffs, double *b_coeffs) {
  return guarded([&] {
    OptimalProduct best = optimal_product_reference(n, m);
    if (f_n) *f_n = best.f_n;
    if (g_m) *g_m = best.g_m;
    if (v) *v = best.v;
    if (a_coeffs) {
      for (int i = 0; i <= n; ++i) a_coeffs[i] = best.ref.a_coeffs(i);
    }
    if (b_coeffs) {
      for (int i = 0; i <= m; ++i) b_coeffs[i] = best.ref.b_coeffs(i);
    }
  });
}

int ssrb_pure_siv(const ssrb_state *pure, double *siv) {
  if (int rc = require(pure && siv, "NULL argument")) return rc;
  return guarded([&] {
    if (pure->inner.kind != StateKind::Pure) {
      throw std::invalid_argument("variance units are defined for pure states");
    }
    *siv = pure_siv(*pure->inner.pure);
  });
}

int ssrb_siv_minimal(const ssrb_state *minimal, double *pure_siv_out,
                     double *vf_lower, double *v_abs, int *witness_ok) {
  if (int rc = require(minimal != nullptr, "state must not be NULL")) return rc;
  return guarded([&] {
    if (minimal->inner.kind != StateKind::Minimal) {
      throw std::invalid_argument("state is not a minimal-family reference");
    }
    const MinimalReference &m = *minimal->inner.minimal;
    SIVReport rep = siv_report_minimal(m);
    if (pure_siv_out) *pure_siv_out = rep.pure_siv;
    if (vf_lower) *vf_lower = rep.vf_lower_bound;
    if (v_abs) *v_abs = rep.v_abs;
    if (witness_ok) *witness_ok = siv_witness_relation(m);
  });
}

int ssrb_vf_upper(const ssrb_state *st, int restarts, uint64_t seed,
                  double *upper) {
  if (int rc = require(st && upper, "NULL argument")) return rc;
  return guarded([&] {
    *upper = vf_ensemble_upper_bound(st->inner.as_density(), restarts, seed);
  });
}

int ssrb_photonic_correlation(double r_a, double r_b, double n_bar,
                              double phase, double *e) {
  if (int rc = require(e != nullptr, "e must not be NULL")) return rc;
  return guarded(
      [&] { *e = photonic_correlation(PhotonicSetup(r_a, r_b, n_bar), phase); });
}

int ssrb_photonic_chsh_max(double r_a, double r_b, double n_bar, double *s_max,
                           double *phases) {
  if (int rc = require(s_max != nullptr, "s_max must not be NULL")) return rc;
  return guarded([&] {
    PhotonicChshMax best = photonic_chsh_max(PhotonicSetup(r_a, r_b, n_bar));
    *s_max = best.s_max;
    if (phases) {
      for (int i = 0; i < 4; ++i) phases[i] = best.phases[i];
    }
  });
}

int ssrb_photonic_threshold(double *n_bar_star, double *p_vac) {
  return guarded([&] {
    PhotonicThreshold th = threshold_nbar();
    if (n_bar_star) *n_bar_star = th.n_bar_star;
    if (p_vac) *p_vac = th.p_vac;
  });
}

int ssrb_reproduce_all(uint64_t seed, const char *out_path, int *n_failed) {
  if (int rc = require(out_path != nullptr, "out_path must not be NULL")) {
    return rc;
  }
  return guarded([&] {
    auto records = acceptance::run_all_with_determinism(seed);
    std::string report = acceptance::render_report(records, seed);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError(std::string("cannot open '") + out_path + "'");
    out << report;
    if (!out) throw IoError(std::string("failed writing '") + out_path + "'");
    if (n_failed) {
      int failures = 0;
      for (const auto &r : records) failures += r.pass ? 0 : 1;
      *n_failed = failures;
    }
  });
}

}  // extern "C"
