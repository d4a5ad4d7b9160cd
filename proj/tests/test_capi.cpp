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

// Exercises the shared library the way an external consumer would: through
// ssrbell.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "ssrbell.h"

namespace {

struct Handle {
  ssrb_state *ptr = nullptr;
  ~Handle() { ssrb_state_free(ptr); }
};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("version and error message plumbing") {
  CHECK(ssrb_version() != nullptr);
  CHECK(std::string(ssrb_version()).find("ssrbell") == 0);
  double v = 0;
  CHECK(ssrb_coherence(nullptr, 1, &v) == SSRB_ERR_ARG);
  CHECK(std::strlen(ssrb_last_error()) > 0);
}

TEST_CASE("state constructors validate") {
  Handle h;
  double bad[4] = {0.5, 0, 0, 0};
  CHECK(ssrb_state_pure(2, 2, bad, nullptr, &h.ptr) == SSRB_ERR_ARG);
  CHECK(std::string(ssrb_last_error()).find("norm") != std::string::npos);
  double good[4] = {1, 0, 0, 0};
  CHECK(ssrb_state_pure(2, 2, good, nullptr, &h.ptr) == SSRB_OK);
  int kind = -1, da = 0, db = 0;
  CHECK(ssrb_state_kind(h.ptr, &kind) == SSRB_OK);
  CHECK(kind == SSRB_KIND_PURE);
  CHECK(ssrb_state_dims(h.ptr, &da, &db) == SSRB_OK);
  CHECK(da == 2);
  CHECK(db == 2);
}

TEST_CASE("coherence and witness through the C surface") {
  Handle bell;
  REQUIRE(ssrb_state_minimal(0, 0, 1, kInvSqrt2, kInvSqrt2, &bell.ptr) ==
          SSRB_OK);
  double v = 0;
  CHECK(ssrb_coherence(bell.ptr, 1, &v) == SSRB_OK);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  double v_abs = 0, v_signed = 0;
  int delta = 0;
  CHECK(ssrb_witness(bell.ptr, &v_abs, &v_signed, &delta) == SSRB_OK);
  CHECK(v_abs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(delta == 1);
  int compliant = 0, locc = 1;
  CHECK(ssrb_is_ssr_compliant(bell.ptr, &compliant) == SSRB_OK);
  CHECK(compliant == 1);
  CHECK(ssrb_is_ssr_locc(bell.ptr, &locc) == SSRB_OK);
  CHECK(locc == 0);
  CHECK(ssrb_coherence(bell.ptr, 9, &v) == SSRB_ERR_ARG);
}

TEST_CASE("CHSH pipeline through the C surface") {
  double s_max = 0;
  double angles[4];
  CHECK(ssrb_chsh_optimal(0.5, &s_max, angles) == SSRB_OK);
  CHECK(s_max == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  Handle bell;
  REQUIRE(ssrb_state_minimal(0, 0, 1, kInvSqrt2, kInvSqrt2, &bell.ptr) ==
          SSRB_OK);
  double e = 0;
  CHECK(ssrb_correlation(bell.ptr, 1, std::acos(-1.0) / 4,
                         std::acos(-1.0) / 4, &e) == SSRB_OK);
  CHECK(e == doctest::Approx(0.5).epsilon(1e-12));
  double s = 0;
  CHECK(ssrb_chsh(bell.ptr, 1, angles, &s) == SSRB_OK);
  CHECK(s == doctest::Approx(s_max).epsilon(1e-10));
  CHECK(ssrb_chsh_optimal(1.7, &s_max, nullptr) == SSRB_ERR_ARG);
}

TEST_CASE("reference design through the C surface") {
  Handle boundary;
  REQUIRE(ssrb_state_minimal(0.25, 0.25, 0.5, kInvSqrt2, kInvSqrt2,
                             &boundary.ptr) == SSRB_OK);
  int separable = 0;
  double ppt = -1;
  CHECK(ssrb_minimal_separable(boundary.ptr, &separable, &ppt) == SSRB_OK);
  CHECK(separable == 1);
  CHECK(std::abs(ppt) < 1e-10);

  double v_max = 0, params[5];
  CHECK(ssrb_minimal_max_v(&v_max, params) == SSRB_OK);
  CHECK(v_max == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(params[2] == doctest::Approx(0.5).epsilon(1e-4));

  double f = 0, g = 0, v = 0;
  double a[31], b[31];
  CHECK(ssrb_optimal_product(30, 30, &f, &g, &v, a, b) == SSRB_OK);
  CHECK(v == doctest::Approx(0.990392640201615).epsilon(1e-12));
  CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-15));
  double s_max = 0;
  CHECK(ssrb_chsh_optimal(v, &s_max, nullptr) == SSRB_OK);
  CHECK(s_max == doctest::Approx(2.81487305700668).epsilon(1e-10));

  Handle prod;
  CHECK(ssrb_state_product(30, 30, a, b, &prod.ptr) == SSRB_OK);
  double v2 = 0;
  CHECK(ssrb_coherence(prod.ptr, 1, &v2) == SSRB_OK);
  CHECK(v2 == doctest::Approx(v).epsilon(1e-12));

  Handle twirled;
  CHECK(ssrb_state_twirl_global(prod.ptr, &twirled.ptr) == SSRB_OK);
  int compliant = 0;
  CHECK(ssrb_is_ssr_compliant(twirled.ptr, &compliant) == SSRB_OK);
  CHECK(compliant == 1);
  double v3 = 0;
  CHECK(ssrb_coherence(twirled.ptr, 1, &v3) == SSRB_OK);
  CHECK(v3 == doctest::Approx(v).epsilon(1e-12));
  CHECK(ssrb_state_twirl_local(prod.ptr, 5, &twirled.ptr) == SSRB_ERR_ARG);
}

TEST_CASE("variance reporting through the C surface") {
  double re[4] = {0, kInvSqrt2, kInvSqrt2, 0};
  Handle unit;
  REQUIRE(ssrb_state_pure(2, 2, re, nullptr, &unit.ptr) == SSRB_OK);
  double siv = 0;
  CHECK(ssrb_pure_siv(unit.ptr, &siv) == SSRB_OK);
  CHECK(siv == doctest::Approx(1.0).epsilon(1e-12));

  Handle m;
  REQUIRE(ssrb_state_minimal(0.25, 0.25, 0.5, kInvSqrt2, kInvSqrt2, &m.ptr) ==
          SSRB_OK);
  double p_siv = 0, lower = 0, v_abs = 0, upper = 0;
  int ok = 0;
  CHECK(ssrb_siv_minimal(m.ptr, &p_siv, &lower, &v_abs, &ok) == SSRB_OK);
  CHECK(p_siv == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lower == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(v_abs == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ok == 1);
  CHECK(ssrb_vf_upper(m.ptr, 8, 3, &upper) == SSRB_OK);
  CHECK(upper == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ssrb_pure_siv(m.ptr, &siv) == SSRB_ERR_ARG);
}

TEST_CASE("photonic model through the C surface") {
  double e = 0;
  CHECK(ssrb_photonic_correlation(0.5, 0.5, 1.0, 0.7, &e) == SSRB_OK);
  CHECK(e == doctest::Approx(std::sin(0.7) / 2).epsilon(1e-14));
  CHECK(ssrb_photonic_correlation(1.5, 0.5, 1.0, 0.7, &e) == SSRB_ERR_ARG);

  double s = 0, phases[4];
  CHECK(ssrb_photonic_chsh_max(0.5, 0.5, 0.0, &s, phases) == SSRB_OK);
  CHECK(s == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));

  double root = 0, pvac = 0;
  CHECK(ssrb_photonic_threshold(&root, &pvac) == SSRB_OK);
  CHECK(root == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-7));
  CHECK(pvac == doctest::Approx(0.6608598).epsilon(1e-6));
}

TEST_CASE("file round trip through the C surface") {
  const char *path = "capi_roundtrip.state";
  Handle m;
  REQUIRE(ssrb_state_minimal(0.1, 0.2, 0.7, 0.6, -0.8, &m.ptr) == SSRB_OK);
  CHECK(ssrb_state_save(m.ptr, path) == SSRB_OK);
  Handle back;
  CHECK(ssrb_state_load(path, &back.ptr) == SSRB_OK);
  int kind = -1;
  CHECK(ssrb_state_kind(back.ptr, &kind) == SSRB_OK);
  CHECK(kind == SSRB_KIND_MINIMAL);
  double v1 = 0, v2 = 0;
  CHECK(ssrb_coherence(m.ptr, 1, &v1) == SSRB_OK);
  CHECK(ssrb_coherence(back.ptr, 1, &v2) == SSRB_OK);
  CHECK(v1 == v2);
  std::remove(path);

  Handle missing;
  CHECK(ssrb_state_load("missing_file.state", &missing.ptr) == SSRB_ERR_IO);
}
