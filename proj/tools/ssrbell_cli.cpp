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

// Command-line front end. Talks to the shared library exclusively through
// the C interface in ssrbell.h; everything here is argument handling and
// CSV / JSON-lines rendering.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ssrbell.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int rc_to_exit(int rc) {
  switch (rc) {
    case SSRB_OK:
      return 0;
    case SSRB_ERR_ARG:
    case SSRB_ERR_SIZE:
      return 1;
    case SSRB_ERR_IO:
      return 3;
    default:
      return 2;
  }
}

// Bails out of main() with the library's message on any failed call.
#define CHECK(call)                                          \
  do {                                                       \
    int rc_ = (call);                                        \
    if (rc_ != SSRB_OK) {                                    \
      std::cerr << "error: " << ssrb_last_error() << "\n";   \
      return rc_to_exit(rc_);                                \
    }                                                        \
  } while (0)

using Record = std::vector<std::pair<std::string, std::string>>;

bool looks_numeric(const std::string &s) {
  if (s.empty()) return false;
  char *end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::string render_records(const std::vector<Record> &records,
                           const std::string &format) {
  std::ostringstream out;
  if (format == "csv") {
    if (!records.empty()) {
      for (size_t k = 0; k < records[0].size(); ++k) {
        out << (k ? "," : "") << records[0][k].first;
      }
      out << "\n";
      for (const auto &rec : records) {
        for (size_t k = 0; k < rec.size(); ++k) {
          out << (k ? "," : "") << rec[k].second;
        }
        out << "\n";
      }
    }
    return out.str();
  }
  // json-like: one object per line, numeric values unquoted.
  for (const auto &rec : records) {
    out << "{";
    for (size_t k = 0; k < rec.size(); ++k) {
      const auto &[key, value] = rec[k];
      out << (k ? ", " : "") << "\"" << key << "\": ";
      if (looks_numeric(value)) {
        out << value;
      } else {
        out << "\"" << value << "\"";
      }
    }
    out << "}\n";
  }
  return out.str();
}

int emit(const std::vector<Record> &records, const std::string &format,
         const std::string &out_path) {
  std::string text = render_records(records, format);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 3;
  }
  out << text;
  return out ? 0 : 3;
}

struct StateHandle {
  ssrb_state *ptr = nullptr;
  ~StateHandle() { ssrb_state_free(ptr); }
};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Bell-test toolkit for particle-number superselection"};

  std::string command;
  int delta = 1;
  int n_ref = 1;
  int n = 1, m = 1;
  double nbar = -1.0;
  double grid_step = -1.0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";
  std::string state_file;

  app.add_option("--command", command,
                 "one of: witness, chsh-scan, minimal-ref, optimal-ref, "
                 "siv-report, photonic, reproduce-all")
      ->required();
  app.add_option("--delta", delta, "occupation shift of the ladder pair");
  app.add_option("--n-ref", n_ref,
                 "reference occupancy bound used when no state file is given");
  app.add_option("--n", n, "Alice-side size of the optimal product reference");
  app.add_option("--m", m, "Bob-side size of the optimal product reference");
  app.add_option("--nbar", nbar, "mean photon number of the coherent states");
  app.add_option("--grid-step", grid_step, "scan step (radians or reflectivity)");
  app.add_option("--seed", seed, "seed for all randomized computations");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json-like"}));
  app.add_option("--state-file", state_file, "state file to analyze");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  if (command == "witness") {
    if (state_file.empty()) {
      std::cerr << "error: witness requires --state-file\n";
      return 1;
    }
    StateHandle st;
    CHECK(ssrb_state_load(state_file.c_str(), &st.ptr));
    int compliant = 0, locc = 0, best_delta = 1;
    double v_abs = 0, v_signed = 0;
    CHECK(ssrb_is_ssr_compliant(st.ptr, &compliant));
    CHECK(ssrb_is_ssr_locc(st.ptr, &locc));
    CHECK(ssrb_witness(st.ptr, &v_abs, &v_signed, &best_delta));
    double s_max = 2.0;
    CHECK(ssrb_chsh_optimal(v_abs, &s_max, nullptr));
    bool witness_says_locc = v_abs <= 1e-10;
    Record rec{
        {"ssr_compliant", compliant ? "true" : "false"},
        {"ssr_locc", locc ? "true" : "false"},
        {"max_abs_v", fmt(v_abs)},
        {"v_signed", fmt(v_signed)},
        {"delta", std::to_string(best_delta)},
        {"s_max", fmt(s_max)},
        {"verdict", locc ? "SSR-LOCC" : "jointly-prepared"},
        {"criteria_agree", witness_says_locc == (locc != 0) ? "true" : "false"},
    };
    return emit({rec}, format, out_path);
  }

  if (command == "chsh-scan") {
    if (delta < 1) {
      std::cerr << "error: --delta must be >= 1\n";
      return 1;
    }
    StateHandle st;
    if (!state_file.empty()) {
      CHECK(ssrb_state_load(state_file.c_str(), &st.ptr));
    } else {
      if (n_ref < 1) {
        std::cerr << "error: --n-ref must be >= 1\n";
        return 1;
      }
      std::vector<double> a(n_ref + 1), b(n_ref + 1);
      CHECK(ssrb_optimal_product(n_ref, n_ref, nullptr, nullptr, nullptr,
                                 a.data(), b.data()));
      StateHandle product;
      CHECK(ssrb_state_product(n_ref, n_ref, a.data(), b.data(), &product.ptr));
      // The bare product has cross-sector coherences; the measurement needs
      // the number-compliant (twirled) version, which keeps the coherence
      // parameter.
      CHECK(ssrb_state_twirl_global(product.ptr, &st.ptr));
    }
    double v = 0;
    CHECK(ssrb_coherence(st.ptr, delta, &v));
    double step = grid_step > 0 ? grid_step : kPi / 180.0;
    std::vector<Record> rows;
    for (int i = 0; i * step <= kPi + 1e-12; ++i) {
      double beta = i * step;
      double angles[4] = {0.0, kPi / 4.0, beta, -beta};
      double s = 0;
      CHECK(ssrb_chsh(st.ptr, delta, angles, &s));
      double closed = -2.0 * std::cos(2 * beta) + 2.0 * v * std::sin(2 * beta);
      rows.push_back(Record{{"beta", fmt(beta)},
                            {"s", fmt(s)},
                            {"s_closed", fmt(closed)}});
    }
    return emit(rows, format, out_path);
  }

  if (command == "minimal-ref") {
    double params[5];
    double v_max = 0;
    StateHandle st;
    if (!state_file.empty()) {
      CHECK(ssrb_state_load(state_file.c_str(), &st.ptr));
      int kind = 0;
      CHECK(ssrb_state_kind(st.ptr, &kind));
      if (kind != SSRB_KIND_MINIMAL) {
        std::cerr << "error: --state-file must hold a minimal-family record\n";
        return 1;
      }
      CHECK(ssrb_coherence(st.ptr, 1, &v_max));
    } else {
      CHECK(ssrb_minimal_max_v(&v_max, params));
      CHECK(ssrb_state_minimal(params[0], params[1], params[2], params[3],
                               params[4], &st.ptr));
    }
    int separable = 0;
    double ppt_eig = 0;
    CHECK(ssrb_minimal_separable(st.ptr, &separable, &ppt_eig));
    double s_max = 0;
    CHECK(ssrb_chsh_optimal(std::abs(v_max), &s_max, nullptr));
    Record rec;
    if (state_file.empty()) {
      rec.emplace_back("p00", fmt(params[0]));
      rec.emplace_back("p11", fmt(params[1]));
      rec.emplace_back("p_phi", fmt(params[2]));
      rec.emplace_back("r0", fmt(params[3]));
      rec.emplace_back("r1", fmt(params[4]));
    }
    rec.emplace_back("v", fmt(v_max));
    rec.emplace_back("separable", separable ? "true" : "false");
    rec.emplace_back("ppt_min_eig", fmt(ppt_eig));
    rec.emplace_back("s_max", fmt(s_max));
    return emit({rec}, format, out_path);
  }

  if (command == "optimal-ref") {
    if (n < 1 || m < 1) {
      std::cerr << "error: --n and --m must be >= 1\n";
      return 1;
    }
    double f_n = 0, g_m = 0, v = 0;
    CHECK(ssrb_optimal_product(n, m, &f_n, &g_m, &v, nullptr, nullptr));
    double s_max = 0;
    CHECK(ssrb_chsh_optimal(v, &s_max, nullptr));
    Record rec{{"n", std::to_string(n)}, {"m", std::to_string(m)},
               {"f_n", fmt(f_n)},        {"g_m", fmt(g_m)},
               {"v", fmt(v)},            {"s_max", fmt(s_max)}};
    return emit({rec}, format, out_path);
  }

  if (command == "siv-report") {
    if (state_file.empty()) {
      std::cerr << "error: siv-report requires --state-file\n";
      return 1;
    }
    StateHandle st;
    CHECK(ssrb_state_load(state_file.c_str(), &st.ptr));
    int kind = 0;
    CHECK(ssrb_state_kind(st.ptr, &kind));
    if (kind == SSRB_KIND_PURE) {
      double siv = 0;
      CHECK(ssrb_pure_siv(st.ptr, &siv));
      return emit({Record{{"pure_siv", fmt(siv)}}}, format, out_path);
    }
    if (kind != SSRB_KIND_MINIMAL) {
      std::cerr << "error: siv-report expects a pure or minimal state file\n";
      return 1;
    }
    double siv = 0, vf_lower = 0, v_abs = 0, vf_upper = 0;
    int witness_ok = 0;
    CHECK(ssrb_siv_minimal(st.ptr, &siv, &vf_lower, &v_abs, &witness_ok));
    CHECK(ssrb_vf_upper(st.ptr, 64, seed, &vf_upper));
    Record rec{{"pure_siv", fmt(siv)},
               {"vf_lower_bound", fmt(vf_lower)},
               {"vf_upper_bound", fmt(vf_upper)},
               {"v_abs", fmt(v_abs)},
               {"witness_ok", witness_ok ? "true" : "false"}};
    return emit({rec}, format, out_path);
  }

  if (command == "photonic") {
    double n_star = 0, p_vac = 0;
    CHECK(ssrb_photonic_threshold(&n_star, &p_vac));
    if (nbar < 0) {
      Record rec{{"n_bar_star", fmt(n_star)}, {"p_vac", fmt(p_vac)}};
      return emit({rec}, format, out_path);
    }
    double step = grid_step > 0 ? grid_step : 0.01;
    if (step > 0.5) {
      std::cerr << "error: --grid-step must lie in (0, 0.5]\n";
      return 1;
    }
    std::vector<Record> rows;
    double best_s = -1, best_ra = 0, best_rb = 0;
    int cells = static_cast<int>(std::round(1.0 / step));
    for (int i = 0; i <= cells; ++i) {
      for (int j = 0; j <= cells; ++j) {
        double ra = std::min(1.0, i * step);
        double rb = std::min(1.0, j * step);
        double s = 0;
        CHECK(ssrb_photonic_chsh_max(ra, rb, nbar, &s, nullptr));
        rows.push_back(Record{
            {"r_a", fmt(ra)}, {"r_b", fmt(rb)}, {"s_max", fmt(s)}});
        if (s > best_s) {
          best_s = s;
          best_ra = ra;
          best_rb = rb;
        }
      }
    }
    double hessmo_r = 1.0 / (1.0 + nbar);
    double hessmo_s = 0;
    CHECK(ssrb_photonic_chsh_max(hessmo_r, hessmo_r, nbar, &hessmo_s, nullptr));
    Record summary{{"n_bar", fmt(nbar)},
                   {"best_r_a", fmt(best_ra)},
                   {"best_r_b", fmt(best_rb)},
                   {"best_s", fmt(best_s)},
                   {"hessmo_r", fmt(hessmo_r)},
                   {"hessmo_s", fmt(hessmo_s)},
                   {"n_bar_star", fmt(n_star)},
                   {"p_vac", fmt(p_vac)}};
    if (!out_path.empty()) {
      // Plot-ready scan goes to the file, the summary to stdout.
      if (int rc = emit(rows, format, out_path)) return rc;
      return emit({summary}, format, "");
    }
    return emit({summary}, format, "");
  }

  if (command == "reproduce-all") {
    std::string path = out_path.empty() ? "reproduce_report.txt" : out_path;
    int n_failed = 0;
    CHECK(ssrb_reproduce_all(seed, path.c_str(), &n_failed));
    std::ifstream in(path, std::ios::binary);
    std::cout << in.rdbuf();
    return n_failed == 0 ? 0 : 2;
  }

  std::cerr << "error: unknown command '" << command << "'\n";
  return 1;
}
