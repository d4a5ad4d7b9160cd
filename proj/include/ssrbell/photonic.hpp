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

#ifndef SSRBELL_PHOTONIC_HPP
#define SSRBELL_PHOTONIC_HPP

#include <array>
#include <vector>

namespace ssrbell {

// Single-photon interferometer model: a photon split on a beam-splitter,
// recombined with coherent-state references of mean photon number n_bar on
// beam-splitters of reflectivity r_a and r_b, photon-number correlations
// read out behind them.

struct PhotonicSetup {
  double r_a = 0.5;
  double r_b = 0.5;
  double n_bar = 0.0;

  PhotonicSetup() = default;
  PhotonicSetup(double r_a, double r_b, double n_bar);

  double t_a() const { return 1.0 - r_a; }
  double t_b() const { return 1.0 - r_b; }
};

/// Correlation of the photon-number readouts at relative phase `phase`:
/// [(r_a-t_a)(r_b-t_b)(n_bar-1) + 4 sqrt(r_a r_b t_a t_b) sin(phase)]
/// / (n_bar+1).
double photonic_correlation(const PhotonicSetup &setup, double phase);

struct PhotonicChshMax {
  double s_max = 0.0;
  // Settings (alpha1, alpha2, beta1, beta2); phases enter as alpha - beta.
  std::array<double, 4> phases{};
};

/// Largest |S| over the four phase settings. The correlation has the form
/// c + A sin(phase), and the constant enters S with net weight 2, so the
/// maximum is 2|c| + 2 sqrt(2) |A|; the grid oracle below backs this up.
PhotonicChshMax photonic_chsh_max(const PhotonicSetup &setup);

/// Independent optimizer: deterministic coarse grid over the three free
/// phase differences plus coordinate golden-section refinement.
PhotonicChshMax photonic_chsh_max_scan(const PhotonicSetup &setup,
                                       double coarse_step = 0.05);

struct PhotonicThreshold {
  double n_bar_star = 0.0;  // root of s_max = 2 for balanced splitters
  double p_vac = 0.0;       // coherent-state vacuum probability exp(-n_bar)
};

/// Bisects s_max(n_bar) = 2 for the balanced setup; the root is
/// sqrt(2) - 1.
PhotonicThreshold threshold_nbar();

struct ReflectivityCell {
  double r_a = 0.0;
  double r_b = 0.0;
  double s_max = 0.0;
};

struct OptimalityScan {
  std::vector<ReflectivityCell> cells;
  double best_r_a = 0.0;
  double best_r_b = 0.0;
  double best_s = 0.0;
};

/// Tabulates s_max over the reflectivity grid (step in (0, 0.5]); the
/// balanced point r_a = r_b = 1/2 is the global maximum.
OptimalityScan optimality_scan(double n_bar, double grid_step);

/// Reflectivity solving r n_bar = t: equal likelihood that a detected photon
/// came from the single-photon side or the coherent state. Never violates
/// the inequality.
double hessmo_reflectivity(double n_bar);

}  // namespace ssrbell

#endif  // SSRBELL_PHOTONIC_HPP
