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

#include "ssrbell/photonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssrbell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sinusoid {
  double c = 0.0;  // constant offset of the correlation
  double a = 0.0;  // amplitude of the sin(phase) part
};

Sinusoid decompose(const PhotonicSetup &s) {
  double denom = s.n_bar + 1.0;
  Sinusoid out;
  out.c = (s.r_a - s.t_a()) * (s.r_b - s.t_b()) * (s.n_bar - 1.0) / denom;
  out.a = 4.0 * std::sqrt(s.r_a * s.r_b * s.t_a() * s.t_b()) / denom;
  return out;
}

}  // namespace

PhotonicSetup::PhotonicSetup(double ra, double rb, double nbar)
    : r_a(ra), r_b(rb), n_bar(nbar) {
  if (r_a < 0 || r_a > 1 || r_b < 0 || r_b > 1) {
    throw std::invalid_argument("reflectivities must lie in [0, 1]");
  }
  if (n_bar < 0) {
    throw std::invalid_argument("mean photon number must be nonnegative");
  }
}

double photonic_correlation(const PhotonicSetup &setup, double phase) {
  Sinusoid s = decompose(setup);
  return s.c + s.a * std::sin(phase);
}

PhotonicChshMax photonic_chsh_max(const PhotonicSetup &setup) {
  Sinusoid s = decompose(setup);
  PhotonicChshMax out;
  out.s_max = 2.0 * std::abs(s.c) + 2.0 * std::sqrt(2.0) * std::abs(s.a);
  // The sine combination reaches +2 sqrt(2) at differences
  // (pi/4, 3pi/4, 3pi/4, 5pi/4); shifting both of Alice's settings by pi
  // flips its sign to pair with a negative offset.
  double shift = s.c >= 0 ? 0.0 : std::numbers::pi;
  double a1 = std::numbers::pi / 2 + shift;
  double a2 = std::numbers::pi + shift;
  out.phases = {a1, a2, std::numbers::pi / 4, -std::numbers::pi / 4};
  return out;
}

namespace {

double chsh_of_differences(const Sinusoid &s, double x, double y, double z) {
  // x = a1-b1, y = a1-b2, z = a2-b1; the fourth difference is z + y - x.
  return 2.0 * s.c +
         s.a * (std::sin(x) + std::sin(y) + std::sin(z) - std::sin(z + y - x));
}

}  // namespace

PhotonicChshMax photonic_chsh_max_scan(const PhotonicSetup &setup,
                                       double coarse_step) {
  if (coarse_step <= 0) throw std::invalid_argument("step must be positive");
  Sinusoid s = decompose(setup);
  const int n = static_cast<int>(std::ceil(kTwoPi / coarse_step));
  double best = -1.0;
  double bx = 0, by = 0, bz = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double x = i * kTwoPi / n, y = j * kTwoPi / n, z = k * kTwoPi / n;
        double v = std::abs(chsh_of_differences(s, x, y, z));
        if (v > best) {
          best = v;
          bx = x;
          by = y;
          bz = z;
        }
      }
  // Coordinate-wise golden-section refinement around the best cell.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double h = kTwoPi / n;
  for (int sweep = 0; sweep < 6; ++sweep) {
    for (int coord = 0; coord < 3; ++coord) {
      double *var = coord == 0 ? &bx : coord == 1 ? &by : &bz;
      double lo = *var - h, hi = *var + h;
      auto eval = [&](double t) {
        double x = coord == 0 ? t : bx;
        double y = coord == 1 ? t : by;
        double z = coord == 2 ? t : bz;
        return std::abs(chsh_of_differences(s, x, y, z));
      };
      double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
      double f1 = eval(x1), f2 = eval(x2);
      while (hi - lo > 1e-12) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + inv_phi * (hi - lo);
          f2 = eval(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - inv_phi * (hi - lo);
          f1 = eval(x1);
        }
      }
      *var = (lo + hi) / 2;
      best = eval(*var);
    }
    h /= 4;
  }
  PhotonicChshMax out;
  out.s_max = best;
  out.phases = {0.0, bz - bx, -bx, -by};
  return out;
}

PhotonicThreshold threshold_nbar() {
  auto excess = [](double n_bar) {
    return photonic_chsh_max(PhotonicSetup(0.5, 0.5, n_bar)).s_max - 2.0;
  };
  double lo = 0.0, hi = 1.0;  // excess(0) > 0, excess(1) < 0
  while (hi - lo > 1e-12) {
    double mid = (lo + hi) / 2;
    if (excess(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  PhotonicThreshold out;
  out.n_bar_star = (lo + hi) / 2;
  out.p_vac = std::exp(-out.n_bar_star);
  return out;
}

OptimalityScan optimality_scan(double n_bar, double grid_step) {
  if (grid_step <= 0 || grid_step > 0.5) {
    throw std::invalid_argument("grid step must lie in (0, 0.5]");
  }
  OptimalityScan out;
  out.best_s = -1.0;
  const int n = static_cast<int>(std::round(1.0 / grid_step));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double ra = std::min(1.0, i * grid_step);
      double rb = std::min(1.0, j * grid_step);
      double s = photonic_chsh_max(PhotonicSetup(ra, rb, n_bar)).s_max;
      out.cells.push_back({ra, rb, s});
      if (s > out.best_s) {
        out.best_s = s;
        out.best_r_a = ra;
        out.best_r_b = rb;
      }
    }
  }
  return out;
}

double hessmo_reflectivity(double n_bar) {
  if (n_bar < 0) throw std::invalid_argument("mean photon number must be >= 0");
  return 1.0 / (1.0 + n_bar);
}

}  // namespace ssrbell
