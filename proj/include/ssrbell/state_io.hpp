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

#ifndef SSRBELL_STATE_IO_HPP
#define SSRBELL_STATE_IO_HPP

#include <optional>
#include <string>

#include "ssrbell/fock.hpp"
#include "ssrbell/reference.hpp"

namespace ssrbell {

// Self-describing text format for states, one token pair or entry per line:
//
//   ssrbell-state v1
//   kind pure|density|minimal
//   dim_a <int>          (pure/density)
//   dim_b <int>
//   entry <index> <re> <im>            (pure)
//   entry <row> <col> <re> <im>        (density)
//   p00/p11/p_phi/r0/r1 <value>        (minimal shorthand)
//
// Numbers are written with 17 significant digits, so a save/load round trip
// reproduces every double bit-exactly. Omitted entries are zero.

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

enum class StateKind { Pure, Density, Minimal };

struct LoadedState {
  StateKind kind = StateKind::Pure;
  std::optional<PureState> pure;
  std::optional<DensityOperator> density;
  std::optional<MinimalReference> minimal;

  /// View as a density operator regardless of kind.
  DensityOperator as_density() const;
};

LoadedState load_state(const std::string &path);

void save_state(const PureState &psi, const std::string &path);
void save_state(const DensityOperator &rho, const std::string &path);
void save_state(const MinimalReference &m, const std::string &path);

/// 17-significant-digit decimal rendering used across all emitted files.
std::string format_double(double x);

}  // namespace ssrbell

#endif  // SSRBELL_STATE_IO_HPP
