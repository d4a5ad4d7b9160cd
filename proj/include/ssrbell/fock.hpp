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

#ifndef SSRBELL_FOCK_HPP
#define SSRBELL_FOCK_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ssrbell {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Numerical tolerances used throughout: dense double-precision algebra on
// spaces of at most a few thousand dimensions.
inline constexpr double kNormTol = 1e-12;     // state norm / trace / hermiticity
inline constexpr double kPsdFloor = -1e-10;   // eigenvalue floor for positivity
inline constexpr int kMaxTotalDim = 4096;     // tensor-product size guard

// Raised when a numerical contract that pairs two independent computation
// routes (closed form vs. brute force) is violated.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string &what) : std::runtime_error(what) {}
};

enum class Side { A, B };

/// Truncated bipartite particle-number basis: occupations 0..dim_a-1 on side
/// A and 0..dim_b-1 on side B, flattened row-major as (n_a, n_b).
struct FockCutoff {
  int dim_a = 1;
  int dim_b = 1;

  FockCutoff() = default;
  FockCutoff(int a, int b);

  int total_dim() const { return dim_a * dim_b; }
  int index(int n_a, int n_b) const { return n_a * dim_b + n_b; }
  int occupation_a(int flat) const { return flat / dim_b; }
  int occupation_b(int flat) const { return flat % dim_b; }
  int max_total_number() const { return (dim_a - 1) + (dim_b - 1); }

  bool operator==(const FockCutoff &) const = default;
};

/// Normalized pure state over a truncated bipartite number basis.
class PureState {
 public:
  PureState(FockCutoff cutoff, Vector amps);

  static PureState basis(FockCutoff cutoff, int n_a, int n_b);

  const FockCutoff &cutoff() const { return cutoff_; }
  const Vector &amps() const { return amps_; }
  Complex amp(int n_a, int n_b) const { return amps_(cutoff_.index(n_a, n_b)); }

 private:
  FockCutoff cutoff_;
  Vector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite operator over a truncated
/// bipartite number basis. Invariants are validated on construction.
class DensityOperator {
 public:
  DensityOperator(FockCutoff cutoff, Matrix mat);

  static DensityOperator from_pure(const PureState &psi);

  const FockCutoff &cutoff() const { return cutoff_; }
  const Matrix &mat() const { return mat_; }
  int dim() const { return cutoff_.total_dim(); }

 private:
  FockCutoff cutoff_;
  Matrix mat_;
};

/// Operator acting on a single side of a bipartite space.
struct LocalOperator {
  int dim = 0;
  Matrix mat;

  LocalOperator() = default;
  LocalOperator(int d, Matrix m);
};

// Kronecker composition of a system state with an ancilla/reference state.
// The combined basis groups the subsystems by party: if x lives on (A, B) and
// y on (A', B'), the result lives on ((A, A'), (B, B')) with the pair (n, k)
// on each party flattened as n * dim' + k. max_dim guards against runaway
// sizes; exceeding it raises std::length_error.
PureState tensor(const PureState &x, const PureState &y,
                 int max_dim = kMaxTotalDim);
DensityOperator tensor(const DensityOperator &x, const DensityOperator &y,
                       int max_dim = kMaxTotalDim);

/// Reduced operator on the side that is *not* traced out.
LocalOperator partial_trace(const DensityOperator &rho, Side traced_out);

/// Transposes the indices of the chosen side; preserves Hermiticity but not
/// positivity, hence returns a bare matrix.
Matrix partial_transpose(const DensityOperator &rho, Side side);

/// Orthogonal projector onto the subspace of total particle number n.
/// Out-of-range n yields the zero matrix.
Matrix total_number_projector(int n, const FockCutoff &cutoff);

}  // namespace ssrbell

#endif  // SSRBELL_FOCK_HPP
