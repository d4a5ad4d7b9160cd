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

#ifndef SSRBELL_ACCEPTANCE_HPP
#define SSRBELL_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ssrbell::acceptance {

// Reproduction checks: every headline numeric claim of the model, each with
// its expected value, pinned tolerance and pass flag. All randomness derives
// from the single seed, so two runs with the same seed are byte-identical.

struct CriterionRecord {
  std::string id;
  std::string name;
  std::string expected;
  std::string computed;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

/// Runs checks 1-9 once.
std::vector<CriterionRecord> run_all(std::uint64_t seed);

/// Runs checks 1-9 twice and appends the determinism check (byte equality of
/// the two rendered reports).
std::vector<CriterionRecord> run_all_with_determinism(std::uint64_t seed);

/// Fixed-layout text report, one line per criterion.
std::string render_report(const std::vector<CriterionRecord> &records,
                          std::uint64_t seed);

}  // namespace ssrbell::acceptance

#endif  // SSRBELL_ACCEPTANCE_HPP
