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

// Reproduction gate: runs every headline check at its pinned tolerance and
// prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <cstdio>
#include <cstdlib>

#include "ssrbell/acceptance.hpp"

int main(int argc, char **argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  auto records = ssrbell::acceptance::run_all_with_determinism(seed);
  int failures = 0;
  for (const auto &r : records) {
    std::printf("%s criterion %-2s %-26s expected %s, computed %s (tolerance %g)\n",
                r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(),
                r.expected.c_str(), r.computed.c_str(), r.tolerance);
    if (!r.pass) {
      std::printf("     detail: %s\n", r.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(records.size()) - failures,
              records.size());
  return failures;
}
