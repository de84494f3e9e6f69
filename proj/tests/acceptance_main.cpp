// Copyright 2026 The entlab Authors
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

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "entlab/acceptance.hpp"

// Usage: acceptance [--seed N] [criterion ids...]
int main(int argc, char** argv) {
  std::uint64_t seed = entlab::kDefaultSeed;
  if (const char* env = std::getenv("ENTLAB_SEED")) seed = std::strtoull(env, nullptr, 0);
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 0);
    } else {
      only.push_back(std::atoi(a.c_str()));
    }
  }
  auto results = entlab::run_acceptance(seed, only);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", entlab::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
