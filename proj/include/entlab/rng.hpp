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

#pragma once

#include <cstdint>
#include <random>

namespace entlab {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x51A7E;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream for task k of a run seeded with root.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t k) {
  return splitmix64(root ^ splitmix64(k * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL));
}

inline Rng make_rng(std::uint64_t root, std::uint64_t k) { return Rng(derive_seed(root, k)); }

}  // namespace entlab
