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
#include <string>
#include <vector>

#include "entlab/rng.hpp"

namespace entlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct PropertySuite {
  std::string name;
  int instances = 0;
  int violations = 0;
  double worst_excess = 0;  // largest amount by which an inequality failed (0 if none)
};

// Randomized property suites; every suite runs at least `instances` cases.
std::vector<PropertySuite> run_property_suites(std::uint64_t seed, int instances = 100);

// Runs the acceptance criteria (all when `only` is empty).
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {});

std::string format_result(const CriterionResult& r);

}  // namespace entlab
