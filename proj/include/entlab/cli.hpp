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
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entlab/qcore.hpp"
#include "entlab/regions.hpp"

namespace entlab {

// Exit codes: 0 success, 1 a checked assertion failed (verify), 2 usage or input error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rounds to 12 significant digits for serialization.
double round12(double x);

// Splits "A,B+C" style lists: ',' separates parties, '+' joins systems into one party.
std::vector<Party> parse_parties(const std::string& text);
// Labels of one side of a split such as "A|BC": comma / plus separated, or a
// concatenation of labels of s matched greedily (longest label first).
Labels parse_side(const std::string& text, const LabeledState& s);

std::uint64_t default_seed();

}  // namespace entlab
