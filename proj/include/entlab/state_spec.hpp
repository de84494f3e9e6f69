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

#include <json.hpp>
#include <string>

#include "entlab/qcore.hpp"

namespace entlab {

// Builds a state from the JSON state description:
// {"systems":[{"label":"A","dim":2},...],
//  "state":{"kind":"constructor"|"pure"|"mixed", "name":..., "params":{...},
//           "amplitudes":[[re,im],...], "matrix":[[[re,im],...],...]}}
// When "systems" accompanies a constructor, its labels replace the default ones.
// The "state" object may also be given alone; explicit states without "systems"
// are a single system labeled "A".
LabeledState build_state(const nlohmann::json& spec);
LabeledState parse_state_file(const std::string& path);
nlohmann::json state_to_json(const LabeledState& s);

}  // namespace entlab
