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

#include "entlab/state_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entlab {

using nlohmann::json;

namespace {

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

cplx parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SpecError(where + ": expected [re, im]");
  double re = j[0].get<double>();
  double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw SpecError(where + ": non-finite number");
  return {re, im};
}

std::vector<System> parse_systems(const json& js) {
  std::vector<System> out;
  if (!js.is_array()) throw SpecError("systems: expected an array");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const auto& e = js[i];
    std::string where = "systems[" + std::to_string(i) + "]";
    if (!e.contains("label") || !e["label"].is_string()) throw SpecError(where + ".label missing");
    if (!e.contains("dim") || !e["dim"].is_number_integer()) throw SpecError(where + ".dim missing");
    long long d = e["dim"].get<long long>();
    if (d < 1 || d > 4096) throw SpecError(where + ".dim out of range");
    out.push_back({e["label"].get<std::string>(), static_cast<int>(d)});
  }
  return out;
}

double num_param(const json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number())
    throw SpecError(std::string("params.") + key + " missing or not a number");
  return params[key].get<double>();
}

int int_param(const json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw SpecError(std::string("params.") + key + " missing or not an integer");
  long long v = params[key].get<long long>();
  if (v < 1 || v > 4096) throw SpecError(std::string("params.") + key + " out of range");
  return static_cast<int>(v);
}

std::vector<double> list_param(const json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_array())
    throw SpecError(std::string("params.") + key + " missing or not an array");
  std::vector<double> out;
  for (const auto& v : params[key]) {
    if (!v.is_number()) throw SpecError(std::string("params.") + key + ": non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

LabeledState constructor(const std::string& name, const json& params) {
  if (name.rfind("bell_", 0) == 0) return states::bell(name.substr(5));
  if (name == "ghz") {
    int n = params.contains("parties") ? int_param(params, "parties") : 3;
    Labels labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('A' + i)));
    return states::ghz(labels);
  }
  if (name == "werner") return states::werner(num_param(params, "F"));
  if (name == "max_entangled") return states::max_entangled(int_param(params, "d"));
  if (name == "max_mixed") return states::max_mixed(int_param(params, "d"));
  if (name == "embezzle") return states::embezzle(int_param(params, "d"));
  if (name == "schmidt_pair") return states::schmidt_pair(list_param(params, "lambdas"));
  if (name == "example_ch5") return states::example_ch5();
  if (name == "two_sender_example") return states::two_sender_example();
  if (name == "example_4_1") {
    int d = int_param(params, "d");
    std::vector<double> theta;
    if (params.contains("theta")) {
      theta = list_param(params, "theta");
    } else {
      int k = int_param(params, "theta_dim");
      theta.assign(k, 1.0 / k);
    }
    return states::example_three_sender(d, theta);
  }
  if (name == "example_4_3") {
    int d = int_param(params, "d");
    std::uint64_t seed = params.contains("seed") ? params["seed"].get<std::uint64_t>() : kDefaultSeed;
    Rng rng(seed);
    Mat cols(d, d);
    for (int j = 0; j < d; ++j) cols.col(j) = random_unit_vector(d, rng);
    return states::example_overlap(cols);
  }
  throw SpecError("unknown constructor " + name);
}

}  // namespace

LabeledState build_state(const json& spec) {
  if (!spec.is_object()) throw SpecError("expected a JSON object");
  // A bare state description ({"kind":..., "name":...}) is accepted as the "state" object.
  const bool bare = !spec.contains("state") && (spec.contains("kind") || spec.contains("name"));
  if (!bare && !spec.contains("state")) throw SpecError("missing \"state\" object");
  const json& st = bare ? spec : spec["state"];
  std::string kind = st.value("kind", std::string("constructor"));
  std::vector<System> systems;
  if (spec.contains("systems")) systems = parse_systems(spec["systems"]);

  if (kind == "constructor") {
    if (!st.contains("name") || !st["name"].is_string()) throw SpecError("state.name missing");
    json params = st.value("params", json::object());
    LabeledState s = constructor(st["name"].get<std::string>(), params);
    if (systems.empty()) return s;
    if (systems.size() != s.systems().size()) throw SpecError("systems: count does not match constructor");
    for (std::size_t i = 0; i < systems.size(); ++i)
      if (systems[i].dim != s.systems()[i].dim)
        throw SpecError("systems[" + std::to_string(i) + "].dim does not match constructor");
    if (s.has_vector()) return LabeledState::from_vector(systems, s.vector());
    return LabeledState::from_matrix(systems, s.matrix());
  }
  // Without "systems" an explicit state is a single system "A".
  auto default_systems = [&](std::size_t n) {
    if (systems.empty()) systems = {{"A", static_cast<int>(n)}};
  };
  if (kind == "pure") {
    if (!st.contains("amplitudes") || !st["amplitudes"].is_array())
      throw SpecError("state.amplitudes missing");
    const auto& a = st["amplitudes"];
    default_systems(a.size());
    Vec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      v(i) = parse_complex(a[i], "state.amplitudes[" + std::to_string(i) + "]");
    return LabeledState::from_vector(systems, v);
  }
  if (kind == "mixed" || kind == "explicit") {
    if (!st.contains("matrix") || !st["matrix"].is_array()) throw SpecError("state.matrix missing");
    const auto& m = st["matrix"];
    const std::size_t n = m.size();
    default_systems(n);
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n)
        throw SpecError("state.matrix[" + std::to_string(i) + "]: row length mismatch");
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) = parse_complex(m[i][j], "state.matrix[" + std::to_string(i) + "][" +
                                               std::to_string(j) + "]");
    }
    try {
      return LabeledState::from_matrix(systems, out);
    } catch (const std::exception& e) {
      throw SpecError(std::string("state.matrix: ") + e.what());
    }
  }
  throw SpecError("state.kind must be constructor, pure or mixed");
}

LabeledState parse_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return build_state(j);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

json state_to_json(const LabeledState& s) {
  json out;
  out["systems"] = json::array();
  for (const auto& sys : s.systems()) out["systems"].push_back({{"label", sys.label}, {"dim", sys.dim}});
  json st;
  if (s.has_vector()) {
    st["kind"] = "pure";
    st["amplitudes"] = json::array();
    for (Eigen::Index i = 0; i < s.vector().size(); ++i)
      st["amplitudes"].push_back({s.vector()(i).real(), s.vector()(i).imag()});
  } else {
    st["kind"] = "mixed";
    st["matrix"] = json::array();
    const Mat& m = s.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
      st["matrix"].push_back(row);
    }
  }
  out["state"] = st;
  return out;
}

}  // namespace entlab
