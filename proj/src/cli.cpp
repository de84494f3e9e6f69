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

#include "entlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "entlab/acceptance.hpp"
#include "entlab/assisted.hpp"
#include "entlab/decoupling.hpp"
#include "entlab/entropy.hpp"
#include "entlab/parallel.hpp"
#include "entlab/protocols.hpp"
#include "entlab/state_spec.hpp"
#include "entlab/typicality.hpp"

namespace entlab {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ENTLAB_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 0);
    if (end && *end == '\0' && end != env) return v;
  }
  return kDefaultSeed;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  for (const auto& t : split(s, ',')) {
    std::size_t pos = 0;
    double x = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("not a number: " + t);
    v.push_back(x);
  }
  return v;
}

// Finite values are rounded; non-finite ones become strings so the output stays valid JSON.
json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round12(x);
}

json opt_num(const std::optional<double>& x) { return x ? num(*x) : json(nullptr); }

std::string rat(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    // Decimal input: exact when it has few digits after the point.
    auto dot = s.find('.');
    std::int64_t den = 1;
    std::string digits = s;
    if (dot != std::string::npos) {
      std::size_t frac = s.size() - dot - 1;
      if (frac > 12) throw std::invalid_argument("too many decimals: " + s);
      for (std::size_t i = 0; i < frac; ++i) den *= 10;
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    return Rational(std::stoll(digits), den);
  }
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json labels_json(const Labels& l) { return json(l); }

json trace_json(const ProtocolTrace& t) {
  json j;
  j["outcomes"] = json::array();
  for (const auto& o : t.outcomes) {
    json e;
    e["label"] = o.label;
    e["probability"] = num(o.probability);
    e["register"] = o.register_value;
    json st = json::object();
    for (const auto& [k, v] : o.stats) st[k] = num(v);
    e["stats"] = st;
    j["outcomes"].push_back(e);
  }
  json ag = json::object();
  for (const auto& [k, v] : t.aggregate) ag[k] = num(v);
  j["aggregate"] = ag;
  json fl = json::object();
  for (const auto& [k, v] : t.flags) fl[k] = v;
  j["flags"] = fl;
  return j;
}

struct Output {
  std::string path;
  std::string format = "json";
};

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  // Write to a temporary file and rename so readers never see partial output.
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_null()) return "";
  return csv_escape(v.dump());
}

// Emits JSON, CSV or both. `rows` is a list of flat objects for CSV.
void emit(const json& j, const std::vector<std::string>& columns, const json& rows,
          const Output& o, std::ostream& out) {
  std::string text;
  if (o.format == "json" || o.format == "both") text += j.dump(2) + "\n";
  if (o.format == "csv" || o.format == "both") {
    for (std::size_t c = 0; c < columns.size(); ++c) text += (c ? "," : "") + columns[c];
    text += "\n";
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c)
        text += (c ? "," : "") + csv_cell(r.contains(columns[c]) ? r[columns[c]] : json(nullptr));
      text += "\n";
    }
  }
  write_text(text, o.path, out);
}

void emit_json(const json& j, const Output& o, std::ostream& out) {
  json row = json::object();
  std::vector<std::string> cols;
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!it->is_structured()) {
      cols.push_back(it.key());
      row[it.key()] = *it;
    }
  emit(j, cols, json::array({row}), o, out);
}

Labels default_senders(const LabeledState& s, const Labels& exclude) {
  Labels out;
  for (const auto& l : s.labels())
    if (std::find(exclude.begin(), exclude.end(), l) == exclude.end()) out.push_back(l);
  return out;
}

json region_json(const RegionSpec& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["parties"] = r.parties;
  j["constraints"] = json::array();
  for (const auto& c : r.constraints)
    j["constraints"].push_back({{"bitmask", c.mask}, {"subset", join_labels(c.subset)}, {"rhs", num(c.rhs)}});
  return j;
}

json membership_json(const MembershipResult& m, const CostVector& p) {
  json j;
  j["point"] = json::array();
  for (double x : p) j["point"].push_back(num(x));
  j["verdict"] = to_string(m.verdict);
  j["in_region"] = m.verdict != Membership::outside;
  j["violated"] = m.violated;
  j["tight"] = m.tight;
  return j;
}

}  // namespace

std::vector<Party> parse_parties(const std::string& text) {
  std::vector<Party> out;
  for (const auto& p : split(text, ',')) out.push_back(split(p, '+'));
  return out;
}

Labels parse_side(const std::string& text, const LabeledState& s) {
  if (text.find(',') != std::string::npos || text.find('+') != std::string::npos) {
    Labels out;
    for (const auto& p : parse_parties(text)) out.insert(out.end(), p.begin(), p.end());
    return out;
  }
  if (s.has(text)) return {text};
  Labels labels = s.labels();
  std::sort(labels.begin(), labels.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  Labels out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool found = false;
    for (const auto& l : labels)
      if (text.compare(pos, l.size(), l) == 0) {
        out.push_back(l);
        pos += l.size();
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("cannot split '" + text + "' into system labels");
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<char*> argv;
  std::vector<std::string> copy = args;
  for (auto& a : copy) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"entlab: multiparty entanglement and state-merging toolkit"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  Output o;
  std::uint64_t seed = default_seed();
  int threads = 1;
  app.add_option("--out", o.path, "Write output to this file (atomically)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "both"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // entropy
  std::string e_state, e_split, e_quantity = "all", e_sigma = "marginal";
  auto* ent = app.add_subcommand("entropy",
      "Entropic quantities of a bipartition: von Neumann, conditional, coherent, mutual, "
      "min-, collision, max- and zero-entropies");
  ent->add_option("--state", e_state, "State file")->required();
  ent->add_option("--split", e_split, "Bipartition A|B")->required();
  ent->add_option("--quantity", e_quantity)
      ->check(CLI::IsMember({"svn", "cond", "coh", "mutual", "hmin", "h2", "hmax", "h0", "all"}));
  ent->add_option("--sigma", e_sigma, "marginal, optimal, or a state file on B");
  ent->add_option("--seed", seed);

  // region
  std::string r_state, r_mode = "merge", r_point, r_ordering, r_senders, r_receiver, r_reference = "R",
              r_T, r_Tbar, r_A, r_B;
  double r_eps = 0.1;
  bool r_intro = false;
  auto* reg = app.add_subcommand("region",
      "Rate and cost regions: multiparty merging, split-transfer, one-shot cost and "
      "sequential cost bounds, with membership tests");
  reg->add_option("--state", r_state)->required();
  reg->add_option("--mode", r_mode)->check(CLI::IsMember({"merge", "split", "cost", "seq"}));
  reg->add_option("--eps", r_eps);
  reg->add_option("--point", r_point, "Comma-separated rates");
  reg->add_option("--ordering", r_ordering, "Sender order for seq mode");
  reg->add_option("--senders", r_senders, "Sender parties (',' separates, '+' joins)");
  reg->add_option("--receiver", r_receiver, "Receiver-side systems for merge mode");
  reg->add_option("--reference", r_reference, "Reference systems for cost modes");
  reg->add_option("--T", r_T);
  reg->add_option("--Tbar", r_Tbar);
  reg->add_option("--A", r_A);
  reg->add_option("--B", r_B);
  reg->add_flag("--intro-form", r_intro, "Use the +12 one-shot constant");
  reg->add_option("--seed", seed);

  // decouple
  std::string d_state, d_senders, d_reference = "R", d_bound = "both";
  int d_samples = 200;
  auto* dec = app.add_subcommand("decouple",
      "Random-instrument decoupling: Monte Carlo error against the one-shot multiparty bound");
  dec->add_option("--state", d_state)->required();
  dec->add_option("--senders", d_senders, "C1:K=2:L=1,C2+C3:K=1:L=1")->required();
  dec->add_option("--reference", d_reference);
  dec->add_option("--samples", d_samples)->check(CLI::PositiveNumber);
  dec->add_option("--bound", d_bound)->check(CLI::IsMember({"purity", "hmin", "both"}));
  dec->add_option("--seed", seed);

  // twirl
  int t_d = 2, t_L = 1, t_samples = 20000;
  auto* tw = app.add_subcommand("twirl", "Haar twirl of a rank-L projector: r I + s F coefficients");
  tw->add_option("--d", t_d)->required();
  tw->add_option("--L", t_L)->required();
  tw->add_option("--samples", t_samples)->check(CLI::PositiveNumber);
  tw->add_option("--seed", seed);

  // assist
  std::string a_state, a_A, a_B, a_helpers, a_cnot;
  bool a_eoa = false;
  auto* as = app.add_subcommand("assist",
      "Assisted distillation: min-cut coherent information, hashing comparison and "
      "entanglement of assistance");
  as->add_option("--state", a_state)->required();
  as->add_option("--A", a_A)->required();
  as->add_option("--B", a_B)->required();
  as->add_option("--helpers", a_helpers, "Helper parties (',' separates, '+' joins)");
  as->add_option("--cnot", a_cnot, "control,target: apply a CNOT first");
  as->add_flag("--eoa", a_eoa, "Also search the one-shot entanglement of assistance (pure states)");
  as->add_option("--seed", seed);

  // swap
  std::string s_lambda2 = "1/3";
  auto* sw = app.add_subcommand("swap", "Entanglement swapping of two Schmidt pairs and the singlet conversion probability");
  sw->add_option("--lambda2", s_lambda2, "Smaller Schmidt probability (p/q or decimal)");

  // hash-sim
  std::string h_p = "0.8,0.1,0.05,0.05";
  int h_n = 2000, h_trials = 50, h_decoys = 10000;
  double h_delta = 0.05;
  auto* hs = app.add_subcommand("hash-sim", "Hashing distillation of Bell-diagonal pairs by decoy elimination");
  hs->add_option("--p", h_p, "Bell-diagonal probabilities Phi+,Psi+,Phi-,Psi-");
  hs->add_option("--n", h_n);
  hs->add_option("--delta", h_delta);
  hs->add_option("--trials", h_trials)->check(CLI::PositiveNumber);
  hs->add_option("--decoys", h_decoys)->check(CLI::NonNegativeNumber);
  hs->add_option("--seed", seed);

  // schmidt
  double c_theta = 0.5;
  int c_n = 8;
  auto* sc = app.add_subcommand("schmidt", "Schmidt projection of n copies of cos(t)|00> + sin(t)|11>");
  sc->add_option("--theta", c_theta);
  sc->add_option("--n", c_n);

  // typ-check
  std::string y_p = "0.8,0.2";
  int y_n = 12;
  double y_delta = 0.1;
  auto* ty = app.add_subcommand("typ-check", "Typical-set and typical-projector bounds against exact values");
  ty->add_option("--p", y_p);
  ty->add_option("--n", y_n);
  ty->add_option("--delta", y_delta);

  // verify
  std::vector<int> v_only;
  auto* ve = app.add_subcommand("verify", "Run the acceptance suite and print a pass/fail table");
  ve->add_option("--only", v_only, "Criterion ids");
  ve->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  set_worker_count(threads);

  try {
    if (*ent) {
      auto s = parse_state_file(e_state);
      auto bar = e_split.find('|');
      if (bar == std::string::npos) throw std::invalid_argument("--split needs the form A|B");
      Labels A = parse_side(e_split.substr(0, bar), s), B = parse_side(e_split.substr(bar + 1), s);
      auto want = [&](const char* q) { return e_quantity == "all" || e_quantity == q; };
      Labels AB = A;
      AB.insert(AB.end(), B.begin(), B.end());
      json j = json::object();
      if (want("svn")) {
        j["svn"] = num(von_neumann(s, AB));
        j["svn_A"] = num(von_neumann(s, A));
        j["svn_B"] = num(von_neumann(s, B));
      }
      if (want("cond")) j["cond"] = num(conditional_entropy(s, A, B));
      if (want("coh")) j["coherent"] = num(coherent_information(s, A, B));
      if (want("mutual")) j["mutual"] = num(mutual_information(s, A, B));
      if (want("hmin") || want("h2")) {
        auto rho = reorder(partial_trace(s, AB), AB);
        const int dA = s.dim_of(A);
        if (e_sigma == "optimal") {
          auto res = conditional_min_entropy(rho.matrix(), dA);
          if (want("hmin")) {
            j["hmin"] = num(res.hmin);
            j["hmin_gap"] = num(res.residual);
          }
          if (want("h2")) {
            Mat sig = res.certificate;
            j["h2"] = num(collision_entropy(rho.matrix(), dA, sig));
          }
        } else {
          Mat sigma;
          if (e_sigma == "marginal") {
            sigma = reorder(partial_trace(s, B), B).matrix();
          } else {
            auto sf = parse_state_file(e_sigma);
            if (sf.dim() != s.dim_of(B)) throw std::invalid_argument("--sigma dimension mismatch");
            sigma = sf.matrix();
          }
          if (want("hmin")) j["hmin"] = num(min_entropy_relative(rho.matrix(), dA, sigma));
          if (want("h2")) j["h2"] = num(collision_entropy(rho.matrix(), dA, sigma));
        }
      }
      if (want("hmax")) {
        auto rho = reorder(partial_trace(s, AB), AB);
        j["hmax"] = num(conditional_max_entropy(rho, B));
      }
      if (want("h0")) j["h0"] = num(h0(reduced_matrix(s, A)));
      emit_json(j, o, out);
      return 0;
    }

    if (*reg) {
      auto s = parse_state_file(r_state);
      json j;
      j["mode"] = r_mode;
      std::vector<Constraint> rows;
      auto finish = [&](const RegionSpec& r) {
        j["region"] = region_json(r);
        if (!r_point.empty()) j["membership"] = membership_json(region_membership(r, parse_doubles(r_point)), parse_doubles(r_point));
        rows.insert(rows.end(), r.constraints.begin(), r.constraints.end());
      };
      if (r_mode == "merge") {
        Labels recv = r_receiver.empty() ? Labels{} : parse_side(r_receiver, s);
        Labels excl = recv;
        excl.push_back("R");
        auto senders = r_senders.empty() ? singletons(default_senders(s, excl)) : parse_parties(r_senders);
        finish(merging_rate_region(s, senders, recv));
      } else if (r_mode == "split") {
        if (r_T.empty() || r_Tbar.empty() || r_A.empty() || r_B.empty())
          throw std::invalid_argument("split mode needs --T --Tbar --A --B");
        auto [first, second] = split_transfer_region(s, parse_parties(r_T), parse_parties(r_Tbar),
                                                     parse_side(r_A, s), parse_side(r_B, s));
        j["region_T"] = region_json(first);
        j["region_Tbar"] = region_json(second);
        rows = first.constraints;
        rows.insert(rows.end(), second.constraints.begin(), second.constraints.end());
      } else {
        Labels ref = parse_side(r_reference, s);
        auto senders = r_senders.empty() ? singletons(default_senders(s, ref)) : parse_parties(r_senders);
        if (r_mode == "cost") {
          finish(one_shot_cost_region(s, senders, ref, CostConstants{r_eps, r_intro}));
        } else {
          std::vector<int> ord;
          if (r_ordering.empty()) {
            for (std::size_t i = 0; i < senders.size(); ++i) ord.push_back(static_cast<int>(i));
          } else {
            for (const auto& name : split(r_ordering, ',')) {
              int idx = -1;
              for (std::size_t i = 0; i < senders.size(); ++i)
                if (party_name(senders[i]) == name) idx = static_cast<int>(i);
              if (idx < 0) throw std::invalid_argument("unknown sender in ordering: " + name);
              ord.push_back(idx);
            }
          }
          auto sc = sequential_cost(s, senders, ref, ord, r_eps);
          j["ordering"] = sc.ordering;
          j["lower_bounds"] = json::array();
          for (double x : sc.lower_bounds) j["lower_bounds"].push_back(num(x));
          j["entries"] = json::array();
          for (const auto& e : sc.entries) {
            j["entries"].push_back({{"sender", e.sender},
                                    {"relative_reference", labels_json(e.relative_reference)},
                                    {"delta", num(e.delta)},
                                    {"constant", num(e.constant)},
                                    {"hmin_relative", num(e.hmin_relative)},
                                    {"hmin_conditional", opt_num(e.hmin_conditional)},
                                    {"S_cond", num(e.S_cond)},
                                    {"renes_upper", num(e.renes_upper)},
                                    {"cost_bound_renes", num(e.cost_bound_renes)},
                                    {"cost_bound_truncation", opt_num(e.cost_bound_truncation)},
                                    {"cost_bound_unsmoothed", opt_num(e.cost_bound_unsmoothed)},
                                    {"cost_bound", num(e.cost_bound)}});
          }
          if (!r_point.empty()) {
            auto p = parse_doubles(r_point);
            if (p.size() != sc.lower_bounds.size()) throw std::invalid_argument("--point size mismatch");
            bool ok = true;
            for (std::size_t i = 0; i < p.size(); ++i) ok = ok && p[i] >= sc.lower_bounds[i] - 1e-9;
            j["point_above_bounds"] = ok;
          }
        }
      }
      json csv = json::array();
      for (const auto& c : rows) csv.push_back({{"bitmask", c.mask}, {"subset", join_labels(c.subset)}, {"rhs", num(c.rhs)}});
      emit(j, {"bitmask", "subset", "rhs"}, csv, o, out);
      return 0;
    }

    if (*dec) {
      auto s = parse_state_file(d_state);
      InstrumentSpec spec;
      spec.seed = seed;
      spec.samples = d_samples;
      for (const auto& item : split(d_senders, ',')) {
        auto parts = split(item, ':');
        if (parts.empty()) throw std::invalid_argument("empty sender");
        Sender snd;
        snd.systems = split(parts[0], '+');
        for (std::size_t k = 1; k < parts.size(); ++k) {
          const auto& kv = parts[k];
          if (kv.rfind("K=", 0) == 0) snd.K = std::stoi(kv.substr(2));
          else if (kv.rfind("L=", 0) == 0) snd.L = std::stoi(kv.substr(2));
          else throw std::invalid_argument("unknown sender field: " + kv);
        }
        spec.senders.push_back(snd);
      }
      Labels ref = parse_side(d_reference, s);
      auto r = simulate_random_instrument(s, spec, ref);
      json j;
      j["empirical_Q"] = num(r.empirical_Q);
      j["stderr_Q"] = num(r.stderr_Q);
      if (d_bound != "hmin") j["bound_purity"] = num(r.analytic_bound);
      if (d_bound != "purity") j["bound_hmin"] = opt_num(r.minentropy_bound);
      j["empirical_raw"] = num(r.empirical_raw);
      j["stderr_raw"] = num(r.stderr_raw);
      j["raw_bound"] = opt_num(r.raw_bound);
      j["remainder_mass"] = num(r.remainder_mass);
      j["max_prob_error"] = num(r.max_prob_error);
      j["samples"] = r.samples;
      j["outcomes"] = r.outcomes;
      j["vacuous"] = r.vacuous;
      j["within_bound"] = r.empirical_Q + 2 * r.stderr_Q <= r.analytic_bound;
      emit_json(j, o, out);
      return 0;
    }

    if (*tw) {
      auto r = twirl_average_check(t_d, t_L, t_samples, seed);
      json j;
      j["d"] = r.d;
      j["L"] = r.L;
      j["samples"] = r.samples;
      j["r"] = rat(r.r);
      j["s"] = rat(r.s);
      j["max_deviation"] = num(r.max_deviation);
      j["sym_trace_error"] = num(r.sym_trace_error);
      j["swap_split_error"] = num(r.swap_split_error);
      emit_json(j, o, out);
      return 0;
    }

    if (*as) {
      auto s = parse_state_file(a_state);
      Labels A = parse_side(a_A, s), B = parse_side(a_B, s);
      std::vector<Party> helpers = a_helpers.empty() ? std::vector<Party>{} : parse_parties(a_helpers);
      json j;
      if (!a_cnot.empty()) {
        auto ct = split(a_cnot, ',');
        if (ct.size() != 2) throw std::invalid_argument("--cnot needs control,target");
        s = apply_local(s, ct, states::cnot());
        j["cnot"] = ct;
      }
      auto r = assisted_lower_bound(s, A, B, helpers);
      j["hashing"] = num(r.hashing);
      j["L"] = num(r.L_value);
      j["lower_bound"] = num(r.lower_bound);
      j["mincut_coherent"] = num(r.mincut_coherent);
      j["mincut_arg"] = r.mincut_arg;
      j["mincut_mask"] = r.mincut_mask;
      j["cut_values"] = json::array();
      for (double v : r.cut_values) j["cut_values"].push_back(num(v));
      j["upper_EA"] = opt_num(r.upper_EA);
      j["beats_hashing"] = r.beats_hashing;
      j["zero_entropy_cuts"] = r.zero_entropy_cuts;
      if (a_eoa) {
        if (!s.is_pure()) throw std::invalid_argument("--eoa needs a pure state");
        if (helpers.size() != 1) throw std::invalid_argument("--eoa needs exactly one helper party");
        PovmSearchOptions opt;
        opt.seed = seed;
        auto e = eoa_pure(s, A, B, helpers.front(), opt);
        j["eoa"] = {{"asymptotic", num(e.asymptotic)}, {"one_shot", num(e.one_shot)},
                    {"basis_value", num(e.basis_value)}, {"evaluations", e.evaluations}};
      }
      emit_json(j, o, out);
      return 0;
    }

    if (*sw) {
      Rational l2 = parse_rational(s_lambda2);
      Rational l1 = Rational(1) - l2;
      if (l2 <= Rational(0) || l2 > l1) throw std::invalid_argument("--lambda2 must lie in (0, 1/2]");
      auto r = entanglement_swap_rational(l1, l2);
      json j;
      j["lambda1"] = rat(l1);
      j["lambda2"] = rat(l2);
      j["scp"] = rat(r.scp);
      j["branches"] = json::array();
      for (const auto& b : r.branches)
        j["branches"].push_back({{"label", b.label}, {"probability", rat(b.probability)},
                                 {"singlet_given_outcome", rat(b.singlet_given_outcome)}});
      j["trace"] = trace_json(entanglement_swap(boost::rational_cast<double>(l1), boost::rational_cast<double>(l2)));
      json rows = json::array();
      for (const auto& b : r.branches)
        rows.push_back({{"label", b.label}, {"probability", rat(b.probability)},
                        {"singlet_given_outcome", rat(b.singlet_given_outcome)}});
      emit(j, {"label", "probability", "singlet_given_outcome"}, rows, o, out);
      return 0;
    }

    if (*hs) {
      HashingOptions opt;
      opt.decoys = h_decoys;
      auto r = hashing_simulation(parse_doubles(h_p), h_n, h_delta, h_trials, seed, opt);
      json j;
      j["entropy"] = num(r.entropy);
      j["rounds"] = r.rounds;
      j["success_frequency"] = num(r.success_frequency);
      j["empty_candidate_frequency"] = num(r.empty_candidate_frequency);
      j["yield"] = num(r.yield);
      j["target_yield"] = num(r.target_yield);
      j["infeasible"] = r.infeasible;
      j["trace"] = trace_json(r.trace);
      json rows = json::array();
      for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const auto& t = r.trials[i];
        rows.push_back({{"trial", i}, {"hidden_typical", t.hidden_typical}, {"success", t.success},
                        {"surviving_decoys", t.surviving_decoys}, {"rounds_to_unique", t.rounds_to_unique}});
      }
      emit(j, {"trial", "hidden_typical", "success", "surviving_decoys", "rounds_to_unique"}, rows, o, out);
      return 0;
    }

    if (*sc) {
      auto t = schmidt_projection(c_theta, c_n);
      json j = trace_json(t);
      json rows = json::array();
      for (const auto& oc : t.outcomes) {
        json r = {{"label", oc.label}, {"probability", num(oc.probability)}};
        for (const auto& [k, v] : oc.stats) r[k] = num(v);
        rows.push_back(r);
      }
      std::vector<std::string> cols = {"label", "probability"};
      if (!t.outcomes.empty())
        for (const auto& [k, v] : t.outcomes.front().stats) cols.push_back(k);
      emit(j, cols, rows, o, out);
      return 0;
    }

    if (*ty) {
      auto p = parse_doubles(y_p);
      auto ts = typical_set(p, y_n, y_delta);
      const double eps = std::max(0.0, 1.0 - ts.total_probability);
      const double lo = ts.H - ts.c * y_delta, hi = ts.H + ts.c * y_delta;
      json rows = json::array();
      auto row = [&](const std::string& q, double bound, double actual, bool holds) {
        rows.push_back({{"quantity", q}, {"bound", num(bound)}, {"actual", num(actual)}, {"holds", holds}});
      };
      row("log2_prob_min_vs_lower", -y_n * hi, ts.log2_min_prob, ts.log2_min_prob >= -y_n * hi - 1e-9);
      row("log2_prob_max_vs_upper", -y_n * lo, ts.log2_max_prob, ts.log2_max_prob <= -y_n * lo + 1e-9);
      row("log2_card_vs_upper", y_n * hi, ts.log2_cardinality, ts.card_upper_holds);
      row("log2_card_vs_lower", std::log2(std::max(1e-300, 1 - eps)) + y_n * lo, ts.log2_cardinality,
          ts.card_lower_holds);
      double hoeff = 1 - 2.0 * p.size() * std::exp(-2.0 * y_n * y_delta * y_delta);
      row("total_probability_vs_hoeffding", hoeff, ts.total_probability, ts.total_probability >= hoeff - 1e-12);
      json j;
      j["H"] = num(ts.H);
      j["c"] = num(ts.c);
      j["cardinality"] = num(ts.cardinality);
      j["type_classes"] = ts.type_classes;
      j["checks"] = rows;
      Output oc = o;
      if (oc.format == "json" && app.get_option("--format")->count() == 0) oc.format = "csv";
      emit(j, {"quantity", "bound", "actual", "holds"}, rows, oc, out);
      return 0;
    }

    if (*ve) {
      auto results = run_acceptance(seed, v_only);
      int failed = 0;
      std::string text;
      for (const auto& r : results) {
        text += format_result(r) + "\n";
        if (!r.pass) ++failed;
      }
      text += std::to_string(results.size()) + " criteria, " + std::to_string(failed) + " failed\n";
      write_text(text, o.path, out);
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace entlab
