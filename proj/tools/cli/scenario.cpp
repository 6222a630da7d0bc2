// Copyright 2026 The uqsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "uqsd/random.hpp"

namespace uqsd::cli {
namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ScenarioError(std::string(source_) + ": field '" + path + "': " + what);
  }

  void only_keys(const json& obj, const std::string& path,
                 std::initializer_list<std::string_view> allowed) const {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& item : obj.items()) {
      bool known = false;
      for (std::string_view key : allowed) known = known || item.key() == key;
      if (!known) fail(join(path, item.key()), "unknown key");
    }
  }

  double number(const json& value, const std::string& path) const {
    if (!value.is_number()) fail(path, "expected a number");
    return value.get<double>();
  }

  std::uint64_t unsigned_integer(const json& value, const std::string& path) const {
    if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
    return value.get<std::uint64_t>();
  }

  const json& array(const json& value, const std::string& path) const {
    if (!value.is_array()) fail(path, "expected an array");
    return value;
  }

  std::vector<Complex> amplitudes(const json& value, const std::string& path) const {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < array(value, path).size(); ++i) {
      const std::string at = path + "[" + std::to_string(i) + "]";
      const json& pair = value[i];
      if (!pair.is_array() || pair.size() != 2) fail(at, "expected [re, im]");
      out.emplace_back(number(pair[0], at + "[0]"), number(pair[1], at + "[1]"));
    }
    return out;
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }

 private:
  std::string_view source_;
};

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

double squared_norm(const std::vector<Complex>& amps) {
  double total = 0.0;
  for (Complex a : amps) total += std::norm(a);
  return total;
}

PureState to_state(const std::vector<Complex>& amps) {
  Vector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return PureState::normalized(std::move(v));
}

json amplitudes_json(const std::vector<Complex>& amps) {
  json out = json::array();
  for (Complex a : amps) out.push_back({a.real(), a.imag()});
  return out;
}

}  // namespace

std::size_t Scenario::party_count() const {
  return std::visit(
      [](const auto& p) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, AbstractParties>) {
          return p.overlaps.size();
        } else {
          return p.parties.size();
        }
      },
      parties);
}

Engine parse_engine(std::string_view name) {
  if (name == "povm") return Engine::PovmSampling;
  if (name == "neumark") return Engine::NeumarkEvolution;
  throw InvalidInput("unknown engine '" + std::string(name) + "' (expected povm or neumark)");
}

Scenario parse_scenario(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string(source) + ":" + position(text, e.byte) + ": parse error: " +
                        e.what());
  }
  const Reader in(source);
  in.only_keys(doc, "", {"priors", "abstract", "explicit", "order", "simulation"});

  Scenario out;
  if (!doc.contains("priors")) in.fail("priors", "missing");
  const json& priors = in.array(doc["priors"], "priors");
  if (priors.size() != 2) in.fail("priors", "expected [r, s]");
  out.r = in.number(priors[0], "priors[0]");
  out.s = in.number(priors[1], "priors[1]");
  try {
    static_cast<void>(Priors(out.r, out.s));
  } catch (const InvalidInput& e) {
    in.fail("priors", e.what());
  }

  const bool has_abstract = doc.contains("abstract");
  const bool has_explicit = doc.contains("explicit");
  if (has_abstract == has_explicit) {
    in.fail(has_abstract ? "explicit" : "abstract",
            "exactly one of 'abstract' and 'explicit' must be present");
  }

  if (has_abstract) {
    const json& node = doc["abstract"];
    in.only_keys(node, "abstract", {"overlaps", "dim", "seed"});
    AbstractParties parties;
    if (!node.contains("overlaps")) in.fail("abstract.overlaps", "missing");
    const json& overlaps = in.array(node["overlaps"], "abstract.overlaps");
    if (overlaps.empty()) in.fail("abstract.overlaps", "needs at least one party");
    for (std::size_t i = 0; i < overlaps.size(); ++i) {
      const std::string at = "abstract.overlaps[" + std::to_string(i) + "]";
      const double c = in.number(overlaps[i], at);
      if (!(c >= 0.0 && c <= 1.0)) in.fail(at, "overlap must lie in [0, 1]");
      parties.overlaps.push_back(c);
    }
    if (node.contains("dim")) {
      parties.dim = static_cast<std::size_t>(in.unsigned_integer(node["dim"], "abstract.dim"));
      if (parties.dim < 2) in.fail("abstract.dim", "dimension must be >= 2");
    }
    if (node.contains("seed")) parties.seed = in.unsigned_integer(node["seed"], "abstract.seed");
    out.parties = std::move(parties);
  } else {
    const json& node = doc["explicit"];
    in.only_keys(node, "explicit", {"parties"});
    if (!node.contains("parties")) in.fail("explicit.parties", "missing");
    const json& list = in.array(node["parties"], "explicit.parties");
    if (list.empty()) in.fail("explicit.parties", "needs at least one party");
    ExplicitParties parties;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = "explicit.parties[" + std::to_string(i) + "]";
      in.only_keys(list[i], at, {"u", "v"});
      if (!list[i].contains("u")) in.fail(at + ".u", "missing");
      if (!list[i].contains("v")) in.fail(at + ".v", "missing");
      ExplicitParty party{in.amplitudes(list[i]["u"], at + ".u"),
                          in.amplitudes(list[i]["v"], at + ".v")};
      if (party.u.size() < 2) in.fail(at + ".u", "dimension must be >= 2");
      if (party.u.size() != party.v.size()) in.fail(at + ".v", "dimension differs from u");
      if (!(squared_norm(party.u) > 0.0)) in.fail(at + ".u", "zero vector");
      if (!(squared_norm(party.v) > 0.0)) in.fail(at + ".v", "zero vector");
      parties.parties.push_back(std::move(party));
    }
    out.parties = std::move(parties);
  }

  if (doc.contains("order")) {
    const json& list = in.array(doc["order"], "order");
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < list.size(); ++i) {
      order.push_back(static_cast<std::size_t>(
          in.unsigned_integer(list[i], "order[" + std::to_string(i) + "]")));
    }
    if (order.size() != out.party_count()) in.fail("order", "length differs from party count");
    try {
      static_cast<void>(Order(order));
    } catch (const InvalidInput& e) {
      in.fail("order", e.what());
    }
    out.order = std::move(order);
  }

  if (doc.contains("simulation")) {
    const json& node = doc["simulation"];
    in.only_keys(node, "simulation", {"trials", "seed", "engine"});
    SimulationSettings sim;
    if (node.contains("trials")) {
      sim.trials = in.unsigned_integer(node["trials"], "simulation.trials");
      if (sim.trials < 1) in.fail("simulation.trials", "must be >= 1");
    }
    if (node.contains("seed")) sim.seed = in.unsigned_integer(node["seed"], "simulation.seed");
    if (node.contains("engine")) {
      if (!node["engine"].is_string()) in.fail("simulation.engine", "expected a string");
      try {
        sim.engine = parse_engine(node["engine"].get<std::string>());
      } catch (const InvalidInput& e) {
        in.fail("simulation.engine", e.what());
      }
    }
    out.simulation = sim;
  }
  return out;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ScenarioError(path + ": cannot open scenario file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_scenario(buffer.str(), path);
}

nlohmann::ordered_json to_json(const Scenario& scenario) {
  nlohmann::ordered_json out;
  out["priors"] = {scenario.r, scenario.s};
  if (const auto* abstract = std::get_if<AbstractParties>(&scenario.parties)) {
    out["abstract"] = {{"overlaps", abstract->overlaps},
                       {"dim", abstract->dim},
                       {"seed", abstract->seed}};
  } else {
    const auto& explicit_parties = std::get<ExplicitParties>(scenario.parties);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& party : explicit_parties.parties) {
      list.push_back({{"u", amplitudes_json(party.u)}, {"v", amplitudes_json(party.v)}});
    }
    out["explicit"] = {{"parties", list}};
  }
  if (scenario.order) out["order"] = *scenario.order;
  if (scenario.simulation) {
    out["simulation"] = {{"trials", scenario.simulation->trials},
                         {"seed", scenario.simulation->seed},
                         {"engine", std::string(to_string(scenario.simulation->engine))}};
  }
  return out;
}

std::string serialize(const Scenario& scenario) { return to_json(scenario).dump(2) + "\n"; }

Scenario scenario_from_instance(const ProductInstance& instance) {
  Scenario out;
  out.r = instance.priors().r();
  out.s = instance.priors().s();
  ExplicitParties parties;
  for (const LocalPair& pair : instance.parties()) {
    ExplicitParty party;
    for (std::size_t i = 0; i < pair.dim(); ++i) {
      party.u.push_back(pair.p()[i]);
      party.v.push_back(pair.q()[i]);
    }
    parties.parties.push_back(std::move(party));
  }
  out.parties = std::move(parties);
  return out;
}

ProductInstance materialize(const Scenario& scenario) {
  std::vector<LocalPair> pairs;
  if (const auto* abstract = std::get_if<AbstractParties>(&scenario.parties)) {
    for (std::size_t i = 0; i < abstract->overlaps.size(); ++i) {
      pairs.push_back(
          state_pair_with_overlap(abstract->overlaps[i], abstract->dim, derive_seed(abstract->seed, i)));
    }
  } else {
    for (const auto& party : std::get<ExplicitParties>(scenario.parties).parties) {
      pairs.emplace_back(to_state(party.u), to_state(party.v));
    }
  }
  return ProductInstance(std::move(pairs), Priors(scenario.r, scenario.s));
}

Order resolve_order(const Scenario& scenario) {
  if (scenario.order) return Order(*scenario.order);
  return Order::identity(scenario.party_count());
}

}  // namespace uqsd::cli
