#include "selgames/run_config.hpp"

#include <fstream>

#include "selgames/strategies.hpp"

namespace selgames {

namespace {

Window parse_window(const json& j) {
  if (j.is_number_integer()) {
    if (j.get<long long>() < 0) throw ConfigError("window size is negative");
    return Window::first(j.get<Index>());
  }
  return Window::from_json(j);
}

GroupSpec parse_group(const json& j, Track track) {
  const std::string kappa = j.value("kappa", std::string("omega1"));
  if (j.contains("component"))
    return GroupSpec(ComponentGroup::from_json(j.at("component")), kappa,
                     track);
  if (j.contains("fallback")) {
    std::vector<ComponentGroup> prefix;
    if (j.contains("prefix"))
      for (const auto& c : j.at("prefix"))
        prefix.push_back(ComponentGroup::from_json(c));
    return GroupSpec(std::move(prefix),
                     ComponentGroup::from_json(j.at("fallback")), kappa,
                     track);
  }
  throw ConfigError("group needs a 'component' or a 'prefix'/'fallback'");
}

// Kinds that sample from an index pool; the pool defaults to the window
// so the descriptor recorded in transcripts is always explicit.
bool needs_pool(const std::string& kind) {
  return kind == "randomNbd" || kind == "shrinkingNbd" ||
         kind == "probeHunter" || kind == "randomCover" ||
         kind == "greedyShrinkCover" || kind == "probeHunterCover" ||
         kind == "randomCountable";
}

json fill_defaults(json desc, const Window& window) {
  const std::string kind = desc.value("kind", "");
  if (needs_pool(kind) && !desc.contains("pool"))
    desc["pool"] = window.to_json();
  if (kind == "scriptedCountable" && !desc.contains("B"))
    desc["B"] = window.to_json();
  return desc;
}

}  // namespace

std::vector<Element> default_probes(const GroupSpec& spec,
                                    const Window& window,
                                    std::size_t max_rank) {
  std::vector<Element> probes;
  probes.push_back(Element());
  for (Index i : window.index_set()) {
    const ComponentGroup& g = spec.component(i);
    for (std::size_t r = 1; r <= max_rank; ++r) {
      if (g.order().has_value() && r >= *g.order()) break;
      probes.push_back(
          Element::from_entries({{i, g.value_at_rank(r)}}, spec));
    }
  }
  return probes;
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  try {
    const Track track =
        track_from_name(j.value("track", std::string("product")));
    const GroupSpec group = parse_group(j.at("group"), track);
    const Window window = parse_window(j.at("window"));
    c.innings = j.at("innings").get<std::size_t>();
    if (c.innings < 1) throw ConfigError("innings must be at least 1");
    const std::size_t cap = j.value("inningCap", c.innings);
    c.game = GameSpec{game_kind_from_name(j.at("game").get<std::string>()),
                      group, window, cap};
    c.one_desc = fill_defaults(j.at("one"), window);
    c.two_desc = fill_defaults(j.at("two"), window);
    c.seed = j.value("seed", std::uint64_t{0});
    c.output_path = j.value("out", std::string());
    if (!j.contains("probes") || j.at("probes").is_string()) {
      c.probes = default_probes(group, window, 1);
    } else if (j.at("probes").is_object()) {
      c.probes = default_probes(
          group, window, j.at("probes").value("singletonRank", 1));
    } else {
      for (const auto& pj : j.at("probes"))
        c.probes.push_back(Element::from_json(pj, group));
    }
    for (const Element& p : c.probes)
      if (!window.covers(p.support()))
        throw ConfigError("probe leaves the window");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad run config: ") + e.what());
  } catch (const MalformedElement& e) {
    throw ConfigError(std::string("bad run config: ") + e.what());
  }
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("cannot parse config file " + path + ": " + e.what());
  }
  return from_json(j);
}

json RunConfig::to_json() const {
  json probes = json::array();
  for (const Element& p : this->probes) probes.push_back(p.to_json());
  json j{{"game", game_kind_name(game.kind)},
         {"track", track_name(game.group.track())},
         {"group", game.group.to_json()},
         {"window", game.window.to_json()},
         {"innings", innings},
         {"inningCap", game.inning_cap},
         {"one", one_desc},
         {"two", two_desc},
         {"probes", std::move(probes)},
         {"seed", seed}};
  if (!output_path.empty()) j["out"] = output_path;
  return j;
}

Transcript run_simulation(const RunConfig& config, FaultPolicy policy) {
  auto one = make_one_strategy(config.one_desc, config.game);
  auto two = make_two_strategy(config.two_desc, config.game);
  return play_game(config.game, *one, *two, config.innings, config.probes,
                   config.seed, policy);
}

OneRebuilder descriptor_rebuilder() {
  return [](const json& desc,
            const GameSpec& spec) -> std::unique_ptr<OneStrategy> {
    try {
      return make_one_strategy(desc, spec);
    } catch (const std::exception&) {
      return nullptr;
    }
  };
}

}  // namespace selgames
