#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "selgames/run_config.hpp"
#include "selgames/strategies.hpp"
#include "selgames/verify.hpp"

using namespace selgames;

namespace {

json base_config() {
  return json{{"game", "nbd-covers"},
              {"track", "product"},
              {"group", json{{"component", json{{"kind", "integers"}}}}},
              {"window", 3},
              {"innings", 6},
              {"one",
               json{{"kind", "randomNbd"}, {"seed", 11}, {"growth", 1}}},
              {"two", json{{"kind", "nbd"}}},
              {"seed", 11}};
}

}  // namespace

TEST_CASE("run config fills defaults") {
  const RunConfig c = RunConfig::from_json(base_config());
  CHECK(c.game.kind == GameKind::NbdCovers);
  CHECK(c.game.group.track() == Track::Product);
  CHECK(c.game.window.size() == 3);
  CHECK(c.game.inning_cap == 6);
  CHECK(c.innings == 6);
  CHECK(c.seed == 11);
  CHECK(c.output_path.empty());

  // Pool defaults to the window, and the default probe sample is the
  // identity plus every rank-1 singleton in the window.
  CHECK(c.one_desc.at("pool") == c.game.window.to_json());
  REQUIRE(c.probes.size() == 4);
  CHECK(c.probes[0].is_identity());
  for (Index i = 0; i < 3; ++i)
    CHECK(c.probes[i + 1] ==
          Element::from_entries({{i, 1}}, c.game.group));

  // Round trip: serialization parses back to the same configuration.
  const RunConfig back = RunConfig::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
}

TEST_CASE("run config probe requests") {
  json j = base_config();

  SUBCASE("string selects defaults") {
    j["probes"] = "default";
    CHECK(RunConfig::from_json(j).probes.size() == 4);
  }
  SUBCASE("rank object widens the sample") {
    j["probes"] = json{{"singletonRank", 2}};
    CHECK(RunConfig::from_json(j).probes.size() == 7);
  }
  SUBCASE("explicit list is parsed as elements") {
    j["probes"] = json::array({json::array(),
                               json::array({json::array({2, -4})})});
    const RunConfig c = RunConfig::from_json(j);
    REQUIRE(c.probes.size() == 2);
    CHECK(c.probes[0].is_identity());
    CHECK(c.probes[1] == Element::from_entries({{2, -4}}, c.game.group));
  }
}

TEST_CASE("run config rejects bad documents") {
  auto reject = [](json j) {
    CHECK_THROWS_AS(RunConfig::from_json(std::move(j)), ConfigError);
  };

  json j = base_config();
  j["innings"] = 0;
  reject(j);

  j = base_config();
  j["window"] = -2;
  reject(j);

  j = base_config();
  j["track"] = "discrete";
  reject(j);

  j = base_config();
  j["game"] = "chess";
  reject(j);

  j = base_config();
  j["group"] = json{{"kappa", "omega1"}};
  reject(j);

  j = base_config();
  j["probes"] = json::array({json::array({json::array({9, 1})})});
  reject(j);  // probe leaves the window

  j = base_config();
  j.erase("one");
  reject(j);

  j = base_config();
  j["one"] = json{{"kind", "sigmaOO"}};
  CHECK_THROWS_AS(run_simulation(RunConfig::from_json(j)), ConfigError);
}

TEST_CASE("simulation runs end to end from a config") {
  json j = base_config();
  j["innings"] = 16;
  const RunConfig c = RunConfig::from_json(j);
  const Transcript t = run_simulation(c);
  CHECK(t.summary.at("status") == "truncated");
  CHECK(t.innings.size() == 16);
  // The header records the strategy's own descriptor, which carries the
  // replay marker on top of the configured fields.
  json recorded = t.header.at("one");
  CHECK(recorded.at("reconstructible") == true);
  recorded.erase("reconstructible");
  CHECK(recorded == c.one_desc);
  CHECK(t.header.at("two").at("kind") == "nbd");
  CHECK(t.header.at("seed") == 11);
  CHECK(validate_transcript(t, descriptor_rebuilder()).ok());

  // Every default probe gets covered in 16 innings of this small window.
  for (const Element& p : c.probes)
    CHECK(!probe_coverage(t, p, c.game.group).empty());
}

TEST_CASE("faults are captured rather than thrown by default") {
  json j = base_config();
  // Scripted ONE that walks outside the window at inning 1.
  j["one"] = json{{"kind", "scriptedNbd"},
                  {"script", json::array({json::array({0}),
                                          json::array({7})})}};
  const Transcript t = run_simulation(RunConfig::from_json(j));
  CHECK(t.summary.at("status") == "fault");
  CHECK(t.summary.at("fault").at("rule") == "one-window");
  CHECK(t.summary.at("fault").at("actor") == "one");
  CHECK(t.summary.at("fault").at("inning") == 1);
  CHECK(t.innings.size() == 1);

  CHECK_THROWS_AS(run_simulation(RunConfig::from_json(j), FaultPolicy::Throw),
                  LegalityError);
}

TEST_CASE("descriptor rebuilding skips what it cannot reconstruct") {
  const OneRebuilder rebuild = descriptor_rebuilder();
  const RunConfig c = RunConfig::from_json(base_config());
  CHECK(rebuild(c.one_desc, c.game) != nullptr);
  CHECK(rebuild(json{{"kind", "human"}, {"reconstructible", false}},
                c.game) == nullptr);
  CHECK(rebuild(json{{"kind", "nosuch"}}, c.game) == nullptr);
}

TEST_CASE("verify suites are clean at test scale") {
  const VerifyReport reports[] = {
      verify_group_axioms(1, 300),
      verify_lebesgue_compact(2, 60),
      verify_lebesgue_pgroup(3, 60, 25),
      verify_nbd_game(4, 6, 64),
      verify_oo_games(5, 4, 48),
      verify_counterplay(6, 64),
      verify_schedule(7, 10, 8, 4),
      verify_selector(8, 40),
      verify_window_invariance(9, 6),
  };
  for (const VerifyReport& r : reports) {
    INFO(r.suite);
    for (const Violation& v : r.violations)
      MESSAGE(v.rule, ": ", v.details);
    CHECK(r.ok());
    CHECK(r.cases > 0);
    CHECK(r.millis >= 0.0);
  }
}

TEST_CASE("suite dispatch knows the command-line names") {
  const std::vector<std::string> names = verify_suite_names();
  CHECK(names.size() == 7);
  for (const std::string& n :
       {"group-axioms", "lebesgue", "claims", "schedule", "counterplay",
        "selector", "window-invariance"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(run_verify_suite("nosuch", 0, 1), ConfigError);
}
