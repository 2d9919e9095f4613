#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "selgames/run_config.hpp"
#include "selgames/strategies.hpp"

using namespace selgames;

namespace {

GroupSpec ints() {
  return GroupSpec(ComponentGroup::integers(), "omega1", Track::Product);
}

Element el(std::vector<std::pair<Index, Value>> entries,
           const GroupSpec& spec) {
  return Element::from_entries(std::move(entries), spec);
}

// ONE for the countable game that drops its first offer at inning 1.
class DroppingOne final : public OneStrategy {
 public:
  explicit DroppingOne(GroupSpec spec) : spec_(std::move(spec)) {}
  OneMove move(std::size_t inning, const PlayView&) override {
    OneMove m;
    if (inning == 0)
      m.countable = {el({{0, 1}}, spec_), el({{1, 1}}, spec_)};
    else
      m.countable = {el({{1, 1}}, spec_)};
    return m;
  }
  json descriptor() const override { return json{{"kind", "dropping"}}; }

 private:
  GroupSpec spec_;
};

// TWO that answers a different constraint set than ONE played.
class MisansweringTwo final : public TwoStrategy {
 public:
  TwoMove respond(std::size_t, const OneMove&, const PlayView&) override {
    TwoMove t;
    t.anchor = Element();
    t.answered_B = IndexSet{0};
    return t;
  }
  json descriptor() const override { return json{{"kind", "misanswer"}}; }
};

}  // namespace

TEST_CASE("scripted neighborhood play is legal and validates") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::NbdCovers, spec, Window::first(3), 4};
  ScriptedNbdOne one({IndexSet{0}, IndexSet{0, 1}});
  NbdStrategyTwo two(spec);
  const std::vector<Element> probes = {Element(), el({{0, 1}}, spec)};

  const Transcript t = play_game(game, one, two, 2, probes, 5);
  CHECK(t.innings.size() == 2);
  CHECK(t.summary.at("status") == "truncated");
  CHECK(t.header.at("requestedInnings") == 2);

  const ValidationReport report = validate_transcript(t);
  CHECK(report.ok());
  CHECK(report.checks > 0);

  // Identity probe is covered at the rank-0 innings.
  const auto hits = probe_coverage(t, Element(), spec);
  CHECK(!hits.empty());
  CHECK(hits.front() == 0);
}

TEST_CASE("transcripts round-trip through jsonl") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::NbdCovers, spec, Window::first(3), 4};
  ScriptedNbdOne one({IndexSet{0}, IndexSet{1}});
  NbdStrategyTwo two(spec);
  const Transcript t =
      play_game(game, one, two, 2, {el({{1, 1}}, spec)}, 9);

  const std::string text = t.to_jsonl();
  const Transcript back = Transcript::parse_jsonl(text);
  CHECK(back.to_jsonl() == text);
  CHECK(back.innings.size() == t.innings.size());

  CHECK_THROWS_AS(Transcript::parse_jsonl("{\"type\":\"inning\"}\n"),
                  ConfigError);
  CHECK_THROWS_AS(Transcript::parse_jsonl("not json\n"), ConfigError);
}

TEST_CASE("monotonicity fault is captured with inning and actor") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::CountableOne, spec, Window::first(3), 8};
  DroppingOne one(spec);
  BookkeepingTwo two;

  const Transcript t =
      play_game(game, one, two, 4, {}, 0, FaultPolicy::Capture);
  CHECK(t.summary.at("status") == "fault");
  CHECK(t.summary.at("fault").at("inning") == 1);
  CHECK(t.summary.at("fault").at("actor") == "one");
  CHECK(t.innings.size() == 1);  // the faulting inning is not recorded

  // The same play under the throwing policy raises.
  DroppingOne one2(spec);
  BookkeepingTwo two2;
  CHECK_THROWS_AS(play_game(game, one2, two2, 4, {}, 0), LegalityError);
}

TEST_CASE("cheating TWO is caught by the referee") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::NbdCovers, spec, Window::first(3), 4};
  ScriptedNbdOne one({IndexSet{1}});
  MisansweringTwo two;
  const Transcript t =
      play_game(game, one, two, 1, {}, 0, FaultPolicy::Capture);
  CHECK(t.summary.at("status") == "fault");
  CHECK(t.summary.at("fault").at("actor") == "two");
}

TEST_CASE("probes must stay inside the window") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::NbdCovers, spec, Window::first(2), 4};
  ScriptedNbdOne one({IndexSet{0}});
  NbdStrategyTwo two(spec);
  CHECK_THROWS_AS(play_game(game, one, two, 1, {el({{7, 1}}, spec)}, 0),
                  ConfigError);
  ScriptedNbdOne one2({IndexSet{0}});
  NbdStrategyTwo two2(spec);
  CHECK_THROWS_AS(play_game(game, one2, two2, 9, {}, 0), ConfigError);
}

TEST_CASE("tampered transcripts yield named violations") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::NbdCovers, spec, Window::first(3), 4};
  ScriptedNbdOne one({IndexSet{0}, IndexSet{0, 1}});
  NbdStrategyTwo two(spec);
  Transcript t = play_game(game, one, two, 2, {Element()}, 5);

  auto has_rule = [](const ValidationReport& r, const std::string& rule) {
    for (const Violation& v : r.violations)
      if (v.rule == rule) return true;
    return false;
  };

  SUBCASE("answered constraint set changed") {
    t.innings[1].two["B"] = IndexSet{0}.to_json();
    CHECK(has_rule(validate_transcript(t), "two-answers-one"));
  }
  SUBCASE("inning renumbered") {
    t.innings[1].inning = 7;
    CHECK(has_rule(validate_transcript(t), "inning-numbering"));
  }
  SUBCASE("constraint set moved off-window") {
    t.innings[0].one["B"] = IndexSet{9}.to_json();
    const ValidationReport r = validate_transcript(t);
    CHECK(!r.ok());
    CHECK(has_rule(r, "one-window"));
  }
  SUBCASE("coverage summary miscounted") {
    t.summary["probeCoverage"][Element().to_json().dump()] = json::array();
    CHECK(has_rule(validate_transcript(t), "summary-coverage"));
  }
  SUBCASE("untouched transcript has no violations") {
    CHECK(validate_transcript(t).ok());
  }
}

TEST_CASE("countable-one selection legality") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::CountableOne, spec, Window::first(3), 8};
  ScriptedCountableOne one(IndexSet{0, 1}, 2, 1, spec);
  FirstPickTwo two;
  Transcript t = play_game(game, one, two, 3, {}, 0);
  CHECK(t.summary.at("status") == "truncated");
  CHECK(validate_transcript(t).ok());

  // Tamper: claim TWO picked something never offered.
  t.innings[0].two["b"] = el({{2, 5}}, spec).to_json();
  bool found = false;
  for (const Violation& v : validate_transcript(t).violations)
    found = found || v.rule == "two-in-offer";
  CHECK(found);
}

TEST_CASE("open-cover play validates with oracle replay") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::OpenCovers, spec, Window::first(2), 16};
  const json one_desc{{"kind", "randomCover"},
                      {"seed", 12},
                      {"maxPins", 2},
                      {"pool", json::array({0, 1})}};
  auto one = make_one_strategy(one_desc, game);
  SigmaOOTwo two(spec);
  const Transcript t = play_game(game, *one, two, 8, {Element()}, 12);

  // Structural validation plus full oracle replay from the descriptor.
  const ValidationReport replayed =
      validate_transcript(t, descriptor_rebuilder());
  CHECK(replayed.ok());

  // Tampering with a played member breaks the replayed oracle equality.
  Transcript bad = t;
  bad.innings[0].two["witness"] = el({{0, 2}}, spec).to_json();
  bool found = false;
  for (const Violation& v :
       validate_transcript(bad, descriptor_rebuilder()).violations)
    found = found || v.rule == "two-oracle-output" || v.rule == "two-witness";
  CHECK(found);
}

TEST_CASE("header records strategies and probes") {
  const GroupSpec spec = ints();
  const GameSpec game{GameKind::NbdCovers, spec, Window::first(2), 2};
  ScriptedNbdOne one({IndexSet{0}});
  ScriptedCosetTwo two(el({{0, 1}}, spec));
  const Transcript t = play_game(game, one, two, 1, {Element()}, 3);
  CHECK(t.header.at("one").at("kind") == "scriptedNbd");
  CHECK(t.header.at("two").at("kind") == "scriptedCoset");
  CHECK(t.header.at("seed") == 3);
  CHECK(t.header.at("probes").size() == 1);
  CHECK(t.header.at("game").at("kind") == "nbd-covers");
}
