#include "selgames/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace selgames {

std::string game_kind_name(GameKind k) {
  switch (k) {
    case GameKind::NbdCovers:
      return "nbd-covers";
    case GameKind::OpenCovers:
      return "open-covers";
    case GameKind::CountableOne:
      return "countable-one";
  }
  return "?";
}

GameKind game_kind_from_name(const std::string& name) {
  if (name == "nbd-covers") return GameKind::NbdCovers;
  if (name == "open-covers") return GameKind::OpenCovers;
  if (name == "countable-one") return GameKind::CountableOne;
  throw ConfigError("unknown game kind: " + name);
}

json GameSpec::to_json() const {
  return json{{"kind", game_kind_name(kind)},
              {"group", group.to_json()},
              {"window", window.to_json()},
              {"inningCap", inning_cap}};
}

GameSpec GameSpec::from_json(const json& j) {
  GameSpec s{game_kind_from_name(j.at("kind").get<std::string>()),
             GroupSpec::from_json(j.at("group")),
             Window::from_json(j.at("window")),
             j.at("inningCap").get<std::size_t>()};
  if (s.inning_cap < 1) throw ConfigError("inning cap must be at least 1");
  return s;
}

json OneMove::to_json() const {
  if (nbd.has_value()) return nbd->to_json();
  if (oracle.has_value()) {
    json j = oracle->descriptor();
    j["type"] = "coverOracle";
    return j;
  }
  if (countable.has_value()) {
    json members = json::array();
    for (const Element& e : *countable) members.push_back(e.to_json());
    return json{{"type", "countableSet"}, {"members", std::move(members)}};
  }
  return json{{"type", "empty"}};
}

json TwoMove::to_json() const {
  if (anchor.has_value()) {
    return json{{"type", "coset"},
                {"anchor", anchor->to_json()},
                {"B", answered_B.value_or(IndexSet{}).to_json()}};
  }
  if (played.has_value()) {
    json j = played->to_json();
    if (witness.has_value()) j["witness"] = witness->to_json();
    return j;
  }
  if (pick.has_value()) return json{{"type", "pick"}, {"b", pick->to_json()}};
  return json{{"type", "empty"}};
}

json Inning::to_json() const {
  return json{{"type", "inning"},
              {"inning", inning},
              {"one", one},
              {"two", two},
              {"instrumentation", instrumentation},
              {"windowSnapshot", window_snapshot}};
}

Inning Inning::from_json(const json& j) {
  Inning in;
  in.inning = j.at("inning").get<std::size_t>();
  in.one = j.at("one");
  in.two = j.at("two");
  in.instrumentation = j.value("instrumentation", json::object());
  in.window_snapshot = j.value("windowSnapshot", json::array());
  return in;
}

std::string Transcript::to_jsonl() const {
  std::ostringstream out;
  out << header.dump() << "\n";
  for (const Inning& in : innings) out << in.to_json().dump() << "\n";
  if (!summary.is_null()) out << summary.dump() << "\n";
  return out.str();
}

Transcript Transcript::parse_jsonl(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  bool saw_summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("malformed transcript line: ") + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      if (saw_header) throw ConfigError("duplicate transcript header");
      t.header = std::move(j);
      saw_header = true;
    } else if (type == "inning") {
      if (!saw_header) throw ConfigError("inning record before header");
      if (saw_summary) throw ConfigError("inning record after summary");
      t.innings.push_back(Inning::from_json(j));
    } else if (type == "summary") {
      if (saw_summary) throw ConfigError("duplicate transcript summary");
      t.summary = std::move(j);
      saw_summary = true;
    } else {
      throw ConfigError("unknown transcript record type: " + type);
    }
  }
  if (!saw_header) throw ConfigError("transcript has no header");
  return t;
}

// ---------------------------------------------------------------------------
// Legality

namespace {

void check_one_legal(const GameSpec& spec, std::size_t inning,
                     const OneMove& om, const std::vector<Inning>& history) {
  switch (spec.kind) {
    case GameKind::NbdCovers: {
      if (!om.nbd.has_value())
        throw LegalityError(static_cast<int>(inning), "one", "one-move-shape",
                            "move is not a neighborhood cover");
      if (!spec.window.covers(om.nbd->subgroup.constraint_set))
        throw LegalityError(static_cast<int>(inning), "one", "one-window",
                            "constraint set leaves the window");
      return;
    }
    case GameKind::OpenCovers: {
      if (!om.oracle.has_value() || !om.oracle->valid())
        throw LegalityError(static_cast<int>(inning), "one", "one-move-shape",
                            "move is not a cover oracle");
      return;
    }
    case GameKind::CountableOne: {
      if (!om.countable.has_value() || om.countable->empty())
        throw LegalityError(static_cast<int>(inning), "one", "one-move-shape",
                            "offered countable set is empty");
      for (const Element& e : *om.countable)
        if (!spec.window.covers(e.support()))
          throw LegalityError(static_cast<int>(inning), "one", "one-window",
                              "offered member leaves the window");
      if (!history.empty()) {
        // Monotonicity against the previous offer. Sets are keyed by dumped
        // text: json's own operator< is not a strict weak ordering.
        std::set<std::string> cur;
        for (const Element& e : *om.countable) cur.insert(e.to_json().dump());
        for (const auto& m : history.back().one.at("members"))
          if (!cur.contains(m.dump()))
            throw LegalityError(static_cast<int>(inning), "one", "one-monotone",
                                "offered set dropped an earlier member");
      }
      return;
    }
  }
}

void check_two_legal(const GameSpec& spec, std::size_t inning,
                     const OneMove& om, const TwoMove& tm) {
  switch (spec.kind) {
    case GameKind::NbdCovers: {
      if (!tm.anchor.has_value() || !tm.answered_B.has_value())
        throw LegalityError(static_cast<int>(inning), "two", "two-move-shape",
                            "move is not a coset");
      if (!(*tm.answered_B == om.nbd->subgroup.constraint_set))
        throw LegalityError(static_cast<int>(inning), "two", "two-answers-one",
                            "coset does not answer ONE's neighborhood");
      if (!spec.window.covers(tm.anchor->support()))
        throw LegalityError(static_cast<int>(inning), "two", "two-window",
                            "coset anchor leaves the window");
      return;
    }
    case GameKind::OpenCovers: {
      if (!tm.played.has_value() || !tm.witness.has_value())
        throw LegalityError(static_cast<int>(inning), "two", "two-move-shape",
                            "move is not a witnessed cover member");
      BasicOpen expected;
      try {
        expected = om.oracle->pick(*tm.witness, spec.group);
      } catch (const ContractError& e) {
        throw LegalityError(static_cast<int>(inning), "one",
                            "one-oracle-contract", e.what());
      }
      if (!(expected == *tm.played))
        throw LegalityError(static_cast<int>(inning), "two", "two-oracle-output",
                            "move is not the oracle's output at the witness");
      return;
    }
    case GameKind::CountableOne: {
      if (!tm.pick.has_value())
        throw LegalityError(static_cast<int>(inning), "two", "two-move-shape",
                            "move is not a selection");
      if (std::find(om.countable->begin(), om.countable->end(), *tm.pick) ==
          om.countable->end())
        throw LegalityError(static_cast<int>(inning), "two", "two-in-offer",
                            "selection is not in ONE's offered set");
      return;
    }
  }
}

bool two_move_covers(const json& two, const Element& probe,
                     const GroupSpec& spec) {
  const std::string type = two.value("type", "");
  if (type == "coset") {
    const Element anchor = Element::from_json(two.at("anchor"), spec);
    const IndexSet B = IndexSet::from_json(two.at("B"));
    return coset_equal(probe, anchor, B, spec);
  }
  if (type == "basicOpen")
    return BasicOpen::from_json(two).contains(probe, spec);
  if (type == "pick")
    return Element::from_json(two.at("b"), spec) == probe;
  return false;
}

json coverage_map(const std::vector<Inning>& innings,
                  const std::vector<Element>& probes, const GroupSpec& spec) {
  json cov = json::object();
  for (const Element& p : probes) {
    json hits = json::array();
    for (const Inning& in : innings)
      if (two_move_covers(in.two, p, spec)) hits.push_back(in.inning);
    cov[p.to_json().dump()] = std::move(hits);
  }
  return cov;
}

}  // namespace

Transcript play_game(const GameSpec& spec, OneStrategy& one, TwoStrategy& two,
                     std::size_t innings, const std::vector<Element>& probes,
                     std::uint64_t seed, FaultPolicy policy) {
  if (innings < 1 || innings > spec.inning_cap)
    throw ConfigError("innings must be between 1 and the inning cap");
  for (const Element& p : probes)
    if (!spec.window.covers(p.support()))
      throw ConfigError("probe leaves the window");

  Transcript t;
  json probes_json = json::array();
  for (const Element& p : probes) probes_json.push_back(p.to_json());
  t.header = json{{"type", "header"},
                  {"game", spec.to_json()},
                  {"one", one.descriptor()},
                  {"two", two.descriptor()},
                  {"seed", seed},
                  {"probes", std::move(probes_json)},
                  {"requestedInnings", innings}};

  try {
    for (std::size_t k = 0; k < innings; ++k) {
      PlayView view{spec, t.innings};
      OneMove om = one.move(k, view);
      check_one_legal(spec, k, om, t.innings);
      TwoMove tm;
      try {
        tm = two.respond(k, om, view);
      } catch (const ContractError& e) {
        // The only contract surface inside a play is ONE's oracle.
        throw LegalityError(static_cast<int>(k), "one", "one-oracle-contract",
                            e.what());
      }
      check_two_legal(spec, k, om, tm);
      Inning in;
      in.inning = k;
      in.one = om.to_json();
      in.two = tm.to_json();
      in.instrumentation = tm.instrumentation;
      in.window_snapshot = spec.window.to_json();
      t.innings.push_back(std::move(in));
    }
    t.summary = json{{"type", "summary"},
                     {"status", "truncated"},
                     {"inningsPlayed", t.innings.size()},
                     {"probeCoverage", coverage_map(t.innings, probes,
                                                    spec.group)}};
  } catch (const LegalityError& e) {
    if (policy == FaultPolicy::Throw) throw;
    t.summary = json{{"type", "summary"},
                     {"status", "fault"},
                     {"inningsPlayed", t.innings.size()},
                     {"fault", json{{"inning", e.inning()},
                                    {"actor", e.actor()},
                                    {"rule", e.rule()}}},
                     {"probeCoverage", coverage_map(t.innings, probes,
                                                    spec.group)}};
  }
  return t;
}

std::vector<std::size_t> probe_coverage(const Transcript& t,
                                        const Element& probe,
                                        const GroupSpec& spec) {
  std::vector<std::size_t> hits;
  for (const Inning& in : t.innings)
    if (two_move_covers(in.two, probe, spec)) hits.push_back(in.inning);
  return hits;
}

// ---------------------------------------------------------------------------
// Offline validation

json ValidationReport::to_json() const {
  json v = json::array();
  for (const Violation& violation : violations) {
    json j{{"rule", violation.rule}, {"details", violation.details}};
    if (violation.inning.has_value()) j["inning"] = *violation.inning;
    v.push_back(std::move(j));
  }
  return json{{"checks", checks}, {"violations", std::move(v)}};
}

namespace {

struct Checker {
  ValidationReport report;

  void fail(std::string rule, std::optional<std::size_t> inning,
            std::string details) {
    report.violations.push_back(
        Violation{std::move(rule), inning, std::move(details)});
  }
  void check(bool ok, const char* rule, std::optional<std::size_t> inning,
             const std::string& details) {
    ++report.checks;
    if (!ok) fail(rule, inning, details);
  }
};

// The neighborhood strategy's instrumented claims, phrased against the
// refined monotone constraint sets C_n and ONE's actual move B_n. The
// tracked sequence is y_n = probe restricted to C_n.
void check_claims(Checker& ck, const GroupSpec& group,
                  const std::vector<Element>& probes,
                  const std::vector<IndexSet>& one_B,
                  const std::vector<IndexSet>& refined_C) {
  for (const Element& probe : probes) {
    std::vector<Element> y;
    y.reserve(refined_C.size());
    for (const IndexSet& C : refined_C) y.push_back(restrict_to(probe, C));
    for (std::size_t n = 0; n < y.size(); ++n) {
      ck.check(y[n].support().subset_of(refined_C[n]),
               "claim1-representative", n,
               "tracked representative must be supported in the refined set");
      ck.check(coset_inside_coset(probe, refined_C[n], y[n], one_B[n], group),
               "claim1-containment", n,
               "refined coset must sit inside a representative's coset of "
               "ONE's move");
      if (n + 1 < y.size())
        ck.check(coset_inside_coset(y[n + 1], refined_C[n + 1], y[n],
                                    refined_C[n], group),
                 "claim2-nesting", n,
                 "tracked cosets must be decreasing");
      if (n + 1 < y.size())
        ck.check(y[n].support().subset_of(y[n + 1].support()),
                 "claim3-support-monotone", n,
                 "tracked supports must be non-decreasing");
      ck.check(y[n].support().subset_of(probe.support()),
               "claim4-support-bounded", n,
               "tracked support must stay inside the probe's support");
    }
    // Stabilization: once the support settles on a tail, so does y itself.
    std::size_t settle = 0;
    for (std::size_t n = 1; n < y.size(); ++n)
      if (!(y[n].support() == y[n - 1].support())) settle = n;
    for (std::size_t n = settle; n + 1 < y.size(); ++n)
      ck.check(y[n] == y[n + 1], "stabilization", n,
               "tracked representative must be constant once its support "
               "settles");
  }
}

}  // namespace

ValidationReport validate_transcript(const Transcript& t,
                                     const OneRebuilder& rebuild) {
  Checker ck;
  GameSpec spec{GameKind::NbdCovers, GroupSpec(ComponentGroup::integers(),
                                               "omega", Track::Product),
                Window(), 1};
  try {
    spec = GameSpec::from_json(t.header.at("game"));
  } catch (const std::exception& e) {
    ck.fail("header", std::nullopt, std::string("bad game spec: ") + e.what());
    return ck.report;
  }
  std::vector<Element> probes;
  if (t.header.contains("probes"))
    for (const auto& pj : t.header.at("probes"))
      probes.push_back(Element::from_json(pj, spec.group));

  // Contiguous inning numbering.
  for (std::size_t k = 0; k < t.innings.size(); ++k)
    ck.check(t.innings[k].inning == k, "inning-numbering", k,
             "inning records must be contiguous from zero");

  // Optional oracle replay for the open game.
  std::unique_ptr<OneStrategy> replayed;
  if (rebuild && t.header.contains("one") &&
      t.header.at("one").value("reconstructible", false))
    replayed = rebuild(t.header.at("one"), spec);

  std::vector<Inning> prefix;
  std::vector<IndexSet> one_B;
  std::vector<IndexSet> refined_C;
  std::set<std::string> prev_members;
  for (std::size_t k = 0; k < t.innings.size(); ++k) {
    const Inning& in = t.innings[k];
    std::optional<OneMove> replayed_move;
    if (replayed) {
      PlayView view{spec, prefix};
      replayed_move = replayed->move(k, view);
    }
    switch (spec.kind) {
      case GameKind::NbdCovers: {
        IndexSet B;
        try {
          B = IndexSet::from_json(in.one.at("B"));
        } catch (const std::exception& e) {
          ck.fail("one-move-shape", k, e.what());
          break;
        }
        ck.check(B.subset_of(spec.window.index_set()), "one-window", k,
                 "constraint set leaves the window");
        if (replayed_move.has_value() && replayed_move->nbd.has_value())
          ck.check(replayed_move->nbd->subgroup.constraint_set == B,
                   "one-replay", k,
                   "recorded move differs from the rebuilt strategy's move");
        if (in.two.value("type", "") != "coset") {
          ck.fail("two-move-shape", k, "expected a coset move");
          break;
        }
        const Element anchor =
            Element::from_json(in.two.at("anchor"), spec.group);
        const IndexSet answered = IndexSet::from_json(in.two.at("B"));
        ck.check(answered == B, "two-answers-one", k,
                 "coset must answer ONE's neighborhood");
        ck.check(spec.window.covers(anchor.support()), "two-window", k,
                 "coset anchor leaves the window");
        one_B.push_back(B);
        // Instrumentation consistency: the refined set is the running
        // union of ONE's constraint sets.
        IndexSet expect_C = refined_C.empty() ? B
                                              : refined_C.back().union_with(B);
        if (in.instrumentation.contains("refinedB")) {
          const IndexSet recorded =
              IndexSet::from_json(in.instrumentation.at("refinedB"));
          ck.check(recorded == expect_C, "instrumentation-refined-set", k,
                   "recorded refined constraint set is not the running "
                   "union");
        }
        refined_C.push_back(std::move(expect_C));
        break;
      }
      case GameKind::OpenCovers: {
        if (in.two.value("type", "") != "basicOpen" ||
            !in.two.contains("witness")) {
          ck.fail("two-move-shape", k, "expected a witnessed basic open");
          break;
        }
        BasicOpen played = BasicOpen::from_json(in.two);
        const Element witness =
            Element::from_json(in.two.at("witness"), spec.group);
        ck.check(played.contains(witness, spec.group), "two-witness", k,
                 "witness must lie in the played member");
        if (in.one.contains("uniformBound")) {
          const IndexSet bound = IndexSet::from_json(in.one.at("uniformBound"));
          ck.check(played.constrained_indices().subset_of(bound),
                   "two-within-bound", k,
                   "played member constrains indices beyond the declared "
                   "bound");
        }
        if (replayed_move.has_value() && replayed_move->oracle.has_value()) {
          try {
            const BasicOpen expected =
                replayed_move->oracle->pick(witness, spec.group);
            ck.check(expected == played, "two-oracle-output", k,
                     "played member is not the oracle's output at the "
                     "witness");
          } catch (const ContractError& e) {
            ck.fail("one-oracle-contract", k, e.what());
          }
        }
        break;
      }
      case GameKind::CountableOne: {
        if (!in.one.contains("members") || in.one.at("members").empty()) {
          ck.fail("one-move-shape", k, "offered countable set is empty");
          break;
        }
        std::set<std::string> members;
        for (const auto& m : in.one.at("members")) {
          members.insert(m.dump());
          const Element e = Element::from_json(m, spec.group);
          ck.check(spec.window.covers(e.support()), "one-window", k,
                   "offered member leaves the window");
        }
        for (const auto& m : prev_members)
          ck.check(members.contains(m), "one-monotone", k,
                   "offered set dropped an earlier member");
        prev_members = std::move(members);
        if (in.two.value("type", "") != "pick") {
          ck.fail("two-move-shape", k, "expected a selection move");
          break;
        }
        ck.check(prev_members.contains(in.two.at("b").dump()), "two-in-offer",
                 k, "selection is not in ONE's offered set");
        break;
      }
    }
    prefix.push_back(in);
  }

  if (spec.kind == GameKind::NbdCovers &&
      one_B.size() == t.innings.size() && !probes.empty())
    check_claims(ck, spec.group, probes, one_B, refined_C);

  // Summary coverage must match a recount from the inning records.
  if (t.summary.contains("probeCoverage")) {
    const json recount = coverage_map(t.innings, probes, spec.group);
    ck.check(t.summary.at("probeCoverage") == recount, "summary-coverage",
             std::nullopt,
             "summary coverage differs from a recount over the innings");
  }
  return ck.report;
}

}  // namespace selgames
