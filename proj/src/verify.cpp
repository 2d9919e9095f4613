#include "selgames/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>

#include "selgames/run_config.hpp"
#include "selgames/strategies.hpp"

namespace selgames {

json VerifyReport::to_json() const {
  json v = json::array();
  for (const Violation& violation : violations) {
    json j{{"rule", violation.rule}, {"details", violation.details}};
    if (violation.inning.has_value()) j["inning"] = *violation.inning;
    v.push_back(std::move(j));
  }
  return json{{"suite", suite},
              {"cases", cases},
              {"violations", std::move(v)},
              {"millis", millis}};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double millis() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }
};

void record(VerifyReport& report, bool ok, std::string rule,
            std::optional<std::size_t> inning, std::string details) {
  if (!ok)
    report.violations.push_back(
        Violation{std::move(rule), inning, std::move(details)});
}

ComponentGroup symmetric3_table() {
  // Permutations of three points in lexicographic order; composition acts
  // right-to-left.
  const std::array<std::array<Value, 3>, 6> perms = {{{0, 1, 2},
                                                      {0, 2, 1},
                                                      {1, 0, 2},
                                                      {1, 2, 0},
                                                      {2, 0, 1},
                                                      {2, 1, 0}}};
  auto index_of = [&](const std::array<Value, 3>& p) -> Value {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return static_cast<Value>(k);
    return -1;
  };
  std::vector<std::vector<Value>> table(6, std::vector<Value>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<Value, 3> c{};
      for (std::size_t i = 0; i < 3; ++i)
        c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a][b] = index_of(c);
    }
  return ComponentGroup::table(std::move(table));
}

Element random_element(std::mt19937_64& rng, const GroupSpec& spec,
                       const std::vector<Index>& indices,
                       std::size_t max_support, std::size_t max_rank) {
  std::vector<Index> pool = indices;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t support =
      std::min<std::size_t>(rng() % (max_support + 1), pool.size());
  std::vector<std::pair<Index, Value>> entries;
  for (std::size_t k = 0; k < support; ++k) {
    const ComponentGroup& g = spec.component(pool[k]);
    std::size_t rank = 1 + rng() % max_rank;
    if (g.order().has_value()) rank = 1 + rng() % (*g.order() - 1);
    entries.emplace_back(pool[k], g.value_at_rank(rank));
  }
  return Element::from_entries(std::move(entries), spec);
}

IndexSet random_subset(std::mt19937_64& rng,
                       const std::vector<Index>& indices) {
  std::vector<Index> out;
  for (Index i : indices)
    if (rng() % 2 == 0) out.push_back(i);
  return IndexSet::of(std::move(out));
}

std::string describe(const Element& e) { return e.to_json().dump(); }

}  // namespace

// ---------------------------------------------------------------------------
// group-axioms

VerifyReport verify_group_axioms(std::uint64_t seed,
                                 std::size_t cases_per_kind) {
  Timer timer;
  VerifyReport report;
  report.suite = "group-axioms";

  struct KindCase {
    const char* name;
    GroupSpec spec;
  };
  const std::vector<KindCase> kinds = {
      {"integers", GroupSpec(ComponentGroup::integers(), "omega1",
                             Track::Product)},
      {"cyclic2", GroupSpec(ComponentGroup::cyclic(2), "omega1",
                            Track::BoxGdelta)},
      {"cyclic6", GroupSpec(ComponentGroup::cyclic(6), "omega1",
                            Track::Product)},
      {"sym3", GroupSpec(symmetric3_table(), "omega1", Track::Product)},
  };
  const std::vector<Index> window = {0, 1, 2, 3, 4, 5, 6, 7};

  for (const auto& [name, spec] : kinds) {
    std::mt19937_64 rng(hash_combine(seed, std::hash<std::string>{}(name)));
    for (std::size_t c = 0; c < cases_per_kind; ++c) {
      ++report.cases;
      const Element a = random_element(rng, spec, window, 3, 5);
      const Element b = random_element(rng, spec, window, 3, 5);
      const Element x = random_element(rng, spec, window, 3, 5);
      const std::string tag = std::string(name) + " case " +
                              std::to_string(c);

      // Group axioms.
      record(report,
             group_op(group_op(a, b, spec), x, spec) ==
                 group_op(a, group_op(b, x, spec), spec),
             "associativity", std::nullopt, tag);
      record(report, group_op(a, Element(), spec) == a, "identity-right",
             std::nullopt, tag);
      record(report, group_op(Element(), a, spec) == a, "identity-left",
             std::nullopt, tag);
      record(report,
             group_op(a, group_inverse(a, spec), spec).is_identity(),
             "inverse-law", std::nullopt, tag);
      record(report, group_inverse(group_inverse(a, spec), spec) == a,
             "double-inverse", std::nullopt, tag);

      // Canonical form closure: no stored identity values.
      bool canonical = true;
      for (const auto& [i, v] : group_op(a, b, spec).entries())
        if (v == spec.component(i).identity()) canonical = false;
      record(report, canonical, "canonical-closure", std::nullopt, tag);

      // Restriction locality.
      const IndexSet C = random_subset(rng, window);
      record(report,
             restrict_to(group_op(a, b, spec), C) ==
                 group_op(restrict_to(a, C), restrict_to(b, C), spec),
             "restrict-locality", std::nullopt, tag);

      // Neighborhood subgroup laws.
      const IndexSet B = random_subset(rng, window);
      const NbdSubgroup U{B, false};
      std::vector<Index> off_B;
      for (Index i : window)
        if (!B.contains(i)) off_B.push_back(i);
      const Element u = restrict_to(a, IndexSet::of(off_B));
      const Element w = restrict_to(b, IndexSet::of(off_B));
      record(report, U.contains(u) && U.contains(w), "subgroup-sample",
             std::nullopt, tag);
      record(report, U.contains(group_op(u, w, spec)), "subgroup-closure",
             std::nullopt, tag);
      record(report, U.contains(group_inverse(u, spec)), "subgroup-symmetry",
             std::nullopt, tag);

      // Antitone law: a larger constraint set gives a smaller subgroup.
      const IndexSet B2 = B.union_with(random_subset(rng, window));
      record(report, !NbdSubgroup{B2, false}.contains(x) || U.contains(x),
             "antitone", std::nullopt, tag);

      // Coset partition and the three-way membership agreement.
      const bool same = coset_equal(a, b, B, spec);
      const bool member = BasicOpen::coset(b, B, spec).contains(a, spec);
      const bool algebra =
          U.contains(group_op(group_inverse(b, spec), a, spec));
      record(report, same == member && member == algebra,
             "coset-three-way", std::nullopt, tag);
      const Element z = group_op(restrict_to(a, B), u, spec);
      record(report, coset_equal(z, a, B, spec), "coset-member-form",
             std::nullopt, tag);
      if (!same)
        record(report, !coset_equal(z, b, B, spec), "coset-partition",
               std::nullopt, tag + " witness " + describe(z));
    }
  }

  // Disjoint-union composition: pairwise operations agree with the glued
  // spec across the seam.
  {
    std::mt19937_64 rng(hash_combine(seed, 0xd15));
    const GroupSpec left(ComponentGroup::cyclic(2), "omega1", Track::Product);
    const GroupSpec right(ComponentGroup::integers(), "omega1",
                          Track::Product);
    const Index offset = 4;
    const GroupSpec glued = disjoint_union(left, right, offset);
    const GroupSpec power = finite_power(left, 2, offset);
    const std::vector<Index> low = {0, 1, 2, 3};
    const std::vector<Index> high = {4, 5, 6, 7};
    for (std::size_t c = 0; c < std::min<std::size_t>(cases_per_kind, 2000);
         ++c) {
      ++report.cases;
      const Element al = random_element(rng, left, low, 2, 1);
      const Element ah0 = random_element(rng, right, low, 2, 4);
      // Shift the right factor's element above the seam.
      std::vector<std::pair<Index, Value>> shifted;
      for (const auto& [i, v] : ah0.entries())
        shifted.emplace_back(i + offset, v);
      const Element ah = Element::from_entries(shifted, glued);
      const Element bl = random_element(rng, left, low, 2, 1);
      const Element glued_a = group_op(al, ah, glued);
      const Element glued_sum = group_op(glued_a, bl, glued);
      record(report,
             restrict_to(glued_sum, IndexSet::of(low)) ==
                 group_op(al, bl, left),
             "disjoint-union-low", std::nullopt, "case " + std::to_string(c));
      record(report,
             restrict_to(glued_sum, IndexSet::of(high)) == ah,
             "disjoint-union-high", std::nullopt,
             "case " + std::to_string(c));
      record(report,
             group_op(al, bl, power) == group_op(al, bl, left),
             "finite-power-component", std::nullopt,
             "case " + std::to_string(c));
    }
  }

  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// lebesgue

namespace {

GroupSpec nth_small_spec(std::size_t i, Track track) {
  switch (i % 3) {
    case 0:
      return GroupSpec(ComponentGroup::integers(), "omega1", track);
    case 1:
      return GroupSpec(ComponentGroup::cyclic(2), "omega1", track);
    default:
      return GroupSpec(ComponentGroup::cyclic(6), "omega1", track);
  }
}

CoverOracle seeded_cover(std::uint64_t seed, std::size_t inning,
                         const GameSpec& game, std::size_t max_pins) {
  RandomCoverOne one(seed, game.window.index_set(), max_pins, game.group);
  std::vector<Inning> empty;
  PlayView view{game, empty};
  return *one.move(inning, view).oracle;
}

}  // namespace

VerifyReport verify_lebesgue_compact(std::uint64_t seed, std::size_t oracles) {
  Timer timer;
  VerifyReport report;
  report.suite = "lebesgue-compact";
  for (std::size_t i = 0; i < oracles; ++i) {
    ++report.cases;
    const GroupSpec spec = nth_small_spec(i, Track::Product);
    const Window window = Window::first(1 + static_cast<Index>(i % 4));
    const int stage = static_cast<int>(i % 3);
    const GameSpec game{GameKind::OpenCovers, spec, window, 64};
    const CoverOracle cover =
        seeded_cover(hash_combine(seed, i), i % 5, game, 2);
    const NbdSubgroup N = lebesgue_compact(cover, stage, window, spec);
    const std::string tag = "oracle " + std::to_string(i);

    for (const Element& x : enumerate_compact_piece(stage, window, spec)) {
      const BasicOpen member = cover.pick(x, spec);
      record(report, coset_inside_open(x, N.constraint_set, member, spec),
             "compact-absorption", std::nullopt,
             tag + " point " + describe(x));
      // Brute force on a denser enumeration: every element of x's coset
      // within the next stage must land in the chosen member.
      if (window.size() <= 3) {
        for (const Element& z :
             enumerate_compact_piece(stage + 1, window, spec))
          if (coset_equal(z, x, N.constraint_set, spec))
            record(report, member.contains(z, spec),
                   "compact-absorption-brute", std::nullopt,
                   tag + " point " + describe(x) + " versus " + describe(z));
      }
    }
  }
  report.millis = timer.millis();
  return report;
}

VerifyReport verify_lebesgue_pgroup(std::uint64_t seed, std::size_t oracles,
                                    std::size_t probes_per_oracle) {
  Timer timer;
  VerifyReport report;
  report.suite = "lebesgue-pgroup";
  for (std::size_t i = 0; i < oracles; ++i) {
    ++report.cases;
    const GroupSpec spec = nth_small_spec(i, Track::BoxGdelta);
    const Window window = Window::first(2 + static_cast<Index>(i % 3));
    const GameSpec game{GameKind::OpenCovers, spec, window, 64};
    const CoverOracle cover =
        seeded_cover(hash_combine(seed, i), i % 7, game, 3);
    const NbdSubgroup N = lebesgue_pgroup(cover);
    std::mt19937_64 rng(hash_combine(seed, 0xabc + i));
    const std::string tag = "oracle " + std::to_string(i);
    for (std::size_t p = 0; p < probes_per_oracle; ++p) {
      const Element x = random_element(rng, spec, window.indices(), 3, 4);
      const BasicOpen member = cover.pick(x, spec);
      record(report, coset_inside_open(x, N.constraint_set, member, spec),
             "pgroup-absorption", std::nullopt, tag + " probe " + describe(x));
      // Sampled members of x's coset stay inside.
      const Element y = random_element(rng, spec, window.indices(), 3, 4);
      std::vector<Index> off;
      for (Index idx : window.index_set())
        if (!N.constraint_set.contains(idx)) off.push_back(idx);
      const Element z = group_op(restrict_to(x, N.constraint_set),
                                 restrict_to(y, IndexSet::of(off)), spec);
      record(report, member.contains(z, spec), "pgroup-absorption-sample",
             std::nullopt, tag + " probe " + describe(x));
    }
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// claims / neighborhood game

namespace {

// Offline replica of the neighborhood strategy's bookkeeping: merged ranks
// and entry innings of every representative, recomputed from ONE's moves
// alone.
struct MergedEnumeration {
  std::map<Element, std::size_t> rank;
  std::map<Element, std::size_t> entry_inning;

  static MergedEnumeration replay(const std::vector<IndexSet>& refined,
                                  const GroupSpec& spec) {
    MergedEnumeration m;
    for (std::size_t n = 0; n < refined.size(); ++n)
      for (const Element& rep : CosetRepEnumerator::prefix(
               refined[n], spec, NbdStrategyTwo::view_length(n)))
        if (m.rank.emplace(rep, m.rank.size()).second)
          m.entry_inning.emplace(rep, n);
    return m;
  }
};

std::vector<IndexSet> one_constraint_sets(const Transcript& t) {
  std::vector<IndexSet> sets;
  for (const Inning& in : t.innings)
    sets.push_back(IndexSet::from_json(in.one.at("B")));
  return sets;
}

std::vector<IndexSet> running_union(const std::vector<IndexSet>& sets) {
  std::vector<IndexSet> out;
  IndexSet acc;
  for (const IndexSet& s : sets) {
    acc = acc.union_with(s);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

VerifyReport verify_nbd_game(std::uint64_t seed, std::size_t plays,
                             std::size_t innings) {
  Timer timer;
  VerifyReport report;
  report.suite = "claims";
  const OneRebuilder rebuild = descriptor_rebuilder();

  for (std::size_t i = 0; i < plays; ++i) {
    ++report.cases;
    const bool box = i % 2 == 0;
    const GroupSpec spec = box ? GroupSpec(ComponentGroup::cyclic(2),
                                           "omega1", Track::BoxGdelta)
                               : GroupSpec(ComponentGroup::integers(),
                                           "omega1", Track::Product);
    const Window window = Window::first(box ? 5 : 4);
    const IndexSet pool = box ? IndexSet{0, 1, 2, 3} : IndexSet{0, 1, 2};
    const GameSpec game{GameKind::NbdCovers, spec, window, innings};
    const std::uint64_t play_seed = hash_combine(seed, i);

    json one_desc;
    switch (i % 3) {
      case 0:
        one_desc = json{{"kind", "randomNbd"},
                        {"seed", play_seed},
                        {"growth", 1 + i % 2},
                        {"pool", pool.to_json()}};
        break;
      case 1:
        one_desc = json{{"kind", "shrinkingNbd"},
                        {"seed", play_seed},
                        {"pool", pool.to_json()}};
        break;
      default:
        one_desc = json{{"kind", "probeHunter"},
                        {"seed", play_seed},
                        {"pool", pool.to_json()},
                        {"step", 1}};
        break;
    }
    auto one = make_one_strategy(one_desc, game);
    NbdStrategyTwo two(spec);
    const std::vector<Element> probes = default_probes(spec, window, 1);
    const std::string tag = "play " + std::to_string(i);

    Transcript t;
    try {
      t = play_game(game, *one, two, innings, probes, play_seed);
    } catch (const std::exception& e) {
      record(report, false, "play-failed", std::nullopt,
             tag + ": " + e.what());
      continue;
    }

    // Full offline validation, instrumented claims included.
    const ValidationReport vr = validate_transcript(t, rebuild);
    for (const Violation& v : vr.violations)
      report.violations.push_back(
          Violation{v.rule, v.inning, tag + ": " + v.details});

    // Quantitative coverage: each probe must be hit at the first two
    // schedule innings of its stabilized representative's merged rank.
    const std::vector<IndexSet> refined =
        running_union(one_constraint_sets(t));
    const MergedEnumeration merged = MergedEnumeration::replay(refined, spec);
    for (const Element& probe : probes) {
      const Element target = restrict_to(probe, refined.back());
      const auto rank = merged.rank.find(target);
      if (rank == merged.rank.end()) {
        record(report, false, "coverage-rank-missing", std::nullopt,
               tag + " probe " + describe(probe));
        continue;
      }
      const std::size_t entry = merged.entry_inning.at(target);
      // Innings where the schedule selects this rank, from its entry on.
      std::vector<std::size_t> due;
      for (std::size_t j = 0; due.size() < 2; ++j) {
        const std::size_t n = PairingSchedule::pair(rank->second, j);
        if (n >= innings) break;
        if (n >= entry) due.push_back(n);
      }
      record(report, due.size() >= 2, "coverage-bound-horizon", std::nullopt,
             tag + " probe " + describe(probe) + " rank " +
                 std::to_string(rank->second));
      const std::vector<std::size_t> hits =
          probe_coverage(t, probe, spec);
      for (const std::size_t n : due)
        record(report,
               std::find(hits.begin(), hits.end(), n) != hits.end(),
               "coverage-at-schedule", n,
               tag + " probe " + describe(probe));
      record(report, hits.size() >= 2, "coverage-count", std::nullopt,
             tag + " probe " + describe(probe) + " hits " +
                 std::to_string(hits.size()));
    }
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// open-cover games

VerifyReport verify_oo_games(std::uint64_t seed, std::size_t plays,
                             std::size_t innings) {
  Timer timer;
  VerifyReport report;
  report.suite = "oo-games";
  const OneRebuilder rebuild = descriptor_rebuilder();

  for (std::size_t i = 0; i < plays; ++i) {
    ++report.cases;
    const bool sigma = i % 2 == 0;
    const std::uint64_t play_seed = hash_combine(seed, i);
    GroupSpec spec = sigma ? GroupSpec(i % 4 == 0
                                           ? ComponentGroup::integers()
                                           : ComponentGroup::cyclic(2),
                                       "omega1", Track::Product)
                           : GroupSpec(i % 4 == 1
                                           ? ComponentGroup::cyclic(6)
                                           : ComponentGroup::cyclic(2),
                                       "omega1", Track::BoxGdelta);
    const Window window =
        sigma ? Window::first(i % 4 == 0 ? 2 : 3) : Window::first(4);
    const GameSpec game{GameKind::OpenCovers, spec, window, innings};

    json one_desc;
    if (i % 3 == 2 && !sigma)
      one_desc = json{{"kind", "probeHunterCover"},
                      {"seed", play_seed},
                      {"pool", window.to_json()},
                      {"maxPins", 1}};
    else if (i % 5 == 3)
      one_desc = json{{"kind", "greedyShrinkCover"},
                      {"pool", window.to_json()}};
    else
      one_desc = json{{"kind", "randomCover"},
                      {"seed", play_seed},
                      {"pool", window.to_json()},
                      {"maxPins", 2}};
    auto one = make_one_strategy(one_desc, game);
    auto two = make_two_strategy(json{{"kind", sigma ? "sigmaOO" : "pgroupOO"}},
                                 game);
    // Probes: small-support, small-value elements (sigma: members of the
    // stage-2 piece; box: the default window sample).
    std::vector<Element> probes = default_probes(spec, window, 1);
    if (sigma) {
      probes.clear();
      for (const Element& x : enumerate_compact_piece(2, window, spec))
        if (CosetRepEnumerator::rank_of(x, window.index_set(), spec, 7)
                .has_value())
          probes.push_back(x);
    }
    const std::string tag = std::string(sigma ? "sigma" : "pgroup") +
                            " play " + std::to_string(i);

    Transcript t;
    try {
      t = play_game(game, *one, *two, innings, probes, play_seed);
    } catch (const std::exception& e) {
      record(report, false, "play-failed", std::nullopt,
             tag + ": " + e.what());
      continue;
    }
    const ValidationReport vr = validate_transcript(t, rebuild);
    for (const Violation& v : vr.violations)
      report.violations.push_back(
          Violation{v.rule, v.inning, tag + ": " + v.details});

    // Per-inning containment: the played member absorbs the witness's
    // neighborhood coset.
    for (const Inning& in : t.innings) {
      const Element witness =
          Element::from_json(in.two.at("witness"), spec);
      const BasicOpen played = BasicOpen::from_json(in.two);
      const NbdSubgroup N =
          NbdSubgroup::from_json(in.instrumentation.at("neighborhood"));
      record(report,
             coset_inside_open(witness, N.constraint_set, played, spec),
             "containment-transfer", in.inning, tag);
    }

    for (const Element& probe : probes)
      record(report, !probe_coverage(t, probe, spec).empty(),
             "oo-coverage", std::nullopt, tag + " probe " + describe(probe));
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// counter-play

VerifyReport verify_counterplay(std::uint64_t seed, std::size_t innings) {
  Timer timer;
  VerifyReport report;
  report.suite = "counterplay";
  const OneRebuilder rebuild = descriptor_rebuilder();

  const std::vector<json> families = {
      json{{"kind", "constantCover"}},
      json{{"kind", "greedyShrinkCover"}},
      json{{"kind", "probeHunterCover"}, {"maxPins", 1}},
  };
  for (std::size_t g = 0; g < 2; ++g) {
    const GroupSpec spec = g == 0 ? GroupSpec(ComponentGroup::cyclic(2),
                                              "omega1", Track::Product)
                                  : GroupSpec(ComponentGroup::integers(),
                                              "omega1", Track::Product);
    const Window window = Window::first(g == 0 ? 3 : 1);
    const GameSpec game{GameKind::OpenCovers, spec, window, innings};
    const std::vector<Element> probes =
        enumerate_compact_piece(2, window, spec);
    for (std::size_t f = 0; f < families.size(); ++f) {
      ++report.cases;
      json one_desc = families[f];
      one_desc["pool"] = window.to_json();
      if (one_desc.at("kind") == "probeHunterCover")
        one_desc["seed"] = hash_combine(seed, g * 7 + f);
      auto one = make_one_strategy(one_desc, game);
      CounterPlayTwo two(spec);
      const std::string tag = "family " +
                              one_desc.at("kind").get<std::string>() +
                              " group " + std::to_string(g);
      Transcript t;
      try {
        t = play_game(game, *one, two, innings, probes,
                      hash_combine(seed, f));
      } catch (const std::exception& e) {
        record(report, false, "play-failed", std::nullopt,
               tag + ": " + e.what());
        continue;
      }
      // The transcript must validate as a legal play of the adversary:
      // every selected member replays as the oracle's output.
      const ValidationReport vr = validate_transcript(t, rebuild);
      for (const Violation& v : vr.violations)
        report.violations.push_back(
            Violation{v.rule, v.inning, tag + ": " + v.details});
      for (const Element& probe : probes)
        record(report, !probe_coverage(t, probe, spec).empty(),
               "counterplay-coverage", std::nullopt,
               tag + " probe " + describe(probe));
    }
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// schedule fairness

VerifyReport verify_schedule(std::uint64_t seed, std::size_t sequences,
                             std::size_t max_rank, std::size_t max_repeats) {
  Timer timer;
  VerifyReport report;
  report.suite = "schedule";
  const std::size_t innings =
      PairingSchedule::bound(max_rank, max_repeats) + 1;

  for (std::size_t i = 0; i < sequences; ++i) {
    ++report.cases;
    const GroupSpec spec = i % 2 == 0
                               ? GroupSpec(ComponentGroup::cyclic(2),
                                           "omega1", Track::BoxGdelta)
                               : GroupSpec(ComponentGroup::integers(),
                                           "omega1", Track::Product);
    const Window window = Window::first(i % 2 == 0 ? 6 : 3);
    const GameSpec game{GameKind::CountableOne, spec, window, innings};
    const std::uint64_t play_seed = hash_combine(seed, i);
    RandomCountableOne one(play_seed, window.index_set(), 1 + i % 2,
                           max_rank + 8, spec);
    BookkeepingTwo two;
    const std::string tag = "sequence " + std::to_string(i);
    Transcript t;
    try {
      t = play_game(game, one, two, innings, {}, play_seed);
    } catch (const std::exception& e) {
      record(report, false, "play-failed", std::nullopt,
             tag + ": " + e.what());
      continue;
    }

    // Merged ranks recomputed from ONE's offers; then the exact fairness
    // bound: the rank-r member picked at least m times by bound(r, m).
    // Keys are dumped strings: json's operator< is not a usable ordering.
    std::map<std::string, std::size_t> rank_of;
    std::vector<json> by_rank;
    std::vector<json> picks;
    for (const Inning& in : t.innings) {
      for (const auto& m : in.one.at("members"))
        if (rank_of.emplace(m.dump(), by_rank.size()).second)
          by_rank.push_back(m);
      picks.push_back(in.two.at("b"));
    }
    for (std::size_t r = 0; r <= max_rank; ++r) {
      if (r >= by_rank.size()) {
        record(report, false, "schedule-rank-unpopulated", std::nullopt,
               tag + " rank " + std::to_string(r));
        break;
      }
      // Entry-by-rank-inning precondition, guaranteed by the growing
      // offers: the rank-r member appears once ranks 0..r are assigned,
      // which happens by inning r.
      for (std::size_t m = 1; m <= max_repeats; ++m) {
        const std::size_t horizon = PairingSchedule::bound(r, m);
        std::size_t count = 0;
        for (std::size_t n = 0; n <= horizon && n < picks.size(); ++n)
          if (picks[n] == by_rank[r]) ++count;
        record(report, count >= m, "schedule-fairness", std::nullopt,
               tag + " rank " + std::to_string(r) + " repeats " +
                   std::to_string(m) + " by inning " +
                   std::to_string(horizon) + " got " + std::to_string(count));
      }
    }
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// selector

VerifyReport verify_selector(std::uint64_t seed, std::size_t max_rank) {
  Timer timer;
  VerifyReport report;
  report.suite = "selector";

  for (std::size_t g = 0; g < 2; ++g) {
    const bool cyclic = g == 0;
    const GroupSpec spec = cyclic ? GroupSpec(ComponentGroup::cyclic(2),
                                              "omega1", Track::BoxGdelta)
                                  : GroupSpec(ComponentGroup::integers(),
                                              "omega1", Track::Product);
    const std::vector<Index> window = cyclic
                                          ? std::vector<Index>{0, 1, 2, 3, 4, 5}
                                          : std::vector<Index>{0, 1};
    std::mt19937_64 rng(hash_combine(seed, g));
    std::vector<NbdSubgroup> neighborhoods;
    IndexSet C;
    for (std::size_t n = 0; n <= max_rank; ++n) {
      IndexSet B = random_subset(rng, window);
      if (B.empty()) B = IndexSet{window[n % window.size()]};
      C = C.union_with(B);
      neighborhoods.push_back(NbdSubgroup{B, cyclic});
    }
    const std::vector<Element> selection =
        rothberger_selector(neighborhoods, spec, max_rank + 1);

    // Probes supported in C, with their enumeration ranks: exhaustive for
    // the finite components, sampled for the integers.
    CosetRepEnumerator reps(C, spec);
    for (std::size_t r = 0; r <= max_rank; ++r) {
      auto probe = reps.next();
      if (!probe.has_value()) break;
      if (!cyclic && r % 7 != 0 && r > 10) continue;
      ++report.cases;
      std::optional<std::size_t> covered_at;
      for (std::size_t m = 0; m <= r; ++m) {
        if (coset_equal(*probe, selection[m],
                        neighborhoods[m].constraint_set, spec)) {
          covered_at = m;
          break;
        }
      }
      record(report, covered_at.has_value() && *covered_at <= r,
             "selector-coverage", std::nullopt,
             (cyclic ? "cyclic" : "integers") + std::string(" rank ") +
                 std::to_string(r));
    }
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// window invariance

VerifyReport verify_window_invariance(std::uint64_t seed, std::size_t runs) {
  Timer timer;
  VerifyReport report;
  report.suite = "window-invariance";

  for (std::size_t i = 0; i < runs; ++i) {
    ++report.cases;
    const std::uint64_t play_seed = hash_combine(seed, i);
    // Scenario rotation across game kinds and tracks; every pool and
    // probe set is pinned to the base window so the enlarged run differs
    // only in untouched indices.
    RunConfig base;
    const std::size_t scenario = i % 5;
    json config;
    switch (scenario) {
      case 0:
        config = json{{"game", "nbd-covers"},
                      {"track", "product"},
                      {"group", json{{"component", json{{"kind", "integers"}}}}},
                      {"window", 4},
                      {"innings", 16},
                      {"one", json{{"kind", "randomNbd"},
                                   {"seed", play_seed},
                                   {"growth", 1},
                                   {"pool", json::array({0, 1, 2})}}},
                      {"two", json{{"kind", "nbd"}}},
                      {"seed", play_seed}};
        break;
      case 1:
        config = json{{"game", "nbd-covers"},
                      {"track", "box-gdelta"},
                      {"group",
                       json{{"component",
                             json{{"kind", "cyclic"}, {"order", 2}}}}},
                      {"window", 4},
                      {"innings", 16},
                      {"one", json{{"kind", "probeHunter"},
                                   {"seed", play_seed},
                                   {"step", 1},
                                   {"pool", json::array({0, 1, 2, 3})}}},
                      {"two", json{{"kind", "nbd"}}},
                      {"seed", play_seed}};
        break;
      case 2:
        config = json{{"game", "countable-one"},
                      {"track", "box-gdelta"},
                      {"group",
                       json{{"component",
                             json{{"kind", "cyclic"}, {"order", 2}}}}},
                      {"window", 4},
                      {"innings", 24},
                      {"one", json{{"kind", "randomCountable"},
                                   {"seed", play_seed},
                                   {"growth", 1},
                                   {"reservoir", 12},
                                   {"pool", json::array({0, 1, 2, 3})}}},
                      {"two", json{{"kind", "bookkeeping"}}},
                      {"seed", play_seed}};
        break;
      case 3:
        config = json{{"game", "open-covers"},
                      {"track", "box-gdelta"},
                      {"group",
                       json{{"component",
                             json{{"kind", "cyclic"}, {"order", 2}}}}},
                      {"window", 4},
                      {"innings", 16},
                      {"one", json{{"kind", "randomCover"},
                                   {"seed", play_seed},
                                   {"maxPins", 2},
                                   {"pool", json::array({0, 1, 2})}}},
                      {"two", json{{"kind", "pgroupOO"}}},
                      {"seed", play_seed}};
        break;
      default:
        config = json{{"game", "nbd-covers"},
                      {"track", "product"},
                      {"group", json{{"component", json{{"kind", "integers"}}}}},
                      {"window", 3},
                      {"innings", 12},
                      {"one", json{{"kind", "shrinkingNbd"},
                                   {"seed", play_seed},
                                   {"pool", json::array({0, 1, 2})}}},
                      {"two", json{{"kind", "scriptedCoset"},
                                   {"anchor", json::array({json::array(
                                       {0, 1})})}}},
                      {"seed", play_seed}};
        break;
    }
    // Pin the probes to the base window so both runs share them.
    base = RunConfig::from_json(config);
    json probes = json::array();
    for (const Element& p : base.probes) probes.push_back(p.to_json());
    config["probes"] = probes;
    base = RunConfig::from_json(config);

    // The enlarged window adds four fresh indices nothing references.
    json enlarged_config = config;
    json window = base.game.window.to_json();
    for (Index fresh : {100, 101, 102, 103}) window.push_back(fresh);
    enlarged_config["window"] = window;
    const RunConfig enlarged = RunConfig::from_json(enlarged_config);

    const std::string tag = "scenario " + std::to_string(scenario) +
                            " run " + std::to_string(i);
    try {
      const Transcript t1 = run_simulation(base, FaultPolicy::Throw);
      const Transcript t2 = run_simulation(enlarged, FaultPolicy::Throw);
      record(report, t1.innings.size() == t2.innings.size(),
             "invariance-length", std::nullopt, tag);
      for (std::size_t n = 0;
           n < std::min(t1.innings.size(), t2.innings.size()); ++n) {
        json a = t1.innings[n].to_json();
        json b = t2.innings[n].to_json();
        a.erase("windowSnapshot");
        b.erase("windowSnapshot");
        record(report, a.dump() == b.dump(), "invariance-inning", n,
               tag);
      }
      record(report,
             t1.summary.at("probeCoverage") == t2.summary.at("probeCoverage"),
             "invariance-coverage", std::nullopt, tag);
    } catch (const std::exception& e) {
      record(report, false, "play-failed", std::nullopt,
             tag + ": " + e.what());
    }
  }
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------
// suite dispatch

std::vector<std::string> verify_suite_names() {
  return {"group-axioms", "lebesgue",    "claims",           "schedule",
          "counterplay",  "selector",    "window-invariance"};
}

VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed,
                              std::size_t scale) {
  if (scale == 0) throw ConfigError("scale must be positive");
  if (suite == "group-axioms") return verify_group_axioms(seed, 10'000 * scale);
  if (suite == "lebesgue") {
    VerifyReport compact = verify_lebesgue_compact(seed, 1'000 * scale);
    VerifyReport pgroup =
        verify_lebesgue_pgroup(seed, 1'000 * scale, 200);
    compact.suite = "lebesgue";
    compact.cases += pgroup.cases;
    compact.millis += pgroup.millis;
    compact.violations.insert(compact.violations.end(),
                              pgroup.violations.begin(),
                              pgroup.violations.end());
    return compact;
  }
  if (suite == "claims") return verify_nbd_game(seed, 50 * scale, 64);
  if (suite == "schedule") return verify_schedule(seed, 50 * scale, 8, 4);
  if (suite == "counterplay") return verify_counterplay(seed, 64);
  if (suite == "selector") return verify_selector(seed, 100);
  if (suite == "window-invariance")
    return verify_window_invariance(seed, 50 * scale);
  throw ConfigError("unknown verify suite: " + suite);
}

}  // namespace selgames
