#include "selgames/strategies.hpp"

#include <algorithm>

namespace selgames {

namespace {

const IndexSet& require_nbd(const OneMove& one) {
  if (!one.nbd.has_value())
    throw ContractError("expected a neighborhood-cover move");
  return one.nbd->subgroup.constraint_set;
}

const CoverOracle& require_oracle(const OneMove& one) {
  if (!one.oracle.has_value() || !one.oracle->valid())
    throw ContractError("expected a cover-oracle move");
  return *one.oracle;
}

const std::vector<Element>& require_countable(const OneMove& one) {
  if (!one.countable.has_value() || one.countable->empty())
    throw ContractError("expected a nonempty countable-set move");
  return *one.countable;
}

NbdCover make_nbd_cover(IndexSet B, const PlayView& view) {
  return NbdCover{
      NbdSubgroup{std::move(B), view.spec.group.track() == Track::BoxGdelta}};
}

IndexSet pool_from(const json& desc, const char* key = "pool") {
  return IndexSet::from_json(desc.at(key));
}

}  // namespace

// ---------------------------------------------------------------------------
// BookkeepingTwo

BookkeepingTwo::Pick BookkeepingTwo::pick_from(
    std::size_t inning, const std::vector<Element>& offered) {
  if (offered.empty())
    throw ContractError("bookkeeping needs a nonempty offer");
  for (const Element& e : offered)
    if (rank_of_.emplace(e, by_rank_.size()).second) by_rank_.push_back(e);
  const auto [rank, repeat] = PairingSchedule::unpair(inning);
  Pick p;
  p.schedule_rank = rank;
  p.repeat = repeat;
  if (rank < by_rank_.size()) {
    p.element = by_rank_[rank];
    p.played_rank = rank;
  } else {
    p.element = offered.front();
    p.played_rank = rank_of_.at(offered.front());
    p.rank_unpopulated = true;
  }
  return p;
}

std::optional<std::size_t> BookkeepingTwo::merged_rank_of(
    const Element& e) const {
  auto it = rank_of_.find(e);
  if (it == rank_of_.end()) return std::nullopt;
  return it->second;
}

TwoMove BookkeepingTwo::respond(std::size_t inning, const OneMove& one,
                                const PlayView& view) {
  (void)view;
  const Pick p = pick_from(inning, require_countable(one));
  TwoMove tm;
  tm.pick = p.element;
  tm.instrumentation = json{{"scheduleRank", p.schedule_rank},
                            {"repeat", p.repeat},
                            {"playedRank", p.played_rank},
                            {"fresh", p.rank_unpopulated}};
  return tm;
}

json BookkeepingTwo::descriptor() const {
  return json{{"kind", "bookkeeping"}, {"reconstructible", true}};
}

// ---------------------------------------------------------------------------
// NbdStrategyTwo

NbdStrategyTwo::NbdStrategyTwo(GroupSpec spec) : spec_(std::move(spec)) {}

TwoMove NbdStrategyTwo::respond(std::size_t inning, const OneMove& one,
                                const PlayView& view) {
  (void)view;
  const IndexSet& B = require_nbd(one);
  refined_ = refined_.union_with(B);
  // Union the next enumeration prefix into the view; the view only grows,
  // so the internal countable game stays monotone even when the refined
  // set jumps and reorders the underlying enumeration.
  for (Element& rep :
       CosetRepEnumerator::prefix(refined_, spec_, view_length(inning)))
    if (in_view_.emplace(rep, view_.size()).second)
      view_.push_back(std::move(rep));
  const BookkeepingTwo::Pick p = core_.pick_from(inning, view_);
  TwoMove tm;
  tm.anchor = p.element;
  tm.answered_B = B;
  tm.instrumentation =
      json{{"refinedB", refined_.to_json()},
           {"repViewSize", view_.size()},
           {"scheduleRank", p.schedule_rank},
           {"playedRank", p.played_rank},
           {"fresh", p.rank_unpopulated},
           {"refinedCoset", json{{"anchor", p.element.to_json()},
                                 {"B", refined_.to_json()}}}};
  return tm;
}

json NbdStrategyTwo::descriptor() const {
  return json{{"kind", "nbd"}, {"reconstructible", true}};
}

// ---------------------------------------------------------------------------
// PGroupOOTwo

PGroupOOTwo::PGroupOOTwo(GroupSpec spec)
    : spec_(spec), inner_(std::move(spec)) {}

TwoMove PGroupOOTwo::respond(std::size_t inning, const OneMove& one,
                             const PlayView& view) {
  const CoverOracle& oracle = require_oracle(one);
  const NbdSubgroup N = lebesgue_pgroup(oracle);
  OneMove synthetic;
  synthetic.nbd = NbdCover{N};
  TwoMove inner_move = inner_.respond(inning, synthetic, view);
  const Element rep = *inner_move.anchor;
  BasicOpen played = oracle.pick(rep, spec_);
  // The declared bound makes the oracle's answer absorb the whole coset;
  // keep the exact check as a guard.
  if (!coset_inside_open(rep, N.constraint_set, played, spec_))
    throw ContractError(
        "oracle answer does not absorb the representative's coset");
  TwoMove tm;
  tm.played = std::move(played);
  tm.witness = rep;
  tm.instrumentation = json{{"neighborhood", N.to_json()},
                            {"inner", inner_move.instrumentation}};
  return tm;
}

json PGroupOOTwo::descriptor() const {
  return json{{"kind", "pgroupOO"}, {"reconstructible", true}};
}

// ---------------------------------------------------------------------------
// SigmaOOTwo

SigmaOOTwo::SigmaOOTwo(GroupSpec spec, std::size_t piece_cap)
    : spec_(spec), inner_(std::move(spec)), piece_cap_(piece_cap) {}

BasicOpen SigmaOOTwo::meet_pick(const Element& x, const GroupSpec& spec) {
  MeetEntry& entry = meet_[x];
  while (entry.applied < oracles_.size()) {
    auto refined = entry.open.intersect(oracles_[entry.applied].pick(x, spec));
    if (!refined.has_value())
      throw ContractError("refinement meet emptied at a queried point");
    entry.open = std::move(*refined);
    ++entry.applied;
  }
  return entry.open;
}

TwoMove SigmaOOTwo::respond(std::size_t inning, const OneMove& one,
                            const PlayView& view) {
  oracles_.push_back(require_oracle(one));
  CoverOracle meet_oracle(
      [this](const Element& x) { return meet_pick(x, spec_); }, std::nullopt,
      "refinement-meet");
  const NbdSubgroup N =
      lebesgue_compact(meet_oracle, static_cast<int>(inning),
                       view.spec.window, spec_, piece_cap_);
  OneMove synthetic;
  synthetic.nbd = NbdCover{N};
  TwoMove inner_move = inner_.respond(inning, synthetic, view);
  const Element rep = *inner_move.anchor;
  // Witness: the representative squeezed onto the neighborhood's
  // constraint set, kept only when it lands in the stage piece; the
  // identity (always a piece member) otherwise.
  Element witness = restrict_to(rep, N.constraint_set);
  const bool in_piece =
      in_compact_piece(witness, static_cast<int>(inning), spec_);
  if (!in_piece) witness = Element();
  const BasicOpen meet_member = meet_pick(witness, spec_);
  BasicOpen played = oracles_.back().pick(witness, spec_);
  // Both containments are exact consequences of construction: the witness
  // was queried while extracting N, and the meet intersects the current
  // oracle's answer.
  if (!coset_inside_open(witness, N.constraint_set, meet_member, spec_))
    throw ContractError("meet member does not absorb the witness coset");
  if (!basic_open_subset(meet_member, played, spec_))
    throw ContractError("projection left the refinement meet");
  TwoMove tm;
  tm.played = std::move(played);
  tm.witness = witness;
  tm.instrumentation = json{{"neighborhood", N.to_json()},
                            {"witnessInPiece", in_piece},
                            {"meetMember", meet_member.to_json()},
                            {"inner", inner_move.instrumentation}};
  return tm;
}

json SigmaOOTwo::descriptor() const {
  return json{{"kind", "sigmaOO"},
              {"pieceCap", piece_cap_},
              {"reconstructible", true}};
}

// ---------------------------------------------------------------------------
// CounterPlayTwo

CounterPlayTwo::CounterPlayTwo(GroupSpec spec,
                               std::function<bool(const Element&)> target,
                               std::size_t piece_cap)
    : spec_(std::move(spec)),
      target_(std::move(target)),
      piece_cap_(piece_cap) {}

TwoMove CounterPlayTwo::respond(std::size_t inning, const OneMove& one,
                                const PlayView& view) {
  const CoverOracle& oracle = require_oracle(one);
  const auto [piece_rank, visit] = PairingSchedule::unpair(inning);
  std::vector<Element> targets = enumerate_compact_piece(
      static_cast<int>(piece_rank), view.spec.window, spec_, piece_cap_);
  if (target_)
    std::erase_if(targets, [&](const Element& e) { return !target_(e); });
  if (targets.empty())
    throw ContractError("target set misses the stage-" +
                        std::to_string(piece_rank) + " compact piece");
  std::size_t& cursor = cursor_[piece_rank];
  const Element x = targets[cursor % targets.size()];
  ++cursor;
  const NbdSubgroup N =
      lebesgue_compact(oracle, static_cast<int>(piece_rank), view.spec.window,
                       spec_, piece_cap_);
  BasicOpen chosen = oracle.pick(x, spec_);
  if (!coset_inside_open(x, N.constraint_set, chosen, spec_))
    throw ContractError(
        "selected member does not absorb the target's neighborhood coset");
  TwoMove tm;
  tm.played = std::move(chosen);
  tm.witness = x;
  tm.instrumentation = json{{"pieceRank", piece_rank},
                            {"visit", visit},
                            {"neighborhood", N.to_json()}};
  return tm;
}

json CounterPlayTwo::descriptor() const {
  json j{{"kind", "counterplay"},
         {"pieceCap", piece_cap_},
         {"reconstructible", true}};
  if (target_) j["target"] = "custom";
  return j;
}

// ---------------------------------------------------------------------------
// ScriptedCosetTwo / FirstPickTwo

ScriptedCosetTwo::ScriptedCosetTwo(Element anchor)
    : anchor_(std::move(anchor)) {}

TwoMove ScriptedCosetTwo::respond(std::size_t inning, const OneMove& one,
                                  const PlayView& view) {
  (void)inning;
  (void)view;
  TwoMove tm;
  tm.anchor = anchor_;
  tm.answered_B = require_nbd(one);
  return tm;
}

json ScriptedCosetTwo::descriptor() const {
  return json{{"kind", "scriptedCoset"},
              {"anchor", anchor_.to_json()},
              {"reconstructible", true}};
}

TwoMove FirstPickTwo::respond(std::size_t inning, const OneMove& one,
                              const PlayView& view) {
  (void)inning;
  (void)view;
  TwoMove tm;
  tm.pick = require_countable(one).front();
  return tm;
}

json FirstPickTwo::descriptor() const {
  return json{{"kind", "firstPick"}, {"reconstructible", true}};
}

// ---------------------------------------------------------------------------
// Rothberger selector

std::vector<Element> rothberger_selector(
    const std::vector<NbdSubgroup>& neighborhoods, const GroupSpec& spec,
    std::size_t count) {
  IndexSet C;
  for (const NbdSubgroup& n : neighborhoods)
    C = C.union_with(n.constraint_set);
  std::vector<Element> out = CosetRepEnumerator::prefix(C, spec, count);
  out.resize(count);  // a finite family pads with the identity
  return out;
}

// ---------------------------------------------------------------------------
// ONE adversaries

ScriptedNbdOne::ScriptedNbdOne(std::vector<IndexSet> script)
    : script_(std::move(script)) {
  if (script_.empty()) throw ConfigError("scripted play needs moves");
}

OneMove ScriptedNbdOne::move(std::size_t inning, const PlayView& view) {
  const IndexSet& B =
      inning < script_.size() ? script_[inning] : script_.back();
  OneMove om;
  om.nbd = make_nbd_cover(B, view);
  return om;
}

json ScriptedNbdOne::descriptor() const {
  json script = json::array();
  for (const IndexSet& b : script_) script.push_back(b.to_json());
  return json{{"kind", "scriptedNbd"},
              {"script", std::move(script)},
              {"reconstructible", true}};
}

RandomNbdOne::RandomNbdOne(std::uint64_t seed, std::size_t growth,
                           IndexSet pool)
    : seed_(seed), growth_(growth), pool_(std::move(pool)), rng_(seed) {
  if (growth_ == 0) throw ConfigError("growth must be positive");
  if (pool_.empty()) throw ConfigError("pool must be nonempty");
  remaining_ = pool_.indices();
  std::shuffle(remaining_.begin(), remaining_.end(), rng_);
}

OneMove RandomNbdOne::move(std::size_t inning, const PlayView& view) {
  const std::size_t size =
      std::min(1 + inning * growth_, remaining_.size());
  OneMove om;
  om.nbd = make_nbd_cover(
      IndexSet::of(std::vector<Index>(remaining_.begin(),
                                      remaining_.begin() + size)),
      view);
  return om;
}

json RandomNbdOne::descriptor() const {
  return json{{"kind", "randomNbd"},
              {"seed", seed_},
              {"growth", growth_},
              {"pool", pool_.to_json()},
              {"reconstructible", true}};
}

ShrinkingNbdOne::ShrinkingNbdOne(std::uint64_t seed, IndexSet pool)
    : seed_(seed), pool_(std::move(pool)) {
  if (pool_.empty()) throw ConfigError("pool must be nonempty");
  order_ = pool_.indices();
  std::mt19937_64 rng(seed);
  std::shuffle(order_.begin(), order_.end(), rng);
}

OneMove ShrinkingNbdOne::move(std::size_t inning, const PlayView& view) {
  const std::size_t size = std::min(inning + 1, order_.size());
  OneMove om;
  om.nbd = make_nbd_cover(
      IndexSet::of(std::vector<Index>(order_.begin(), order_.begin() + size)),
      view);
  return om;
}

json ShrinkingNbdOne::descriptor() const {
  return json{{"kind", "shrinkingNbd"},
              {"seed", seed_},
              {"pool", pool_.to_json()},
              {"reconstructible", true}};
}

ProbeHunterNbdOne::ProbeHunterNbdOne(std::uint64_t seed, IndexSet pool,
                                     std::size_t step)
    : seed_(seed), pool_(std::move(pool)), step_(step), rng_(seed) {
  if (step_ == 0) throw ConfigError("step must be positive");
  if (pool_.empty()) throw ConfigError("pool must be nonempty");
}

OneMove ProbeHunterNbdOne::move(std::size_t inning, const PlayView& view) {
  (void)inning;
  // Coordinates TWO's previous coset left unconstrained are exactly the
  // pool minus its answered constraint set.
  IndexSet answered;
  if (!view.innings.empty() &&
      view.innings.back().two.value("type", "") == "coset")
    answered = IndexSet::from_json(view.innings.back().two.at("B"));
  std::vector<Index> open_coords;
  for (Index i : pool_)
    if (!answered.contains(i) && !current_.contains(i))
      open_coords.push_back(i);
  std::shuffle(open_coords.begin(), open_coords.end(), rng_);
  const std::size_t take = std::min(step_, open_coords.size());
  std::vector<Index> grown = current_.indices();
  grown.insert(grown.end(), open_coords.begin(), open_coords.begin() + take);
  if (grown.empty()) grown.push_back(pool_.indices().front());
  current_ = IndexSet::of(std::move(grown));
  OneMove om;
  om.nbd = make_nbd_cover(current_, view);
  return om;
}

json ProbeHunterNbdOne::descriptor() const {
  return json{{"kind", "probeHunter"},
              {"seed", seed_},
              {"pool", pool_.to_json()},
              {"step", step_},
              {"reconstructible", true}};
}

RandomCoverOne::RandomCoverOne(std::uint64_t seed, IndexSet pool,
                               std::size_t max_pins, GroupSpec spec)
    : seed_(seed),
      pool_(std::move(pool)),
      max_pins_(max_pins),
      spec_(std::move(spec)) {
  if (pool_.empty()) throw ConfigError("pool must be nonempty");
}

OneMove RandomCoverOne::move(std::size_t inning, const PlayView& view) {
  (void)view;
  const std::uint64_t salt = hash_combine(seed_, inning);
  const IndexSet pool = pool_;
  const std::size_t max_pins = max_pins_;
  const GroupSpec spec = spec_;
  OneMove om;
  om.oracle = CoverOracle(
      [salt, pool, max_pins, spec](const Element& x) {
        // Pure function of (seed, inning, point): answers cannot depend on
        // query order.
        std::uint64_t h = hash_combine(salt, element_hash64(x));
        const std::size_t pins =
            max_pins == 0 ? 0 : static_cast<std::size_t>(h % (max_pins + 1));
        const auto& indices = pool.indices();
        std::vector<Index> chosen;
        while (chosen.size() < std::min(pins, indices.size())) {
          h = mix_hash(h);
          const Index cand = indices[h % indices.size()];
          if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end())
            chosen.push_back(cand);
        }
        return BasicOpen::coset(x, IndexSet::of(std::move(chosen)), spec);
      },
      pool_, "random-cover");
  return om;
}

json RandomCoverOne::descriptor() const {
  return json{{"kind", "randomCover"},
              {"seed", seed_},
              {"pool", pool_.to_json()},
              {"maxPins", max_pins_},
              {"reconstructible", true}};
}

ConstantCoverOne::ConstantCoverOne(GroupSpec spec) : spec_(std::move(spec)) {}

OneMove ConstantCoverOne::move(std::size_t inning, const PlayView& view) {
  (void)inning;
  (void)view;
  OneMove om;
  om.oracle = CoverOracle(
      [](const Element&) { return BasicOpen::whole_group(); }, IndexSet{},
      "constant-cover");
  return om;
}

json ConstantCoverOne::descriptor() const {
  return json{{"kind", "constantCover"}, {"reconstructible", true}};
}

GreedyShrinkCoverOne::GreedyShrinkCoverOne(IndexSet pool, GroupSpec spec)
    : pool_(std::move(pool)), spec_(std::move(spec)) {
  if (pool_.empty()) throw ConfigError("pool must be nonempty");
}

OneMove GreedyShrinkCoverOne::move(std::size_t inning, const PlayView& view) {
  (void)view;
  const auto& indices = pool_.indices();
  const std::size_t size = std::min(inning + 1, indices.size());
  const IndexSet pins =
      IndexSet::of(std::vector<Index>(indices.begin(), indices.begin() + size));
  const GroupSpec spec = spec_;
  OneMove om;
  om.oracle = CoverOracle(
      [pins, spec](const Element& x) {
        return BasicOpen::coset(x, pins, spec);
      },
      pins, "greedy-shrink-cover");
  return om;
}

json GreedyShrinkCoverOne::descriptor() const {
  return json{{"kind", "greedyShrinkCover"},
              {"pool", pool_.to_json()},
              {"reconstructible", true}};
}

ProbeHunterCoverOne::ProbeHunterCoverOne(std::uint64_t seed, IndexSet pool,
                                         std::size_t max_pins, GroupSpec spec)
    : seed_(seed),
      pool_(std::move(pool)),
      max_pins_(max_pins),
      spec_(std::move(spec)),
      rng_(seed) {
  if (max_pins_ == 0) throw ConfigError("maxPins must be positive");
  if (pool_.empty()) throw ConfigError("pool must be nonempty");
}

OneMove ProbeHunterCoverOne::move(std::size_t inning, const PlayView& view) {
  (void)inning;
  IndexSet constrained;
  if (!view.innings.empty() &&
      view.innings.back().two.value("type", "") == "basicOpen")
    constrained =
        BasicOpen::from_json(view.innings.back().two).constrained_indices();
  std::vector<Index> open_coords;
  for (Index i : pool_)
    if (!constrained.contains(i) && !current_.contains(i))
      open_coords.push_back(i);
  std::shuffle(open_coords.begin(), open_coords.end(), rng_);
  const std::size_t take = std::min(max_pins_, open_coords.size());
  std::vector<Index> grown = current_.indices();
  grown.insert(grown.end(), open_coords.begin(), open_coords.begin() + take);
  if (grown.empty()) grown.push_back(pool_.indices().front());
  current_ = IndexSet::of(std::move(grown));
  const IndexSet pins = current_;
  const GroupSpec spec = spec_;
  OneMove om;
  om.oracle = CoverOracle(
      [pins, spec](const Element& x) {
        return BasicOpen::coset(x, pins, spec);
      },
      pool_, "probe-hunter-cover");
  return om;
}

json ProbeHunterCoverOne::descriptor() const {
  return json{{"kind", "probeHunterCover"},
              {"seed", seed_},
              {"pool", pool_.to_json()},
              {"maxPins", max_pins_},
              {"reconstructible", true}};
}

ScriptedCountableOne::ScriptedCountableOne(IndexSet B, std::size_t base,
                                           std::size_t growth, GroupSpec spec)
    : B_(std::move(B)), base_(base), growth_(growth), spec_(std::move(spec)) {
  if (base_ == 0) throw ConfigError("base offer size must be positive");
}

OneMove ScriptedCountableOne::move(std::size_t inning, const PlayView& view) {
  (void)view;
  OneMove om;
  om.countable =
      CosetRepEnumerator::prefix(B_, spec_, base_ + inning * growth_);
  return om;
}

json ScriptedCountableOne::descriptor() const {
  return json{{"kind", "scriptedCountable"},
              {"B", B_.to_json()},
              {"base", base_},
              {"growth", growth_},
              {"reconstructible", true}};
}

RandomCountableOne::RandomCountableOne(std::uint64_t seed, IndexSet pool,
                                       std::size_t growth,
                                       std::size_t reservoir, GroupSpec spec)
    : seed_(seed),
      pool_(std::move(pool)),
      growth_(growth),
      reservoir_size_(reservoir),
      rng_(seed) {
  if (growth_ == 0) throw ConfigError("growth must be positive");
  if (reservoir_size_ == 0) throw ConfigError("reservoir must be positive");
  reservoir_ = CosetRepEnumerator::prefix(pool_, spec, reservoir_size_);
  std::shuffle(reservoir_.begin(), reservoir_.end(), rng_);
}

OneMove RandomCountableOne::move(std::size_t inning, const PlayView& view) {
  (void)inning;
  (void)view;
  for (std::size_t k = 0; k < growth_ && !reservoir_.empty(); ++k) {
    offered_.push_back(std::move(reservoir_.back()));
    reservoir_.pop_back();
  }
  OneMove om;
  om.countable = offered_;
  return om;
}

json RandomCountableOne::descriptor() const {
  return json{{"kind", "randomCountable"},
              {"seed", seed_},
              {"pool", pool_.to_json()},
              {"growth", growth_},
              {"reservoir", reservoir_size_},
              {"reconstructible", true}};
}

// ---------------------------------------------------------------------------
// Factories

namespace {

void require_game(const GameSpec& spec, GameKind kind,
                  const std::string& strategy) {
  if (spec.kind != kind)
    throw ConfigError("strategy '" + strategy + "' plays " +
                      game_kind_name(kind) + ", not " +
                      game_kind_name(spec.kind));
}

void require_track(const GameSpec& spec, Track track,
                   const std::string& strategy) {
  if (spec.group.track() != track)
    throw ConfigError("strategy '" + strategy + "' needs the " +
                      track_name(track) + " track");
}

}  // namespace

std::unique_ptr<OneStrategy> make_one_strategy(const json& desc,
                                               const GameSpec& spec) {
  const std::string kind = desc.at("kind").get<std::string>();
  if (kind == "scriptedNbd") {
    require_game(spec, GameKind::NbdCovers, kind);
    std::vector<IndexSet> script;
    for (const auto& b : desc.at("script"))
      script.push_back(IndexSet::from_json(b));
    return std::make_unique<ScriptedNbdOne>(std::move(script));
  }
  if (kind == "randomNbd") {
    require_game(spec, GameKind::NbdCovers, kind);
    return std::make_unique<RandomNbdOne>(
        desc.at("seed").get<std::uint64_t>(),
        desc.at("growth").get<std::size_t>(), pool_from(desc));
  }
  if (kind == "shrinkingNbd") {
    require_game(spec, GameKind::NbdCovers, kind);
    return std::make_unique<ShrinkingNbdOne>(
        desc.at("seed").get<std::uint64_t>(), pool_from(desc));
  }
  if (kind == "probeHunter") {
    require_game(spec, GameKind::NbdCovers, kind);
    return std::make_unique<ProbeHunterNbdOne>(
        desc.at("seed").get<std::uint64_t>(), pool_from(desc),
        desc.value("step", std::size_t{1}));
  }
  if (kind == "randomCover") {
    require_game(spec, GameKind::OpenCovers, kind);
    return std::make_unique<RandomCoverOne>(
        desc.at("seed").get<std::uint64_t>(), pool_from(desc),
        desc.value("maxPins", std::size_t{2}), spec.group);
  }
  if (kind == "constantCover") {
    require_game(spec, GameKind::OpenCovers, kind);
    return std::make_unique<ConstantCoverOne>(spec.group);
  }
  if (kind == "greedyShrinkCover") {
    require_game(spec, GameKind::OpenCovers, kind);
    return std::make_unique<GreedyShrinkCoverOne>(pool_from(desc), spec.group);
  }
  if (kind == "probeHunterCover") {
    require_game(spec, GameKind::OpenCovers, kind);
    return std::make_unique<ProbeHunterCoverOne>(
        desc.at("seed").get<std::uint64_t>(), pool_from(desc),
        desc.value("maxPins", std::size_t{1}), spec.group);
  }
  if (kind == "scriptedCountable") {
    require_game(spec, GameKind::CountableOne, kind);
    return std::make_unique<ScriptedCountableOne>(
        pool_from(desc, "B"), desc.value("base", std::size_t{1}),
        desc.value("growth", std::size_t{1}), spec.group);
  }
  if (kind == "randomCountable") {
    require_game(spec, GameKind::CountableOne, kind);
    return std::make_unique<RandomCountableOne>(
        desc.at("seed").get<std::uint64_t>(), pool_from(desc),
        desc.value("growth", std::size_t{1}),
        desc.value("reservoir", std::size_t{16}), spec.group);
  }
  throw ConfigError("unknown ONE strategy kind: " + kind);
}

std::unique_ptr<TwoStrategy> make_two_strategy(const json& desc,
                                               const GameSpec& spec) {
  const std::string kind = desc.at("kind").get<std::string>();
  if (kind == "bookkeeping") {
    require_game(spec, GameKind::CountableOne, kind);
    return std::make_unique<BookkeepingTwo>();
  }
  if (kind == "firstPick") {
    require_game(spec, GameKind::CountableOne, kind);
    return std::make_unique<FirstPickTwo>();
  }
  if (kind == "nbd") {
    require_game(spec, GameKind::NbdCovers, kind);
    return std::make_unique<NbdStrategyTwo>(spec.group);
  }
  if (kind == "scriptedCoset") {
    require_game(spec, GameKind::NbdCovers, kind);
    return std::make_unique<ScriptedCosetTwo>(
        Element::from_json(desc.at("anchor"), spec.group));
  }
  if (kind == "pgroupOO") {
    require_game(spec, GameKind::OpenCovers, kind);
    require_track(spec, Track::BoxGdelta, kind);
    return std::make_unique<PGroupOOTwo>(spec.group);
  }
  if (kind == "sigmaOO") {
    require_game(spec, GameKind::OpenCovers, kind);
    require_track(spec, Track::Product, kind);
    return std::make_unique<SigmaOOTwo>(
        spec.group, desc.value("pieceCap", std::size_t{2'000'000}));
  }
  if (kind == "counterplay") {
    require_game(spec, GameKind::OpenCovers, kind);
    require_track(spec, Track::Product, kind);
    return std::make_unique<CounterPlayTwo>(
        spec.group, nullptr, desc.value("pieceCap", std::size_t{2'000'000}));
  }
  throw ConfigError("unknown TWO strategy kind: " + kind);
}

}  // namespace selgames
