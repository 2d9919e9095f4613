#pragma once

// The constructive strategies: the bookkeeping selector for the countable
// game, TWO's neighborhood-game strategy built on top of it, the two
// open-game strategies (P-group and sigma-compact tracks), the counter-play
// construction that defeats any ONE strategy in the open game, Rothberger
// selectors, and a family of seeded adversaries for ONE.

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <unordered_map>

#include "selgames/game.hpp"
#include "selgames/pairing.hpp"

namespace selgames {

// TWO for the countable game. Keeps a merged enumeration of everything
// ONE has offered, assigning each newly seen member the next free rank;
// at inning n with unpair(n) = (r, j) it plays the rank-r member if that
// rank is populated and the first offered member otherwise. A member of
// merged rank r that was offered by inning r is therefore selected at
// least m times by inning bound(r, m).
class BookkeepingTwo : public TwoStrategy {
 public:
  struct Pick {
    Element element;
    std::size_t schedule_rank = 0;
    std::size_t repeat = 0;
    std::size_t played_rank = 0;
    bool rank_unpopulated = false;
  };

  // Registers the offer, then selects per the schedule. Usable directly by
  // strategies that run the bookkeeping internally.
  Pick pick_from(std::size_t inning, const std::vector<Element>& offered);

  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;

  std::size_t seen_count() const { return by_rank_.size(); }
  std::optional<std::size_t> merged_rank_of(const Element& e) const;

 private:
  std::vector<Element> by_rank_;
  std::map<Element, std::size_t> rank_of_;
};

// TWO for the neighborhood game. Internally refines ONE's constraint sets
// to the running union C_n, enumerates canonical coset representatives of
// U_{C_n} into a monotone view, lets the bookkeeping core select one, and
// answers ONE's actual move with that representative's coset. The refined
// coset is recorded in instrumentation.
class NbdStrategyTwo : public TwoStrategy {
 public:
  explicit NbdStrategyTwo(GroupSpec spec);

  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;

  // View growth policy: representatives enumerated per inning.
  static std::size_t view_length(std::size_t inning) { return inning + 2; }

 private:
  GroupSpec spec_;
  IndexSet refined_;
  std::vector<Element> view_;
  std::map<Element, std::size_t> in_view_;
  BookkeepingTwo core_;
};

// TWO for the open game on the box track. Collapses ONE's oracle to the
// neighborhood U_{B*} of its declared uniform bound, consults the
// neighborhood strategy, and plays the oracle's answer at the selected
// representative, which contains the representative's whole coset.
class PGroupOOTwo : public TwoStrategy {
 public:
  explicit PGroupOOTwo(GroupSpec spec);

  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;

 private:
  GroupSpec spec_;
  NbdStrategyTwo inner_;
};

// TWO for the open game on the product track. Maintains the running
// refinement meet of all oracles seen so far, extracts an identity
// neighborhood for the stage-n compact piece with the compact covering
// lemma, simulates a neighborhood-game move for the inner strategy, and
// plays the current oracle's answer at a witness restricted into the
// piece (the identity when the inner coset misses the piece).
class SigmaOOTwo : public TwoStrategy {
 public:
  SigmaOOTwo(GroupSpec spec, std::size_t piece_cap = 2'000'000);

  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;

 private:
  BasicOpen meet_pick(const Element& x, const GroupSpec& spec);

  GroupSpec spec_;
  NbdStrategyTwo inner_;
  std::size_t piece_cap_;
  std::vector<CoverOracle> oracles_;
  struct MeetEntry {
    BasicOpen open;
    std::size_t applied = 0;
  };
  std::unordered_map<Element, MeetEntry, ElementHash> meet_;
};

// TWO that defeats ONE's open-game strategy pointwise: inning k works for
// the compact piece of rank unpair(k).first, cycling that piece's target
// elements so each one is eventually played exactly, with the covering
// lemma guaranteeing the selected member swallows the target's whole
// neighborhood coset.
class CounterPlayTwo : public TwoStrategy {
 public:
  CounterPlayTwo(GroupSpec spec,
                 std::function<bool(const Element&)> target = nullptr,
                 std::size_t piece_cap = 2'000'000);

  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;

 private:
  GroupSpec spec_;
  std::function<bool(const Element&)> target_;
  std::size_t piece_cap_;
  std::map<std::size_t, std::size_t> cursor_;  // piece rank -> next position
};

// Fixed-anchor TWO for the neighborhood game (test and duel baselines).
class ScriptedCosetTwo : public TwoStrategy {
 public:
  explicit ScriptedCosetTwo(Element anchor);
  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;

 private:
  Element anchor_;
};

// TWO for the countable game that always takes the first offered member.
class FirstPickTwo : public TwoStrategy {
 public:
  TwoMove respond(std::size_t inning, const OneMove& one,
                  const PlayView& view) override;
  json descriptor() const override;
};

// Rothberger selector: given the neighborhoods U_{B_n}, let C be the union
// of the constraint sets and emit f_n = the n-th canonical element
// supported in C. Every element supported in C is then covered by
// f_r*U_{B_r} at its enumeration rank r.
std::vector<Element> rothberger_selector(
    const std::vector<NbdSubgroup>& neighborhoods, const GroupSpec& spec,
    std::size_t count);

// --------------------------------------------------------------------------
// Adversaries for ONE. All are deterministic functions of their descriptor
// (seed and parameters included); none reads the window, so enlarging it
// with untouched indices cannot change their moves.

class ScriptedNbdOne : public OneStrategy {
 public:
  explicit ScriptedNbdOne(std::vector<IndexSet> script);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::vector<IndexSet> script_;
};

// Monotone random constraint growth: starts with one pool index and adds
// `growth` fresh ones per inning until the pool is exhausted.
class RandomNbdOne : public OneStrategy {
 public:
  RandomNbdOne(std::uint64_t seed, std::size_t growth, IndexSet pool);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::uint64_t seed_;
  std::size_t growth_;
  IndexSet pool_;
  std::vector<Index> remaining_;
  std::vector<Index> current_;
  std::mt19937_64 rng_;
};

// Strictly shrinking neighborhoods along a seeded shuffle of the pool.
class ShrinkingNbdOne : public OneStrategy {
 public:
  ShrinkingNbdOne(std::uint64_t seed, IndexSet pool);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::uint64_t seed_;
  IndexSet pool_;
  std::vector<Index> order_;
};

// Adaptive: pins pool coordinates that TWO's previous move left
// unconstrained.
class ProbeHunterNbdOne : public OneStrategy {
 public:
  ProbeHunterNbdOne(std::uint64_t seed, IndexSet pool, std::size_t step);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::uint64_t seed_;
  IndexSet pool_;
  std::size_t step_;
  IndexSet current_;
  std::mt19937_64 rng_;
};

// Open-game oracle pinning a pseudorandom subset of the pool around each
// queried point; the subset is a pure function of (seed, inning, point),
// so answers are independent of query order.
class RandomCoverOne : public OneStrategy {
 public:
  RandomCoverOne(std::uint64_t seed, IndexSet pool, std::size_t max_pins,
                 GroupSpec spec);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::uint64_t seed_;
  IndexSet pool_;
  std::size_t max_pins_;
  GroupSpec spec_;
};

// Open-game oracle answering the whole group everywhere.
class ConstantCoverOne : public OneStrategy {
 public:
  explicit ConstantCoverOne(GroupSpec spec);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  GroupSpec spec_;
};

// Open-game oracle pinning ever more pool coordinates as innings pass.
class GreedyShrinkCoverOne : public OneStrategy {
 public:
  GreedyShrinkCoverOne(IndexSet pool, GroupSpec spec);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  IndexSet pool_;
  GroupSpec spec_;
};

// Adaptive open-game oracle: pins the pool coordinates TWO's previous
// member left unconstrained.
class ProbeHunterCoverOne : public OneStrategy {
 public:
  ProbeHunterCoverOne(std::uint64_t seed, IndexSet pool, std::size_t max_pins,
                      GroupSpec spec);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::uint64_t seed_;
  IndexSet pool_;
  std::size_t max_pins_;
  GroupSpec spec_;
  IndexSet current_;
  std::mt19937_64 rng_;
};

// Countable-game ONE offering growing prefixes of the canonical
// enumeration of elements supported in a fixed constraint set.
class ScriptedCountableOne : public OneStrategy {
 public:
  ScriptedCountableOne(IndexSet B, std::size_t base, std::size_t growth,
                       GroupSpec spec);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  IndexSet B_;
  std::size_t base_;
  std::size_t growth_;
  GroupSpec spec_;
};

// Countable-game ONE drawing fresh members from a seeded reservoir of
// pool-supported elements, at least one per inning while any remain.
class RandomCountableOne : public OneStrategy {
 public:
  RandomCountableOne(std::uint64_t seed, IndexSet pool, std::size_t growth,
                     std::size_t reservoir, GroupSpec spec);
  OneMove move(std::size_t inning, const PlayView& view) override;
  json descriptor() const override;

 private:
  std::uint64_t seed_;
  IndexSet pool_;
  std::size_t growth_;
  std::size_t reservoir_size_;
  std::vector<Element> reservoir_;
  std::vector<Element> offered_;
  std::mt19937_64 rng_;
};

// --------------------------------------------------------------------------
// Descriptor factories (used by the CLI, the offline validator's replay,
// and the verify suites).

std::unique_ptr<OneStrategy> make_one_strategy(const json& desc,
                                               const GameSpec& spec);
std::unique_ptr<TwoStrategy> make_two_strategy(const json& desc,
                                               const GameSpec& spec);

}  // namespace selgames
