#pragma once

// Referee for the three game kinds: the neighborhood-cover game, the open-
// cover game, and the countable-selection bookkeeping game. Handles
// legality, transcript recording, truncation, and probe-based win
// evidence.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selgames/topology.hpp"

namespace selgames {

enum class GameKind { NbdCovers, OpenCovers, CountableOne };

std::string game_kind_name(GameKind k);
GameKind game_kind_from_name(const std::string& name);

struct GameSpec {
  GameKind kind = GameKind::NbdCovers;
  GroupSpec group;
  Window window;
  std::size_t inning_cap = 1;

  json to_json() const;
  static GameSpec from_json(const json& j);
};

// ONE's move; exactly the field matching the game kind is engaged.
struct OneMove {
  std::optional<NbdCover> nbd;            // NbdCovers
  std::optional<CoverOracle> oracle;      // OpenCovers
  std::optional<std::vector<Element>> countable;  // CountableOne

  json to_json() const;
};

// TWO's move; the engaged fields depend on the game kind. The open-game
// witness is the point whose oracle answer TWO plays, making legality
// re-checkable.
struct TwoMove {
  std::optional<Element> anchor;     // NbdCovers: plays anchor*U_B
  std::optional<IndexSet> answered_B;
  std::optional<BasicOpen> played;   // OpenCovers
  std::optional<Element> witness;
  std::optional<Element> pick;       // CountableOne
  json instrumentation;              // strategy internals, free-form

  json to_json() const;
};

struct Inning {
  std::size_t inning = 0;
  json one;
  json two;
  json instrumentation;
  json window_snapshot;

  json to_json() const;
  static Inning from_json(const json& j);
};

struct Transcript {
  json header;
  std::vector<Inning> innings;
  json summary;

  // One JSON record per line: header, innings, summary.
  std::string to_jsonl() const;
  static Transcript parse_jsonl(const std::string& text);
};

// History view handed to strategies each inning.
struct PlayView {
  const GameSpec& spec;
  const std::vector<Inning>& innings;
};

class OneStrategy {
 public:
  virtual ~OneStrategy() = default;
  virtual OneMove move(std::size_t inning, const PlayView& view) = 0;
  virtual json descriptor() const = 0;
};

class TwoStrategy {
 public:
  virtual ~TwoStrategy() = default;
  virtual TwoMove respond(std::size_t inning, const OneMove& one,
                          const PlayView& view) = 0;
  virtual json descriptor() const = 0;
};

// What to do when a player breaks a rule: throw the LegalityError, or
// capture it in the transcript summary (status "fault") for reporting.
enum class FaultPolicy { Throw, Capture };

Transcript play_game(const GameSpec& spec, OneStrategy& one, TwoStrategy& two,
                     std::size_t innings, const std::vector<Element>& probes,
                     std::uint64_t seed,
                     FaultPolicy policy = FaultPolicy::Throw);

// Innings whose recorded TWO move contains the probe (equals it, in the
// countable game). Works off the serialized records.
std::vector<std::size_t> probe_coverage(const Transcript& t,
                                        const Element& probe,
                                        const GroupSpec& spec);

struct Violation {
  std::string rule;
  std::optional<std::size_t> inning;
  std::string details;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }

  json to_json() const;
};

// Rebuilds ONE's strategy from its recorded descriptor so oracle answers
// can be replayed offline; returns nullptr when the descriptor is not
// machine-reconstructible (interactive play).
using OneRebuilder = std::function<std::unique_ptr<OneStrategy>(
    const json& descriptor, const GameSpec& spec)>;

// Re-checks every legality rule and the instrumentation invariants from
// the transcript alone. Violations are data, not errors.
ValidationReport validate_transcript(const Transcript& t,
                                     const OneRebuilder& rebuild = nullptr);

}  // namespace selgames
