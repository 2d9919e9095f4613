#pragma once

// Property suites behind `verify` and the acceptance harness: randomized
// algebra laws, both covering lemmas against brute force, the instrumented
// claims, schedule fairness, counter-play legality and coverage, selector
// coverage, and window-extension invariance.

#include <cstddef>
#include <string>

#include "selgames/game.hpp"

namespace selgames {

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Violation> violations;
  double millis = 0.0;

  bool ok() const { return violations.empty(); }
  json to_json() const;
};

// Group axioms, canonical-form closure, restriction locality, subgroup
// laws for U_B, coset partition, and the antitone law; cases_per_kind
// randomized cases over Integers, Cyclic(2), Cyclic(6), and a symmetric
// permutation table.
VerifyReport verify_group_axioms(std::uint64_t seed,
                                 std::size_t cases_per_kind);

// Compact covering lemma: seeded oracles over small windows, verified by
// exhaustive enumeration of the stage piece.
VerifyReport verify_lebesgue_compact(std::uint64_t seed, std::size_t oracles);

// P-group covering lemma: declared uniform bounds stress-tested with
// random probes per oracle.
VerifyReport verify_lebesgue_pgroup(std::uint64_t seed, std::size_t oracles,
                                    std::size_t probes_per_oracle);

// Neighborhood-game plays against the seeded adversary families on both
// tracks; re-validates every transcript (including the instrumented
// claims) and checks that every probe is covered at least twice, each
// time within the pairing-schedule bound derived from the play itself.
VerifyReport verify_nbd_game(std::uint64_t seed, std::size_t plays,
                             std::size_t innings);

// Open-game plays for both composed strategies: per-inning containment of
// the witness coset in the played member, plus probe coverage.
VerifyReport verify_oo_games(std::uint64_t seed, std::size_t plays,
                             std::size_t innings);

// Counter-play against the adversary strategy families: the play must
// validate as a legal play of the adversary and cover every stage-2 piece
// probe.
VerifyReport verify_counterplay(std::uint64_t seed, std::size_t innings);

// Bookkeeping fairness: over seeded monotone offer sequences, the rank-r
// member is selected at least m times by inning bound(r, m).
VerifyReport verify_schedule(std::uint64_t seed, std::size_t sequences,
                             std::size_t max_rank, std::size_t max_repeats);

// Rothberger selector coverage: probes supported in the accumulated
// constraint set are covered no later than their enumeration rank.
VerifyReport verify_selector(std::uint64_t seed, std::size_t max_rank);

// Enlarging the window with untouched fresh indices must reproduce
// byte-identical inning records apart from the window snapshots.
VerifyReport verify_window_invariance(std::uint64_t seed, std::size_t runs);

// Named suites of the command-line contract.
std::vector<std::string> verify_suite_names();
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed,
                              std::size_t scale);

}  // namespace selgames
