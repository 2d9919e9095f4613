#pragma once

// Run configuration: one structured document describing the group, the
// game, both strategies, probes, and seeds. The command line can override
// individual values.

#include <string>

#include "selgames/game.hpp"

namespace selgames {

struct RunConfig {
  GameSpec game;
  json one_desc;
  json two_desc;
  std::size_t innings = 1;
  std::vector<Element> probes;
  std::uint64_t seed = 0;
  std::string output_path;

  static RunConfig from_json(const json& j);
  static RunConfig from_file(const std::string& path);
  json to_json() const;
};

// Deterministic default probe sample: the identity plus every singleton-
// support element of enumerator rank at most max_rank in the window.
std::vector<Element> default_probes(const GroupSpec& spec,
                                    const Window& window,
                                    std::size_t max_rank);

// Builds the strategies from the config descriptors and runs the play.
Transcript run_simulation(const RunConfig& config,
                          FaultPolicy policy = FaultPolicy::Capture);

// Rebuilds recorded ONE descriptors through the strategy factory so
// transcripts can be re-validated with oracle replay. Unknown or
// non-reconstructible descriptors yield nullptr, which skips replay.
OneRebuilder descriptor_rebuilder();

}  // namespace selgames
