// simctl: scenario runner and verifier for the selection-game engine.
//
// Subcommands: simulate, verify, duel, inspect.
// Exit codes: 0 success, 1 invariant/legality violation, 2 config error.
// stdout carries summaries; stderr carries diagnostics and prompts.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "selgames/run_config.hpp"
#include "selgames/strategies.hpp"
#include "selgames/verify.hpp"

namespace {

using namespace selgames;

int usage(std::ostream& os, int code) {
  os << "usage: simctl <command> [options]\n"
     << "  simulate --config FILE [--seed N] [--innings N] [--out FILE]\n"
     << "  verify   --suite NAME [--seed N] [--scale N]\n"
     << "  duel     --config FILE [--out FILE]\n"
     << "  inspect  --in FILE [--no-rebuild]\n"
     << "verify suites:";
  for (const std::string& s : verify_suite_names()) os << " " << s;
  os << " all\n";
  return code;
}

struct Args {
  std::optional<std::string> config;
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::optional<std::string> suite;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> innings;
  std::optional<std::size_t> scale;
  bool no_rebuild = false;
};

std::optional<Args> parse_args(int argc, char** argv) {
  Args a;
  for (int i = 2; i < argc; ++i) {
    const std::string flag = argv[i];
    auto value = [&]() -> std::optional<std::string> {
      if (i + 1 >= argc) return std::nullopt;
      return std::string(argv[++i]);
    };
    try {
      if (flag == "--config") {
        if (auto v = value()) a.config = *v; else return std::nullopt;
      } else if (flag == "--in") {
        if (auto v = value()) a.in = *v; else return std::nullopt;
      } else if (flag == "--out") {
        if (auto v = value()) a.out = *v; else return std::nullopt;
      } else if (flag == "--suite") {
        if (auto v = value()) a.suite = *v; else return std::nullopt;
      } else if (flag == "--seed") {
        if (auto v = value()) a.seed = std::stoull(*v); else return std::nullopt;
      } else if (flag == "--innings") {
        if (auto v = value()) a.innings = std::stoull(*v); else return std::nullopt;
      } else if (flag == "--scale") {
        if (auto v = value()) a.scale = std::stoull(*v); else return std::nullopt;
      } else if (flag == "--no-rebuild") {
        a.no_rebuild = true;
      } else {
        std::cerr << "unknown option: " << flag << "\n";
        return std::nullopt;
      }
    } catch (const std::exception&) {
      std::cerr << "bad value for " << flag << "\n";
      return std::nullopt;
    }
  }
  return a;
}

RunConfig load_config(const Args& a) {
  if (!a.config.has_value()) throw ConfigError("--config is required");
  RunConfig config = RunConfig::from_file(*a.config);
  if (a.seed.has_value()) config.seed = *a.seed;
  if (a.innings.has_value()) {
    if (*a.innings == 0) throw ConfigError("innings must be at least 1");
    config.innings = *a.innings;
    config.game.inning_cap = std::max(config.game.inning_cap, *a.innings);
  }
  if (a.out.has_value()) config.output_path = *a.out;
  if (config.output_path.empty())
    config.output_path = "transcript-" + std::to_string(config.seed) +
                         ".jsonl";
  return config;
}

void write_transcript(const Transcript& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output path: " + path);
  out << t.to_jsonl();
}

void print_summary(const Transcript& t, const std::string& path) {
  std::cout << "game: " << t.header.at("game").at("kind").get<std::string>()
            << "  innings: " << t.summary.at("inningsPlayed")
            << "  status: " << t.summary.at("status").get<std::string>()
            << "\n";
  if (t.summary.contains("fault")) {
    const json& f = t.summary.at("fault");
    std::cout << "fault: inning " << f.at("inning") << " actor "
              << f.at("actor").get<std::string>() << " rule "
              << f.at("rule").get<std::string>() << "\n";
  }
  for (const auto& [probe, innings] :
       t.summary.at("probeCoverage").items()) {
    std::cout << "probe " << probe << " covered at";
    if (innings.empty()) std::cout << " (never)";
    for (const auto& n : innings) std::cout << " " << n;
    std::cout << "\n";
  }
  std::cout << "transcript: " << path << "\n";
}

int cmd_simulate(const Args& a) {
  const RunConfig config = load_config(a);
  const Transcript t = run_simulation(config, FaultPolicy::Capture);
  write_transcript(t, config.output_path);
  print_summary(t, config.output_path);
  return t.summary.at("status") == "fault" ? 1 : 0;
}

int print_report(const VerifyReport& r) {
  std::cout << r.to_json().dump(2) << "\n";
  for (const Violation& v : r.violations)
    std::cerr << "violation [" << v.rule << "] " << v.details << "\n";
  return r.violations.empty() ? 0 : 1;
}

int cmd_verify(const Args& a) {
  if (!a.suite.has_value()) throw ConfigError("--suite is required");
  const std::uint64_t seed = a.seed.value_or(0);
  const std::size_t scale = a.scale.value_or(1);
  if (*a.suite == "all") {
    int worst = 0;
    for (const std::string& s : verify_suite_names())
      worst = std::max(worst, print_report(run_verify_suite(s, seed, scale)));
    return worst;
  }
  return print_report(run_verify_suite(*a.suite, seed, scale));
}

int cmd_inspect(const Args& a) {
  if (!a.in.has_value()) throw ConfigError("--in is required");
  std::ifstream in(*a.in);
  if (!in) throw ConfigError("cannot open transcript: " + *a.in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Transcript t = Transcript::parse_jsonl(buffer.str());
  const ValidationReport report = validate_transcript(
      t, a.no_rebuild ? OneRebuilder{} : descriptor_rebuilder());
  std::cout << report.to_json().dump(2) << "\n";
  for (const Violation& v : report.violations)
    std::cerr << "violation [" << v.rule << "] " << v.details << "\n";
  return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// duel mode: a human plays ONE inning by inning against a configured TWO.
// The session replays the accumulated script through the referee after each
// move, so every transcript it emits went through full legality checking.

struct DuelQuit {};

std::string prompt_line(const std::string& prompt) {
  std::cerr << prompt << std::flush;
  std::string line;
  if (!std::getline(std::cin, line)) throw DuelQuit{};
  // Trim.
  const auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = line.find_last_not_of(" \t\r");
  line = line.substr(begin, end - begin + 1);
  if (line == "quit" || line == "q") throw DuelQuit{};
  return line;
}

IndexSet read_index_set(const std::string& prompt, const Window& window) {
  for (;;) {
    const std::string line = prompt_line(prompt);
    std::istringstream in(line);
    std::vector<Index> indices;
    long long raw = 0;
    bool ok = !line.empty();
    while (ok && in >> raw) {
      if (raw < 0) {
        ok = false;
        break;
      }
      const Index i = static_cast<Index>(raw);
      if (!window.contains(i)) {
        std::cerr << "index " << i << " is outside the window "
                  << window.to_json().dump() << "; try again\n";
        ok = false;
        break;
      }
      indices.push_back(i);
    }
    if (ok && !in.eof()) {
      std::cerr << "could not parse an index list from '" << line
                << "'; enter space-separated indices\n";
      ok = false;
    }
    if (ok && indices.empty()) {
      std::cerr << "enter at least one index\n";
      ok = false;
    }
    if (ok) return IndexSet::of(std::move(indices));
  }
}

std::vector<Element> read_elements(const Window& window,
                                   const GroupSpec& spec) {
  std::vector<Element> out;
  for (;;) {
    const std::string line = prompt_line(
        out.empty()
            ? "  member as [[index,value],...] (at least one required): "
            : "  another member, or blank to end the inning: ");
    if (line.empty()) {
      if (!out.empty()) return out;
      std::cerr << "the offered set must be nonempty\n";
      continue;
    }
    try {
      const Element e = Element::from_json(json::parse(line), spec);
      for (Index i : e.support().indices())
        if (!window.contains(i))
          throw ConfigError("index " + std::to_string(i) +
                            " is outside the window");
      out.push_back(e);
    } catch (const std::exception& e) {
      std::cerr << "could not read that member: " << e.what() << "\n";
    }
  }
}

// Replays the human's accumulated moves; descriptor marks the source as
// non-reconstructible so offline validation skips strategy replay.
class HumanScriptOne final : public OneStrategy {
 public:
  HumanScriptOne(GameKind kind, std::vector<json> script, GroupSpec spec)
      : kind_(kind), script_(std::move(script)), spec_(std::move(spec)) {}

  OneMove move(std::size_t inning, const PlayView&) override {
    const json& entry = script_.at(inning);
    OneMove m;
    switch (kind_) {
      case GameKind::NbdCovers:
        m.nbd = NbdCover{NbdSubgroup{IndexSet::from_json(entry), false}};
        break;
      case GameKind::OpenCovers: {
        const IndexSet pins = IndexSet::from_json(entry);
        const GroupSpec spec = spec_;
        m.oracle = CoverOracle(
            [pins, spec](const Element& x) {
              return BasicOpen::coset(x, pins, spec);
            },
            pins, "human");
        break;
      }
      case GameKind::CountableOne: {
        std::vector<Element> members;
        for (const json& e : entry)
          members.push_back(Element::from_json(e, spec_));
        m.countable = members;
        break;
      }
    }
    return m;
  }

  json descriptor() const override {
    return json{{"kind", "human"}, {"reconstructible", false}};
  }

 private:
  GameKind kind_;
  std::vector<json> script_;
  GroupSpec spec_;
};

void show_two_reply(const Inning& inning) {
  std::cerr << "TWO replied: " << inning.two.dump() << "\n";
}

int cmd_duel(const Args& a) {
  const RunConfig config = load_config(a);
  const GameSpec& game = config.game;
  std::vector<json> script;
  std::vector<Element> offered;  // countable-one running offer
  Transcript last;
  bool have_transcript = false;

  std::cerr << "duel: you play ONE in " << game_kind_name(game.kind)
            << " over window " << game.window.to_json().dump() << ", "
            << config.innings << " inning cap; 'quit' ends the session\n";

  try {
    while (script.size() < config.innings) {
      const std::size_t inning = script.size();
      json move;
      switch (game.kind) {
        case GameKind::NbdCovers:
          move = read_index_set("inning " + std::to_string(inning) +
                                    " — constraint set B (indices): ",
                                game.window)
                     .to_json();
          break;
        case GameKind::OpenCovers:
          move = read_index_set("inning " + std::to_string(inning) +
                                    " — oracle pin set (indices): ",
                                game.window)
                     .to_json();
          break;
        case GameKind::CountableOne: {
          std::cerr << "inning " << inning
                    << " — extend the offered set (must grow monotonically)\n";
          for (const Element& e : read_elements(game.window, game.group))
            offered.push_back(e);
          json members = json::array();
          for (const Element& e : offered) members.push_back(e.to_json());
          move = members;
          break;
        }
      }
      script.push_back(move);

      HumanScriptOne one(game.kind, script, game.group);
      auto two = make_two_strategy(config.two_desc, game);
      const Transcript t = play_game(game, one, *two, script.size(),
                                     config.probes, config.seed,
                                     FaultPolicy::Capture);
      if (t.summary.at("status") == "fault") {
        const json& f = t.summary.at("fault");
        std::cerr << "that move faulted (" << f.at("rule").get<std::string>()
                  << "); take it back and try again\n";
        script.pop_back();
        continue;
      }
      last = t;
      have_transcript = true;
      show_two_reply(last.innings.back());
    }
  } catch (const DuelQuit&) {
    std::cerr << "\nsession ended\n";
  }

  if (!have_transcript) {
    std::cout << "no innings played\n";
    return 0;
  }
  write_transcript(last, config.output_path);
  print_summary(last, config.output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage(std::cerr, 2);
  const std::string command = argv[1];
  if (command == "--help" || command == "help") return usage(std::cout, 0);
  const std::optional<Args> args = parse_args(argc, argv);
  if (!args.has_value()) return usage(std::cerr, 2);

  try {
    if (command == "simulate") return cmd_simulate(*args);
    if (command == "verify") return cmd_verify(*args);
    if (command == "duel") return cmd_duel(*args);
    if (command == "inspect") return cmd_inspect(*args);
    std::cerr << "unknown command: " << command << "\n";
    return usage(std::cerr, 2);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const LegalityError& e) {
    std::cerr << "legality fault at inning " << e.inning() << " (" << e.actor()
              << "): " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
