#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "selgames/run_config.hpp"

using namespace selgames;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code = -1;
  std::string output;  // stdout and stderr combined
};

CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
    r.output.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string simctl() { return SIMCTL_PATH; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "selgames-cli-tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = scratch() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

json base_config() {
  return json{{"game", "nbd-covers"},
              {"track", "product"},
              {"group", json{{"component", json{{"kind", "integers"}}}}},
              {"window", 3},
              {"innings", 8},
              {"one",
               json{{"kind", "randomNbd"}, {"seed", 9}, {"growth", 1}}},
              {"two", json{{"kind", "nbd"}}},
              {"seed", 9}};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("simulate writes a validating transcript and exits zero") {
  const fs::path cfg = write_file("sim.json", base_config().dump());
  const fs::path out = scratch() / "sim.jsonl";
  const CmdResult r = run_cmd(simctl() + " simulate --config " +
                              cfg.string() + " --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.output.find("status: truncated") != std::string::npos);
  CHECK(r.output.find("probe") != std::string::npos);

  const Transcript t = Transcript::parse_jsonl(slurp(out));
  CHECK(t.innings.size() == 8);
  CHECK(validate_transcript(t, descriptor_rebuilder()).ok());
}

TEST_CASE("command-line overrides beat the config file") {
  const fs::path cfg = write_file("sim.json", base_config().dump());
  const fs::path out = scratch() / "override.jsonl";
  const CmdResult r =
      run_cmd(simctl() + " simulate --config " + cfg.string() +
              " --seed 123 --innings 12 --out " + out.string());
  CHECK(r.code == 0);
  const Transcript t = Transcript::parse_jsonl(slurp(out));
  CHECK(t.innings.size() == 12);
  CHECK(t.header.at("seed") == 123);
}

TEST_CASE("config problems exit two") {
  json bad = base_config();
  bad["innings"] = 0;
  const fs::path cfg = write_file("bad.json", bad.dump());
  CHECK(run_cmd(simctl() + " simulate --config " + cfg.string()).code == 2);
  CHECK(run_cmd(simctl() + " simulate --config /nonexistent.json").code == 2);
  CHECK(run_cmd(simctl() + " simulate").code == 2);
  CHECK(run_cmd(simctl() + " verify --suite nosuch").code == 2);
  CHECK(run_cmd(simctl() + " verify").code == 2);
  CHECK(run_cmd(simctl()).code == 2);
  CHECK(run_cmd(simctl() + " frobnicate").code == 2);
  CHECK(run_cmd(simctl() + " simulate --innings notanumber --config x").code ==
        2);
  CHECK(run_cmd(simctl() + " help").code == 0);
}

TEST_CASE("a faulting play exits one and names the rule") {
  json faulty = base_config();
  faulty["one"] = json{{"kind", "scriptedNbd"},
                       {"script", json::array({json::array({0}),
                                               json::array({7})})}};
  const fs::path cfg = write_file("fault.json", faulty.dump());
  const fs::path out = scratch() / "fault.jsonl";
  const CmdResult r = run_cmd(simctl() + " simulate --config " + cfg.string() +
                              " --out " + out.string());
  CHECK(r.code == 1);
  CHECK(r.output.find("status: fault") != std::string::npos);
  CHECK(r.output.find("one-window") != std::string::npos);
}

TEST_CASE("verify runs a named suite") {
  const CmdResult r = run_cmd(simctl() + " verify --suite schedule --seed 3");
  CHECK(r.code == 0);
  CHECK(r.output.find("\"suite\": \"schedule\"") != std::string::npos);
  CHECK(r.output.find("\"violations\"") != std::string::npos);
}

TEST_CASE("inspect replays transcripts and flags tampering") {
  const fs::path cfg = write_file("sim.json", base_config().dump());
  const fs::path out = scratch() / "inspect.jsonl";
  REQUIRE(run_cmd(simctl() + " simulate --config " + cfg.string() +
                  " --out " + out.string())
              .code == 0);
  CHECK(run_cmd(simctl() + " inspect --in " + out.string()).code == 0);
  CHECK(run_cmd(simctl() + " inspect --in " + out.string() + " --no-rebuild")
            .code == 0);
  CHECK(run_cmd(simctl() + " inspect --in /nonexistent.jsonl").code == 2);

  // Duplicate the first inning record: the replayed play now numbers its
  // innings wrongly, which the validator must name.
  std::istringstream lines(slurp(out));
  std::string line, tampered;
  std::size_t k = 0;
  while (std::getline(lines, line)) {
    tampered += line + "\n";
    if (k++ == 1) tampered += line + "\n";
  }
  const fs::path bad = write_file("tampered.jsonl", tampered);
  const CmdResult r = run_cmd(simctl() + " inspect --in " + bad.string());
  CHECK(r.code == 1);
  CHECK(r.output.find("inning-numbering") != std::string::npos);
}

TEST_CASE("shipped sample configs simulate cleanly") {
  for (const auto& entry : fs::directory_iterator(CONFIG_DIR)) {
    const fs::path out =
        scratch() / (entry.path().stem().string() + ".jsonl");
    const CmdResult r =
        run_cmd(simctl() + " simulate --config " + entry.path().string() +
                " --out " + out.string());
    INFO(entry.path().string());
    CHECK(r.code == 0);
    const Transcript t = Transcript::parse_jsonl(slurp(out));
    CHECK(validate_transcript(t, descriptor_rebuilder()).ok());

    // The neighborhood-game sample covers every probe at least twice.
    if (entry.path().stem() == "corson-nbd")
      for (const auto& [probe, hits] :
           t.summary.at("probeCoverage").items())
        CHECK(hits.size() >= 2);
  }
}

TEST_CASE("duel plays scripted standard input") {
  json cfg_json = base_config();
  cfg_json["innings"] = 4;
  const fs::path cfg = write_file("duel.json", cfg_json.dump());
  const fs::path out = scratch() / "duel.jsonl";

  SUBCASE("two innings then quit") {
    const fs::path stdin_file = write_file("duel-in.txt", "0\n0 1\nquit\n");
    const CmdResult r =
        run_cmd(simctl() + " duel --config " + cfg.string() + " --out " +
                out.string() + " < " + stdin_file.string());
    CHECK(r.code == 0);
    const Transcript t = Transcript::parse_jsonl(slurp(out));
    CHECK(t.innings.size() == 2);
    CHECK(t.header.at("one").at("kind") == "human");
    CHECK(validate_transcript(t, descriptor_rebuilder()).ok());
    CHECK(t.innings[1].one.at("B") == json::array({0, 1}));
  }

  SUBCASE("malformed and out-of-window input is reprompted") {
    const fs::path stdin_file =
        write_file("duel-in.txt", "9\nwat\n0\nquit\n");
    const CmdResult r =
        run_cmd(simctl() + " duel --config " + cfg.string() + " --out " +
                out.string() + " < " + stdin_file.string());
    CHECK(r.code == 0);
    CHECK(r.output.find("outside the window") != std::string::npos);
    CHECK(r.output.find("could not parse") != std::string::npos);
    const Transcript t = Transcript::parse_jsonl(slurp(out));
    CHECK(t.innings.size() == 1);
  }

  SUBCASE("constraint sets may move freely between innings") {
    const fs::path stdin_file =
        write_file("duel-in.txt", "0 1\n2\n0 1 2\nquit\n");
    const CmdResult r =
        run_cmd(simctl() + " duel --config " + cfg.string() + " --out " +
                out.string() + " < " + stdin_file.string());
    CHECK(r.code == 0);
    const Transcript t = Transcript::parse_jsonl(slurp(out));
    CHECK(t.innings.size() == 3);
    CHECK(t.innings[1].one.at("B") == json::array({2}));
    CHECK(validate_transcript(t, descriptor_rebuilder()).ok());
  }

  SUBCASE("quitting immediately writes nothing") {
    const fs::path stdin_file = write_file("duel-in.txt", "quit\n");
    const CmdResult r = run_cmd(simctl() + " duel --config " + cfg.string() +
                                " < " + stdin_file.string());
    CHECK(r.code == 0);
    CHECK(r.output.find("no innings played") != std::string::npos);
  }
}
