// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Budgets are wall-clock upper bounds for the criteria that carry one.

#include <cstdio>
#include <string>

#include "selgames/verify.hpp"

using namespace selgames;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, const VerifyReport& r,
            double budget_ms = 0.0) {
  bool ok = r.ok();
  std::string note = std::to_string(r.cases) + " cases, " +
                     std::to_string(static_cast<long>(r.millis)) + " ms";
  if (budget_ms > 0.0 && r.millis > budget_ms) {
    ok = false;
    note += " (over the " + std::to_string(static_cast<long>(budget_ms)) +
            " ms budget)";
  }
  if (!r.ok())
    note += ", " + std::to_string(r.violations.size()) + " violations";
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str(), note.c_str());
  for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i)
    std::printf("        %s: %s\n", r.violations[i].rule.c_str(),
                r.violations[i].details.c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  report(1, "group and coset algebra, randomized laws",
         verify_group_axioms(1, 10'000), 10'000.0);
  report(2, "compact covering lemma vs exhaustive enumeration",
         verify_lebesgue_compact(2, 1'000), 30'000.0);
  report(3, "P-group covering lemma under probe stress",
         verify_lebesgue_pgroup(3, 1'000, 200));
  report(4, "neighborhood game: claims and schedule-bounded coverage",
         verify_nbd_game(4, 100, 64), 60'000.0);
  report(5, "open games: containment invariant and probe coverage",
         verify_oo_games(5, 100, 48));
  report(6, "counter-play defeats the adversary families",
         verify_counterplay(6, 64));
  report(7, "bookkeeping fairness, exact bound",
         verify_schedule(7, 50, 8, 4));
  report(8, "window-extension invariance of recorded plays",
         verify_window_invariance(8, 50));
  report(9, "selector coverage at enumeration rank",
         verify_selector(9, 100));

  if (failures > 0) {
    std::printf("%d criteria failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
