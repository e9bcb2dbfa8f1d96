// Acceptance gate: the nine headline criteria, one verdict line each.
// A criterion passes when its suite is green and it finished inside budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bruhat/suites.hpp"

namespace {

struct Criterion {
  const char* title;
  double budget_seconds;
  std::function<bruhat::SuiteResult()> run;
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Criterion> criteria = {
      {"1. longest-length table A1-A7 B2-B7 D4-D7 E6 F4 G2", 5, bruhat::run_appendix_suite},
      {"2. quotient length identities and family formulas", 10, bruhat::run_lengths_suite},
      {"3. engine equals subword oracle up to |W| = 48 plus spots", 120, bruhat::run_oracle_suite},
      {"4. reconstruction triples for all pairs of rank <= 4", 300, bruhat::run_thm1_suite},
      {"5. graph reconstruction equals expansion, rank <= 5", 600, bruhat::run_thmnew_suite},
      {"6. rank <= 5 coincidence classification sweep", 900, bruhat::run_sweep_suite},
      {"7. graph coincidence families and NotInImage case", 300, bruhat::run_lemnew_suite},
      {"8. two-factor product factorisation", 300, bruhat::run_propirr_suite},
      {"9. chain elements equal unique-word characterisation", 120, bruhat::run_lemunique_suite},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = clock::now();
    bruhat::SuiteResult res = c.run();
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    bool in_budget = secs < c.budget_seconds;
    bool ok = res.pass() && in_budget;
    std::printf("[%s] %s (%.1fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", c.title, secs,
                c.budget_seconds);
    if (!ok) {
      ++failures;
      if (!in_budget) std::printf("       over budget\n");
      for (const auto& line : res.checks)
        if (!line.pass)
          std::printf("       failing: %s%s%s\n", line.name.c_str(),
                      line.detail.empty() ? "" : " -- ", line.detail.c_str());
    }
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
