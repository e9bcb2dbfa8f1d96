#pragma once

#include <string>
#include <vector>

namespace bruhat {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> checks;

  bool pass() const;
  std::string summary() const;  // one line per check plus a verdict line
};

// Positive-root counts against the closed forms for the small-rank table.
SuiteResult run_appendix_suite();
// The four displayed quotient-length identities, families up to m + n <= 6.
SuiteResult run_lengths_suite();
// Engine order vs subword oracle for every (W, J) with |W| <= 48 plus the two
// spot pairs (A5, A4) and (D4, A3).
SuiteResult run_oracle_suite();
// Reconstruction triples for every pair of total rank <= 4, all J.
SuiteResult run_thm1_suite();
// G(X) against the BU expansion for label-free irreducible pairs of rank <= 5,
// plus the (E6, A3xA1) figure.
SuiteResult run_thmnew_suite();
// Rank <= 5 classification sweep against the expected coincidence classes.
SuiteResult run_sweep_suite();
// The four graph coincidences, length gaps, and the NotInImage case.
SuiteResult run_lemnew_suite();
// Factorisation of two-factor products: sim-classes and factor posets.
SuiteResult run_propirr_suite();
// vx against the unique-reduced-word characterisation for |W| <= 120.
SuiteResult run_lemunique_suite();

}  // namespace bruhat
