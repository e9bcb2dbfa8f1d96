#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/invariants.hpp"
#include "bruhat/pairspec.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

struct CoxeterPair {
  std::vector<WeylType> factors;
  std::vector<int> j;  // canonical (lex-min orbit representative), sorted
  CoxeterMatrix matrix;
  std::string name;
  std::uint64_t quotient_size = 0;
};

CoxeterPair make_coxeter_pair(const std::vector<WeylType>& factors, std::vector<int> j);

// Cheap order-invariants of a pointed graded poset; equal fingerprints are a
// prerequisite for isomorphism, never a proof.
struct Fingerprint {
  long long size = 0;
  long long length = 0;
  std::vector<long long> rank_histogram;
  std::vector<std::pair<int, int>> degrees;  // sorted (down, up) over all elements
  std::uint64_t refine = 0;                  // neighbourhood-refinement hash
  std::vector<long long> mu_multiset;
  std::vector<long long> nu_multiset;

  auto operator<=>(const Fingerprint&) const = default;
  std::string digest() const;
};

Fingerprint fingerprint_of(const PointedPoset& p);

struct PairEnumeration {
  std::vector<CoxeterPair> pairs;
  std::vector<std::pair<std::string, std::uint64_t>> skipped;  // name, quotient size
};

// All pairs (W, J) with W irreducible of rank <= max_rank and J canonical up
// to diagram automorphism; pairs with quotient larger than max_quotient go to
// `skipped`.
PairEnumeration enumerate_pairs(int max_rank, std::uint64_t max_quotient);

// The classification's coincidence patterns instantiated within the bounds:
// chains A_{2n-1}/A_{2n-2} = B_n/B_{n-1} (= G2/A1 at length 6), the cube-like
// B_n/A_{n-1} = D_{n+1}/A_n for n >= 3, and the one-point quotients (W, S).
// Classes with fewer than two in-bound members are dropped.
std::vector<std::vector<std::string>> expected_coincidences(int max_rank,
                                                            std::uint64_t max_quotient);

struct CoincidenceReport {
  struct Class {
    std::vector<std::string> members;  // canonical pair names, sorted
    std::string fingerprint;
    std::uint64_t quotient_size = 0;
  };
  std::vector<Class> classes;  // nontrivial classes only, sorted by first member
  std::size_t pair_count = 0;
  std::size_t singleton_count = 0;
  std::vector<std::pair<std::string, std::uint64_t>> skipped;
  std::vector<std::string> discrepancies;  // vs expected_coincidences
  bool matches_expected = false;
};

CoincidenceReport classify(int max_rank, std::uint64_t max_quotient, int jobs = 1);
std::string report_to_json(const CoincidenceReport& r);

struct Theorem1Report {
  bool x1_ok = false, mu_ok = false, nu_ok = false;
  std::string detail;
  bool ok() const { return x1_ok && mu_ok && nu_ok; }
};

// Checks the reconstruction triple of (W^J, <=_B) against the Coxeter data:
// X1 = S \ J via the weight labelling, mu = m on S \ J, nu = J-neighbour
// counts.
Theorem1Report verify_theorem1(const CoxeterMatrix& m, const std::vector<int>& j);

struct FamilyInstance {
  std::string family;  // "B/D" or "B/A"
  int m = 0, n = 0;
  std::vector<int> sub;  // the P resp. Q subset, 0-based
  std::string left, right;
  bool bw_match = false;       // claimed: G(left) isomorphic to G(right)
  long long len_left = 0, len_right = 0, expected_diff = 0;
  bool diff_ok = false;        // claimed: len_left - len_right = expected_diff
  bool posets_distinct = false;
};

// Both graph-coincidence families with all prefix parabolics, for
// 1 <= m, 2 <= n, m + n <= mn_bound:
//   B/D: (B_{m+n}, P x A_{n-1}) vs (D_{m+n+1}, P x A_n)      diff -m
//   B/A: (B_{m+n}, Q x B_{n-1}) vs (A_{m+2n-1}, Q x A_{2n-2}) diff m(m+1)/2
std::vector<FamilyInstance> lemnew_families_check(int mn_bound);

// G(X), then the BU inverse; nullopt means Undecided.
std::optional<BWGraph> reconstruct_pair(const PointedPoset& p);

}  // namespace bruhat
