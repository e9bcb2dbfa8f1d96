#pragma once

#include <cstdint>
#include <vector>

#include "bruhat/bitset.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/rootsystem.hpp"

namespace bruhat {

// Brute-force reference implementation. Elements are stored as integral
// matrices acting on simple-root coordinates, lengths are Cayley-graph BFS
// depths, and Bruhat order comes from the subword property. Kept deliberately
// separate from the orbit-based engine so the two can cross-check each other.

struct GroupElement {
  std::vector<int> word;  // one reduced word (BFS spanning tree)
  std::vector<int> mat;   // rank x rank, row-major
};

class OracleGroup {
 public:
  static OracleGroup enumerate(const CoxeterMatrix& m, std::size_t cap = 10000);

  int size() const { return static_cast<int>(els_.size()); }
  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const GroupElement& element(int g) const { return els_[g]; }
  int length(int g) const { return static_cast<int>(els_[g].word.size()); }

  int mult_gen(int g, int s) const { return mult_[static_cast<std::size_t>(g) * rank() + s]; }
  // True iff l(g s) < l(g), read off the sign of g(alpha_s).
  bool right_descent(int g, int s) const;

  int longest() const;  // index of w0

 private:
  CoxeterMatrix matrix_;
  std::vector<GroupElement> els_;
  std::vector<int> mult_;
};

// All u with u <= v in Bruhat order, as flags indexed like the group.
std::vector<char> oracle_downset(const OracleGroup& g, int v);
bool bruhat_le(const OracleGroup& g, int u, int v);

// Minimal-length coset representatives for W/W_J: no right descent inside J.
// Sorted by (length, element index).
std::vector<int> min_coset_reps(const OracleGroup& g, const std::vector<int>& j);

// Bruhat order restricted to the representatives; row r = set of reps below
// rep r, indexed by position in `reps`.
std::vector<Bitset> oracle_rep_order(const OracleGroup& g, const std::vector<int>& reps);

// Weight w(lambda_J) in fundamental-weight coordinates, where lambda_J is the
// 0/1 indicator of S \ J. Matches the orbit engine's labelling.
std::vector<int> oracle_weight(const OracleGroup& g, const CartanMatrix& c,
                               const std::vector<int>& j, int elem);

std::uint64_t count_reduced_words(const OracleGroup& g, int elem);
std::vector<int> support(const OracleGroup& g, int elem);

// True iff every representative below `rep` (inclusive) has exactly one
// reduced word.
bool unique_below(const OracleGroup& g, const std::vector<int>& reps,
                  const std::vector<Bitset>& order, int rep_pos);

}  // namespace bruhat
