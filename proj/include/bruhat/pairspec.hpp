#pragma once

#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"

namespace bruhat {

// A parsed "GROUP/PARABOLIC" pair. The group is a product of named Weyl
// types in writing order; J is 0-based into the concatenated numbering.
struct PairSpec {
  std::vector<WeylType> factors;
  std::vector<int> j;  // sorted

  CoxeterMatrix matrix() const { return build_weyl(factors); }
};

// Grammar: group "/" parabolic
//   group     := TYPE ("x" TYPE)*
//   parabolic := "e" | TYPE ("x" TYPE)* [ "@{" INT ("," INT)* "}" ]
// Indices are 1-based generator positions. Without "@", the subset is
// resolved by type: unique up to diagram automorphism, else a ParseError
// explains the ambiguity and lists the choices.
PairSpec parse_pair_spec(const std::string& text);

// Lexicographically smallest image of j under the diagram automorphisms.
std::vector<int> canonical_subset(const CoxeterMatrix& m, const std::vector<int>& j);

// "B3/A2@{1,2}", "F4/e"; J components named largest rank first, indices
// canonicalised.
std::string pair_name(const std::vector<WeylType>& factors, const std::vector<int>& j);

}  // namespace bruhat
