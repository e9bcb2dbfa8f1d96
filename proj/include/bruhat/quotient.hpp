#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/rootsystem.hpp"

namespace bruhat {

struct OrbitElement {
  std::vector<int> weight;  // fundamental-weight coordinates of w(lambda_J)
  int length = 0;
};

// The parabolic quotient W^J as the W-orbit of the indicator weight of S \ J.
// Elements are sorted by (length, weight), so indices refine the grading.
struct QuotientTable {
  CoxeterMatrix matrix;
  std::vector<int> j;
  CartanMatrix cartan;
  std::vector<Root> roots;  // positive roots of the ambient group
  std::vector<OrbitElement> elements;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const std::vector<int>& weight) const;

  std::unordered_map<std::string, int> index;  // packed weight -> position
};

std::string pack_weight(const std::vector<int>& w);

QuotientTable enumerate_quotient(const CoxeterMatrix& m, const std::vector<int>& j,
                                 std::size_t cap = 5000000);

// l(w0) - l(w0^J) = |Phi+(W)| - |Phi+(W_J)|, without enumerating the orbit.
long long quotient_length(const CoxeterMatrix& m, const std::vector<int>& j);

// All distinct reflections t_beta moving element idx, as (target index,
// direction) with direction +1 when the target is longer. Root order.
std::vector<std::pair<int, int>> reflection_images(const QuotientTable& q, int idx);

std::string quotient_to_json(const QuotientTable& q);

}  // namespace bruhat
