#pragma once

#include <cstddef>
#include <vector>

#include "bruhat/coxeter.hpp"

namespace bruhat {

// Integral Cartan matrix, a[i][j] = <alpha_i, alpha_j^vee>. For bonds 4 and 6
// between i < j the larger index carries the short root, so a[i][j] is -2
// resp. -3 and a[j][i] is -1.
struct CartanMatrix {
  int n = 0;
  std::vector<int> a;

  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Throws std::invalid_argument on non-crystallographic bonds (anything
// outside {2,3,4,6}).
CartanMatrix cartan_of(const CoxeterMatrix& m);

struct Root {
  std::vector<int> coords;  // simple-root coordinates, all >= 0
  std::vector<int> coroot;  // simple-coroot coordinates of the dual root
  std::vector<int> omega;   // fundamental-weight coordinates

  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
};

// All positive roots, sorted by (height, coords). Closure under simple
// reflections starting from the simple roots; throws CapExceeded if the count
// passes `cap`, which signals a non-finite bond pattern.
std::vector<Root> positive_roots(const CartanMatrix& c, std::size_t cap = 100000);

}  // namespace bruhat
