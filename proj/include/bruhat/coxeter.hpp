#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace bruhat {

// Symmetric Coxeter matrix over generators 0..n-1. m(i,i) = 1, off-diagonal
// entries >= 2, kInfinity for infinite bonds. Values 2 mean "no edge" in the
// Coxeter graph; edges carry the bond as label (3 drawn unlabelled).
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  CoxeterMatrix() = default;
  explicit CoxeterMatrix(int rank);

  int rank() const { return n_; }
  int m(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  void set_m(int i, int j, int value);

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> e_;
};

struct WeylType {
  char family = 'A';
  int rank = 0;

  std::string name() const;
  auto operator<=>(const WeylType&) const = default;
};

// Family bounds: A n>=1, B n>=2, D n>=4, E 6..8, F 4, G 2.
bool valid_weyl_type(char family, int rank);
WeylType make_weyl_type(char family, int rank);

CoxeterMatrix build_weyl(WeylType t);
CoxeterMatrix build_weyl(const std::vector<WeylType>& factors);
CoxeterMatrix product(const std::vector<CoxeterMatrix>& ms);

// Induced matrix on the given vertices (order kept).
CoxeterMatrix submatrix(const CoxeterMatrix& m, const std::vector<int>& vertices);

std::vector<std::vector<int>> connected_components(const CoxeterMatrix& m);
std::vector<std::vector<int>> connected_components(const CoxeterMatrix& m,
                                                   const std::vector<int>& subset);

// Connected and acyclic as a graph (bonds >= 3 are the edges).
bool is_simple(const CoxeterMatrix& m);

// Type of a connected Weyl graph, nullopt if not one of A/B/D/E/F/G.
std::optional<WeylType> recognize_irreducible(const CoxeterMatrix& m);
// Per-component types in component order, nullopt if any component fails.
std::optional<std::vector<WeylType>> recognize(const CoxeterMatrix& m);

std::uint64_t group_order(WeylType t);
std::optional<std::uint64_t> group_order(const CoxeterMatrix& m);

// Length of the longest element, i.e. the number of positive roots.
long long longest_length(WeylType t);
std::optional<long long> longest_length(const CoxeterMatrix& m);

// All label-preserving vertex permutations, identity first, sorted.
std::vector<std::vector<int>> diagram_automorphisms(const CoxeterMatrix& m);

// "B3", "A3xA1", "e" for the empty list. Factor order is kept as given.
std::string type_product_name(const std::vector<WeylType>& ts);

}  // namespace bruhat
