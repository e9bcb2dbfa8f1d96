#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bruhat/bwgraph.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

// Vertex-coloured graph with labelled undirected edges, the common currency
// for isomorphism checks. Posets enter as Hasse diagrams with rank as colour,
// which is enough because covers always cross adjacent ranks.
struct ColoredGraph {
  int n = 0;
  std::vector<std::uint64_t> color;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, label)

  void add_edge(int a, int b, int label = 0);
};

ColoredGraph color_encode(const BWGraph& g);
ColoredGraph color_encode(const PointedPoset& p);

// Joint colour refinement followed by backtracking. Returns a colour- and
// label-preserving bijection g -> h, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h);

// Canonical hash of the stable refinement partition; isomorphic graphs agree.
std::uint64_t refinement_hash(const ColoredGraph& g, int rounds);

std::optional<std::vector<int>> bwgraph_isomorphic(const BWGraph& g, const BWGraph& h);
std::optional<std::vector<int>> poset_isomorphic(const PointedPoset& p, const PointedPoset& q);

}  // namespace bruhat
