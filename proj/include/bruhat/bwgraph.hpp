#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"

namespace bruhat {

// Black-and-white Coxeter graph. Edge label is the bond, 3 meaning the plain
// unlabelled edge; labels above 3 are only legal between black vertices for
// graphs fed to the BU procedure.
struct BWGraph {
  struct Edge {
    int a, b, label;
    auto operator<=>(const Edge&) const = default;
  };

  int n = 0;
  std::vector<char> black;
  std::vector<Edge> edges;  // a < b, sorted, unique

  void add_edge(int a, int b, int label = 3);
  int black_count() const;
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const BWGraph&) const = default;
};

BWGraph bw_graph(const CoxeterMatrix& m, const std::vector<int>& j);

// White components of g, each as (sorted member list, sorted black neighbour
// list), ordered by first member.
std::vector<std::pair<std::vector<int>, std::vector<int>>> white_components(const BWGraph& g);

// The BU expansion: black part kept, every white component duplicated once
// per neighbouring black vertex, components with no black neighbour dropped.
// Throws std::invalid_argument when a labelled edge meets a white vertex.
BWGraph bu_expand(const BWGraph& g);

// Left inverse of bu_expand up to isomorphism; nullopt when g is not in the
// image ("NotInImage").
std::optional<BWGraph> invert_bu(const BWGraph& g);

std::string bwgraph_to_json(const BWGraph& g);
BWGraph bwgraph_from_json(const std::string& text);
std::string bwgraph_to_dot(const BWGraph& g);

}  // namespace bruhat
