#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bruhat/bwgraph.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/isomorphism.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/quotient.hpp"

using namespace bruhat;

namespace {

PointedPoset poset_of(char family, int rank, std::vector<int> j) {
  return bruhat_order(enumerate_quotient(build_weyl(make_weyl_type(family, rank)), j));
}

// random relabelling; the bottom stays at id 0
PointedPoset shuffled(const PointedPoset& p, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> to(p.size());
  std::iota(to.begin(), to.end(), 0);
  std::shuffle(to.begin() + 1, to.end(), rng);
  std::vector<int> ranks(p.size());
  for (int v = 0; v < p.size(); ++v) ranks[to[v]] = p.rank(v);
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.covers()) covers.emplace_back(to[a], to[b]);
  std::sort(covers.begin(), covers.end());
  return PointedPoset(ranks, covers);
}

bool valid_poset_witness(const PointedPoset& p, const PointedPoset& q,
                         const std::vector<int>& f) {
  if ((int)f.size() != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (int v = 0; v < p.size(); ++v) {
    if (f[v] < 0 || f[v] >= q.size() || hit[f[v]]) return false;
    hit[f[v]] = 1;
    if (q.rank(f[v]) != p.rank(v)) return false;
  }
  auto want = q.covers();
  std::sort(want.begin(), want.end());
  std::vector<std::pair<int, int>> got;
  for (auto [a, b] : p.covers()) got.emplace_back(f[a], f[b]);
  std::sort(got.begin(), got.end());
  return got == want;
}

}  // namespace

TEST_SUITE("isomorphism") {

TEST_CASE("colored graph bijections") {
  ColoredGraph g, h;
  g.n = h.n = 3;
  g.color = {7, 9, 9};
  h.color = {9, 7, 9};
  g.adj.resize(3);
  h.adj.resize(3);
  g.add_edge(0, 1, 3);
  g.add_edge(1, 2, 4);
  h.add_edge(1, 2, 3);
  h.add_edge(0, 2, 4);
  auto f = find_isomorphism(g, h);
  REQUIRE(f.has_value());
  CHECK((*f)[0] == 1);  // the unique color-7 vertex must map across
  CHECK((*f)[1] == 2);
  CHECK((*f)[2] == 0);

  h.color = {9, 9, 9};
  CHECK_FALSE(find_isomorphism(g, h).has_value());
}

TEST_CASE("edge labels matter") {
  BWGraph g, h;
  g.n = h.n = 2;
  g.black = h.black = {1, 1};
  g.add_edge(0, 1, 4);
  h.add_edge(0, 1, 6);
  CHECK_FALSE(bwgraph_isomorphic(g, h).has_value());
  h.edges[0].label = 4;
  CHECK(bwgraph_isomorphic(g, h).has_value());
}

TEST_CASE("vertex colors matter") {
  BWGraph g, h;
  g.n = h.n = 2;
  g.black = {1, 0};
  h.black = {1, 1};
  g.add_edge(0, 1);
  h.add_edge(0, 1);
  CHECK_FALSE(bwgraph_isomorphic(g, h).has_value());
}

TEST_CASE("posets with equal profiles can still differ") {
  PointedPoset a = poset_of('A', 3, {0});
  PointedPoset b = poset_of('A', 3, {1});
  REQUIRE(a.size() == b.size());
  REQUIRE(a.rank_sizes() == b.rank_sizes());
  CHECK_FALSE(poset_isomorphic(a, b).has_value());
  CHECK(poset_isomorphic(a, a).has_value());
}

TEST_CASE("shuffled posets are recognised with a checked witness") {
  for (auto [f, r, j] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'A', 3, {1}}, {'B', 3, {0, 1}}, {'D', 4, {1, 2, 3}}, {'B', 3, {2}}}) {
    PointedPoset p = poset_of(f, r, j);
    for (unsigned seed : {1u, 2u, 3u}) {
      PointedPoset q = shuffled(p, seed);
      auto w = poset_isomorphic(p, q);
      REQUIRE(w.has_value());
      CHECK(valid_poset_witness(p, q, *w));
    }
  }
}

TEST_CASE("bwgraph witness preserves structure") {
  CoxeterMatrix e6 = build_weyl(make_weyl_type('E', 6));
  BWGraph g = bw_graph(e6, {1, 2, 4, 5});
  // relabelled copy: reverse the vertex order
  BWGraph h;
  h.n = g.n;
  h.black.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) h.black[g.n - 1 - v] = g.black[v];
  for (const auto& e : g.edges) h.add_edge(g.n - 1 - e.a, g.n - 1 - e.b, e.label);
  auto f = bwgraph_isomorphic(g, h);
  REQUIRE(f.has_value());
  for (const auto& e : g.edges) {
    int a = (*f)[e.a], b = (*f)[e.b];
    bool found = false;
    for (const auto& he : h.edges)
      if ((he.a == std::min(a, b) && he.b == std::max(a, b) && he.label == e.label))
        found = true;
    CHECK(found);
  }
}

TEST_CASE("refinement hash is an invariant") {
  PointedPoset p = poset_of('D', 4, {0, 1, 2});
  for (unsigned seed : {11u, 12u}) {
    PointedPoset q = shuffled(p, seed);
    CHECK(refinement_hash(color_encode(p), 4) == refinement_hash(color_encode(q), 4));
  }
  // and it separates what a rank histogram cannot
  PointedPoset a = poset_of('A', 3, {0});
  PointedPoset b = poset_of('A', 3, {1});
  CHECK(refinement_hash(color_encode(a), 4) != refinement_hash(color_encode(b), 4));
}

TEST_CASE("size and shape mismatches fail fast") {
  PointedPoset chain3({0, 1, 2}, {{0, 1}, {1, 2}});
  PointedPoset chain4({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(poset_isomorphic(chain3, chain4).has_value());
  PointedPoset vee({0, 1, 1}, {{0, 1}, {0, 2}});
  CHECK_FALSE(poset_isomorphic(chain3, vee).has_value());
}

}  // TEST_SUITE
