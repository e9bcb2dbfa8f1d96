#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <json.hpp>

#include "bruhat/bwgraph.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/invariants.hpp"
#include "bruhat/isomorphism.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/quotient.hpp"

using namespace bruhat;

namespace {

PointedPoset poset_of(const CoxeterMatrix& m, std::vector<int> j) {
  return bruhat_order(enumerate_quotient(m, j));
}

PointedPoset poset_of(char family, int rank, std::vector<int> j) {
  return poset_of(build_weyl(make_weyl_type(family, rank)), j);
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("x1 collects the atoms") {
  PointedPoset p = poset_of('A', 3, {1});
  CHECK(x1_of(p) == std::vector<int>{1, 2});
  CHECK(x1_of(poset_of('B', 2, {})) == std::vector<int>{1, 2});
  CHECK(x1_of(poset_of('A', 3, {0, 1})) == std::vector<int>{1});
}

TEST_CASE("x2 filters by exact cover set") {
  PointedPoset p = poset_of('B', 2, {});
  auto x1 = x1_of(p);
  CHECK(x2_of(p, x1).size() == 2);  // both rank-2 elements cover both atoms
  CHECK(x2_of(p, {x1[0]}).empty());
  CHECK(x2_of(p, {x1[1]}).empty());
}

TEST_CASE("x0 and xinf on the dihedral poset") {
  PointedPoset p = poset_of('B', 2, {});
  auto x1 = x1_of(p);
  SubPoset whole = x0_of(p, x1);
  CHECK(whole.elements.size() == 8);  // the full quotient comes back
  CHECK(whole.poset.length() == 4);
  SubPoset one = x0_of(p, {x1[0]});
  CHECK(one.elements == std::vector<int>{0, x1[0]});
  SubPoset inf_one = xinf_of(p, {x1[0]});
  CHECK(inf_one.elements == one.elements);  // X^inf(a) = X^0(a)
  CHECK(xinf_of(p, x1).elements.size() == 8);
}

TEST_CASE("subposet inherits the order") {
  PointedPoset p = poset_of('A', 3, {1});
  SubPoset s = xinf_of(p, {1});
  // the chain 0 < 1 < 4: one rank-2 element has atom 1 alone below it
  REQUIRE(s.elements == std::vector<int>{0, 1, 4});
  CHECK(s.poset.length() == 2);
  CHECK(s.poset.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("mu reads off bond orders") {
  PointedPoset b2 = poset_of('B', 2, {});
  auto x1 = x1_of(b2);
  CHECK(mu(b2, x1[0], x1[1]) == 4);
  PointedPoset g2 = poset_of('G', 2, {});
  auto y1 = x1_of(g2);
  CHECK(mu(g2, y1[0], y1[1]) == 6);
  PointedPoset p = poset_of('A', 3, {1});
  CHECK(mu(p, 1, 2) == 2);  // the two atoms commute
}

TEST_CASE("nu counts braided parabolic neighbours") {
  PointedPoset p = poset_of('B', 3, {0, 1});
  auto x1 = x1_of(p);
  REQUIRE(x1.size() == 1);
  CHECK(nu(p, x1[0]) == 1);
  PointedPoset q = poset_of('B', 2, {});
  for (int a : x1_of(q)) CHECK(nu(q, a) == 0);  // empty parabolic
  PointedPoset c = poset_of('A', 3, {1});
  CHECK(nu(c, 1) == 1);
  CHECK(nu(c, 2) == 1);
}

TEST_CASE("set identities hold across sample pairs") {
  for (auto [f, r, j] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'A', 3, {1}}, {'B', 3, {0, 1}}, {'B', 3, {2}}, {'D', 4, {0, 2, 3}}}) {
    PointedPoset p = poset_of(f, r, j);
    auto x1 = x1_of(p);
    std::vector<std::vector<int>> subsets = {{}};
    for (int a : x1) subsets.push_back({a});
    if (x1.size() >= 2) subsets.push_back({x1[0], x1[1]});
    for (const auto& i_set : subsets) {
      auto x0 = as_set(x0_of(p, i_set).elements);
      auto xi = as_set(xinf_of(p, i_set).elements);
      // X^0(I) sits inside X^inf(I)
      CHECK(std::includes(xi.begin(), xi.end(), x0.begin(), x0.end()));
      // X^inf(I) meets X1 exactly in I
      std::set<int> meet;
      for (int a : x1)
        if (xi.count(a)) meet.insert(a);
      CHECK(meet == as_set(i_set));
      // rank-2 members of X^0(I) are exactly X2(I)
      std::set<int> r2;
      for (int v : x0)
        if (p.rank(v) == 2) r2.insert(v);
      CHECK(r2 == as_set(x2_of(p, i_set)));
    }
    for (int a : x1) CHECK(x0_of(p, {a}).elements == xinf_of(p, {a}).elements);
  }
}

TEST_CASE("leads_to on a quotient with a short twist") {
  PointedPoset p = poset_of('A', 3, {1});
  CHECK(leads_to(p, 1, 2));
  CHECK(leads_to(p, 2, 1));
  PointedPoset q = poset_of('A', 3, {0});
  auto x1 = x1_of(q);
  CHECK_FALSE(leads_to(q, x1[0], x1[1]));
  CHECK_FALSE(leads_to(q, x1[1], x1[0]));
}

TEST_CASE("sim classes split along components") {
  CoxeterMatrix m = build_weyl({make_weyl_type('A', 2), make_weyl_type('B', 2)});
  PointedPoset p = poset_of(m, {});
  auto classes = sim_classes(p);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 2);
  CHECK(classes[1].size() == 2);
  auto factors = factor_posets(p);
  REQUIRE(factors.size() == 2);
  std::multiset<int> sizes{factors[0].poset.size(), factors[1].poset.size()};
  CHECK(sizes == std::multiset<int>{6, 8});
  CHECK(poset_isomorphic(factors[0].poset, poset_of('A', 2, {})).has_value());
  CHECK(poset_isomorphic(factors[1].poset, poset_of('B', 2, {})).has_value());
}

TEST_CASE("connected quotients have one sim class") {
  PointedPoset p = poset_of('A', 3, {1});
  auto classes = sim_classes(p);
  REQUIRE(classes.size() == 1);  // the commuting atoms are glued by leads_to
  CHECK(as_set(classes[0]) == std::set<int>{1, 2});
}

TEST_CASE("vx lists the chain-bottomed elements") {
  PointedPoset p = poset_of('A', 3, {1});
  CHECK(vx(p) == std::vector<int>{1, 2, 4, 5});
  for (int v : vx(p)) {
    int per_rank_below = 0;
    for (int u = 0; u < p.size(); ++u)
      if (u != 0 && p.leq(u, v)) ++per_rank_below;
    CHECK(per_rank_below == p.rank(v));  // downset is a chain
  }
  // a 6-chain quotient: every nonbottom element qualifies
  PointedPoset chain = poset_of('B', 3, {1, 2});
  CHECK(vx(chain).size() == 5);
}

TEST_CASE("g of the elementary quotients") {
  BWGraph k22 = g_of(poset_of('A', 3, {1}));
  CHECK(k22.n == 4);
  CHECK(k22.black == std::vector<char>{1, 1, 0, 0});
  CHECK(k22.edges == std::vector<BWGraph::Edge>{{0, 2, 3}, {0, 3, 3}, {1, 2, 3}, {1, 3, 3}});

  BWGraph star = g_of(poset_of('B', 3, {0, 1}));
  CHECK(star.n == 4);
  CHECK(star.black == std::vector<char>{1, 0, 0, 0});
  CHECK(star.edges == std::vector<BWGraph::Edge>{{0, 1, 3}, {1, 2, 3}, {1, 3, 3}});

  // both g2 parabolics give one black vertex against a white path of four
  for (std::vector<int> j : {std::vector<int>{0}, std::vector<int>{1}}) {
    BWGraph path = g_of(poset_of('G', 2, j));
    CHECK(path.n == 5);
    CHECK(path.black == std::vector<char>{1, 0, 0, 0, 0});
    CHECK(path.edges ==
          std::vector<BWGraph::Edge>{{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}});
  }
}

TEST_CASE("reconstruction triple of a chain") {
  PointedPoset chain = poset_of('A', 3, {0, 1});
  ReconTriple t = triple_of(chain);
  CHECK(t.x1 == std::vector<int>{1});
  CHECK(t.mu.empty());
  REQUIRE(t.nu.size() == 1);
  CHECK(t.nu[0] == std::pair<int, long long>{1, 1});
  auto doc = nlohmann::json::parse(triple_to_json(t));
  CHECK(doc["x1"] == std::vector<int>{1});
  CHECK(doc["nu"][0][1] == 1);
}

TEST_CASE("triple of a square of commuting generators") {
  CoxeterMatrix m = build_weyl({make_weyl_type('A', 1), make_weyl_type('A', 1)});
  PointedPoset p = poset_of(m, {});
  ReconTriple t = triple_of(p);
  REQUIRE(t.mu.size() == 1);
  CHECK(std::get<2>(t.mu[0]) == 2);
  for (auto [a, n] : t.nu) CHECK(n == 0);
}

}  // TEST_SUITE
