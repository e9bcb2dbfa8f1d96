#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "bruhat/coxeter.hpp"

using namespace bruhat;

TEST_SUITE("coxeter") {

TEST_CASE("matrix basics and validation") {
  CoxeterMatrix m(3);
  CHECK(m.rank() == 3);
  CHECK(m.m(0, 0) == 1);
  CHECK(m.m(0, 2) == 2);
  m.set_m(0, 1, 4);
  CHECK(m.m(0, 1) == 4);
  CHECK(m.m(1, 0) == 4);
  CHECK_THROWS_AS(m.set_m(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.set_m(0, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(m.set_m(0, 3, 3), std::invalid_argument);
  m.set_m(1, 2, CoxeterMatrix::kInfinity);
  CHECK(m.m(2, 1) == CoxeterMatrix::kInfinity);
}

TEST_CASE("type bounds") {
  CHECK(valid_weyl_type('A', 1));
  CHECK(valid_weyl_type('B', 2));
  CHECK(valid_weyl_type('D', 4));
  CHECK(valid_weyl_type('E', 8));
  CHECK_FALSE(valid_weyl_type('A', 0));
  CHECK_FALSE(valid_weyl_type('B', 1));
  CHECK_FALSE(valid_weyl_type('D', 3));
  CHECK_FALSE(valid_weyl_type('E', 5));
  CHECK_FALSE(valid_weyl_type('F', 3));
  CHECK_FALSE(valid_weyl_type('G', 3));
  CHECK_FALSE(valid_weyl_type('H', 3));
  CHECK_THROWS_AS(make_weyl_type('D', 2), std::invalid_argument);
}

TEST_CASE("diagram numbering") {
  CoxeterMatrix a3 = build_weyl(make_weyl_type('A', 3));
  CHECK(a3.m(0, 1) == 3);
  CHECK(a3.m(1, 2) == 3);
  CHECK(a3.m(0, 2) == 2);

  CoxeterMatrix b4 = build_weyl(make_weyl_type('B', 4));
  CHECK(b4.m(0, 1) == 3);
  CHECK(b4.m(1, 2) == 3);
  CHECK(b4.m(2, 3) == 4);  // the 4-bond joins the last two generators

  CoxeterMatrix d5 = build_weyl(make_weyl_type('D', 5));
  CHECK(d5.m(0, 1) == 3);
  CHECK(d5.m(1, 2) == 3);
  CHECK(d5.m(2, 3) == 3);
  CHECK(d5.m(2, 4) == 3);  // fork: both leaves hang off generator 3
  CHECK(d5.m(3, 4) == 2);

  CoxeterMatrix e6 = build_weyl(make_weyl_type('E', 6));
  CHECK(e6.m(0, 1) == 3);
  CHECK(e6.m(1, 2) == 3);
  CHECK(e6.m(2, 3) == 3);
  CHECK(e6.m(3, 4) == 3);
  CHECK(e6.m(2, 5) == 3);  // branch vertex
  CHECK(e6.m(4, 5) == 2);

  CoxeterMatrix f4 = build_weyl(make_weyl_type('F', 4));
  CHECK(f4.m(0, 1) == 3);
  CHECK(f4.m(1, 2) == 4);
  CHECK(f4.m(2, 3) == 3);

  CoxeterMatrix g2 = build_weyl(make_weyl_type('G', 2));
  CHECK(g2.m(0, 1) == 6);
}

TEST_CASE("orders and longest lengths") {
  CHECK(group_order(make_weyl_type('A', 3)) == 24);
  CHECK(group_order(make_weyl_type('A', 7)) == 40320);
  CHECK(group_order(make_weyl_type('B', 2)) == 8);
  CHECK(group_order(make_weyl_type('B', 5)) == 3840);
  CHECK(group_order(make_weyl_type('D', 4)) == 192);
  CHECK(group_order(make_weyl_type('D', 6)) == 23040);
  CHECK(group_order(make_weyl_type('E', 6)) == 51840);
  CHECK(group_order(make_weyl_type('F', 4)) == 1152);
  CHECK(group_order(make_weyl_type('G', 2)) == 12);

  CHECK(longest_length(make_weyl_type('A', 7)) == 28);
  CHECK(longest_length(make_weyl_type('B', 6)) == 36);
  CHECK(longest_length(make_weyl_type('D', 7)) == 42);
  CHECK(longest_length(make_weyl_type('E', 6)) == 36);
  CHECK(longest_length(make_weyl_type('F', 4)) == 24);
  CHECK(longest_length(make_weyl_type('G', 2)) == 6);
}

TEST_CASE("matrix overloads of order and length") {
  CoxeterMatrix m = build_weyl({make_weyl_type('A', 2), make_weyl_type('B', 2)});
  auto order = group_order(m);
  REQUIRE(order.has_value());
  CHECK(*order == 48);
  auto len = longest_length(m);
  REQUIRE(len.has_value());
  CHECK(*len == 3 + 4);

  CoxeterMatrix h2(2);
  h2.set_m(0, 1, 5);
  CHECK_FALSE(group_order(h2).has_value());
  CHECK_FALSE(longest_length(h2).has_value());
}

TEST_CASE("products and components") {
  CoxeterMatrix m = build_weyl({make_weyl_type('A', 2), make_weyl_type('B', 2)});
  CHECK(m.rank() == 4);
  CHECK(m.m(1, 2) == 2);  // no bond across factors
  CHECK(m.m(2, 3) == 4);
  auto comps = connected_components(m);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});

  auto sub = connected_components(m, {0, 2, 3});
  REQUIRE(sub.size() == 2);
  CHECK(sub[0] == std::vector<int>{0});
  CHECK(sub[1] == std::vector<int>{2, 3});

  CHECK(is_simple(build_weyl(make_weyl_type('D', 5))));
  CHECK_FALSE(is_simple(m));
}

TEST_CASE("submatrix keeps order") {
  CoxeterMatrix b4 = build_weyl(make_weyl_type('B', 4));
  CoxeterMatrix s = submatrix(b4, {3, 2, 0});
  CHECK(s.rank() == 3);
  CHECK(s.m(0, 1) == 4);
  CHECK(s.m(0, 2) == 2);
  CHECK(s.m(1, 2) == 2);
}

TEST_CASE("recognize round-trips every type") {
  std::vector<WeylType> types;
  for (int n = 1; n <= 8; ++n) types.push_back(make_weyl_type('A', n));
  for (int n = 2; n <= 8; ++n) types.push_back(make_weyl_type('B', n));
  for (int n = 4; n <= 8; ++n) types.push_back(make_weyl_type('D', n));
  for (int n = 6; n <= 8; ++n) types.push_back(make_weyl_type('E', n));
  types.push_back(make_weyl_type('F', 4));
  types.push_back(make_weyl_type('G', 2));
  for (WeylType t : types) {
    auto got = recognize_irreducible(build_weyl(t));
    REQUIRE(got.has_value());
    CHECK(*got == t);
  }
}

TEST_CASE("recognize handles relabelled parabolics") {
  CoxeterMatrix d5 = build_weyl(make_weyl_type('D', 5));
  auto t1 = recognize_irreducible(submatrix(d5, {1, 2, 3}));
  REQUIRE(t1.has_value());
  CHECK(t1->name() == "A3");
  // {2,3,4} is the fork: still A3, fold point in the middle
  auto t2 = recognize_irreducible(submatrix(d5, {2, 3, 4}));
  REQUIRE(t2.has_value());
  CHECK(t2->name() == "A3");
  auto t3 = recognize_irreducible(submatrix(d5, {1, 2, 3, 4}));
  REQUIRE(t3.has_value());
  CHECK(t3->name() == "D4");

  CoxeterMatrix b5 = build_weyl(make_weyl_type('B', 5));
  auto t4 = recognize_irreducible(submatrix(b5, {2, 3, 4}));
  REQUIRE(t4.has_value());
  CHECK(t4->name() == "B3");

  CoxeterMatrix e6 = build_weyl(make_weyl_type('E', 6));
  auto prod = recognize(submatrix(e6, {1, 2, 4, 5}));
  REQUIRE(prod.has_value());
  CHECK(type_product_name(*prod) == "A3xA1");
  auto d5t = recognize(submatrix(e6, {1, 2, 3, 4, 5}));
  REQUIRE(d5t.has_value());
  CHECK(type_product_name(*d5t) == "D5");
}

TEST_CASE("recognize rejects non-weyl graphs") {
  CoxeterMatrix h3(3);
  h3.set_m(0, 1, 5);
  h3.set_m(1, 2, 3);
  CHECK_FALSE(recognize_irreducible(h3).has_value());

  CoxeterMatrix cycle(3);
  cycle.set_m(0, 1, 3);
  cycle.set_m(1, 2, 3);
  cycle.set_m(0, 2, 3);
  CHECK_FALSE(recognize_irreducible(cycle).has_value());

  // two 4-bonds on a chain of length 4 is not spherical
  CoxeterMatrix c4(4);
  c4.set_m(0, 1, 4);
  c4.set_m(1, 2, 3);
  c4.set_m(2, 3, 4);
  CHECK_FALSE(recognize_irreducible(c4).has_value());
}

TEST_CASE("diagram automorphism counts") {
  auto count = [](WeylType t) { return diagram_automorphisms(build_weyl(t)).size(); };
  CHECK(count(make_weyl_type('A', 1)) == 1);
  CHECK(count(make_weyl_type('A', 3)) == 2);
  CHECK(count(make_weyl_type('B', 2)) == 2);
  CHECK(count(make_weyl_type('B', 3)) == 1);
  CHECK(count(make_weyl_type('D', 4)) == 6);
  CHECK(count(make_weyl_type('D', 5)) == 2);
  CHECK(count(make_weyl_type('E', 6)) == 2);
  CHECK(count(make_weyl_type('F', 4)) == 2);
  CHECK(count(make_weyl_type('G', 2)) == 2);

  auto autos = diagram_automorphisms(build_weyl(make_weyl_type('A', 3)));
  CHECK(autos[0] == std::vector<int>{0, 1, 2});
  CHECK(autos[1] == std::vector<int>{2, 1, 0});

  // product of equal factors: the swap shows up
  CoxeterMatrix m = build_weyl({make_weyl_type('A', 1), make_weyl_type('A', 1)});
  CHECK(diagram_automorphisms(m).size() == 2);
}

TEST_CASE("automorphisms preserve every bond") {
  CoxeterMatrix f4 = build_weyl(make_weyl_type('F', 4));
  for (const auto& s : diagram_automorphisms(f4))
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(f4.m(s[i], s[j]) == f4.m(i, j));
}

TEST_CASE("type product names") {
  CHECK(type_product_name({}) == "e");
  CHECK(type_product_name({make_weyl_type('B', 3)}) == "B3");
  CHECK(type_product_name({make_weyl_type('A', 3), make_weyl_type('A', 1)}) == "A3xA1");
  CHECK(make_weyl_type('D', 6).name() == "D6");
}

}  // TEST_SUITE
