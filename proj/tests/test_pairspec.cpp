#include <doctest.h>

#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/pairspec.hpp"

using namespace bruhat;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_pair_spec(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("pairspec") {

TEST_CASE("plain pairs") {
  PairSpec p = parse_pair_spec("A3/A2");
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0].name() == "A3");
  CHECK(p.j == std::vector<int>{0, 1});  // unique orbit, canonical representative

  PairSpec q = parse_pair_spec("B2/A1");
  CHECK(q.j == std::vector<int>{0});

  PairSpec full = parse_pair_spec("F4/F4");
  CHECK(full.j == std::vector<int>{0, 1, 2, 3});

  PairSpec empty = parse_pair_spec("G2/e");
  CHECK(empty.j.empty());
  CHECK(empty.matrix().rank() == 2);
}

TEST_CASE("explicit index lists") {
  PairSpec p = parse_pair_spec("E6/A3xA1@{1,2,3,5}");
  CHECK(p.j == std::vector<int>{0, 1, 2, 4});

  PairSpec q = parse_pair_spec("D5/A3@{3,4,5}");
  CHECK(q.j == std::vector<int>{2, 3, 4});

  // indices may come in any order
  PairSpec r = parse_pair_spec("A4/A2xA1@{4,1,2}");
  CHECK(r.j == std::vector<int>{0, 1, 3});
}

TEST_CASE("products in the group position") {
  PairSpec p = parse_pair_spec("B4xA2/B2xA1@{3,4,6}");
  REQUIRE(p.factors.size() == 2);
  CHECK(p.factors[0].name() == "B4");
  CHECK(p.factors[1].name() == "A2");
  CHECK(p.j == std::vector<int>{2, 3, 5});
  CHECK(p.matrix().rank() == 6);
  CHECK(p.matrix().m(2, 3) == 4);
}

TEST_CASE("ambiguity is an error that lists the orbits") {
  std::string msg = error_of("D5/A3");
  CHECK(msg.find("ambiguous") != std::string::npos);
  CHECK(msg.find("@{1,2,3}") != std::string::npos);
  CHECK(msg.find("@{2,3,4}") != std::string::npos);
  CHECK(msg.find("@{3,4,5}") != std::string::npos);
  // but symmetric choices collapse into one orbit
  CHECK(parse_pair_spec("A3/A1xA1").j == std::vector<int>{0, 2});
  CHECK(error_of("A4/A1xA1").find("ambiguous") != std::string::npos);
}

TEST_CASE("type and index mismatches") {
  CHECK(error_of("A3/A5").find("exceeds") != std::string::npos);
  CHECK(error_of("A3/B2").find("no parabolic") != std::string::npos);
  CHECK(error_of("B3/A2@{2,3}").find("indices give type B2") != std::string::npos);
  CHECK(error_of("A3/A2@{1,5}").find("outside") != std::string::npos);
  CHECK(error_of("A3/A2@{1,1}").find("repeated") != std::string::npos);
  CHECK(error_of("A3/A2@{1}").find("indices give type") != std::string::npos);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_pair_spec("A3|A2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos() == 2);
  }
  try {
    parse_pair_spec("H3/A1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos() == 0);
    CHECK(std::string(e.what()).find("not a Weyl type") != std::string::npos);
  }
  CHECK(error_of("A3/").find("missing parabolic") != std::string::npos);
  CHECK(error_of("A3/A2@{1,2").find("unterminated") != std::string::npos);
  CHECK(error_of("A3/A2@{1,2}x").find("trailing") != std::string::npos);
  CHECK(error_of("A0/e").find("not a Weyl type") != std::string::npos);
}

TEST_CASE("canonical subsets under diagram automorphisms") {
  CoxeterMatrix a3 = build_weyl(make_weyl_type('A', 3));
  CHECK(canonical_subset(a3, {1, 2}) == std::vector<int>{0, 1});
  CHECK(canonical_subset(a3, {0, 1}) == std::vector<int>{0, 1});
  CHECK(canonical_subset(a3, {1}) == std::vector<int>{1});

  CoxeterMatrix d4 = build_weyl(make_weyl_type('D', 4));
  // triality: any two leaves are equivalent to the first two
  CHECK(canonical_subset(d4, {2, 3}) == canonical_subset(d4, {0, 3}));
  CHECK(canonical_subset(d4, {0, 1, 3}) == std::vector<int>{0, 1, 2});

  CoxeterMatrix f4 = build_weyl(make_weyl_type('F', 4));
  CHECK(canonical_subset(f4, {2, 3}) == std::vector<int>{0, 1});  // the reversal

  CoxeterMatrix b3 = build_weyl(make_weyl_type('B', 3));
  CHECK(canonical_subset(b3, {1, 2}) == std::vector<int>{1, 2});  // no symmetry
}

TEST_CASE("pair names canonicalise") {
  CoxeterMatrix a3 = build_weyl(make_weyl_type('A', 3));
  CHECK(pair_name({make_weyl_type('A', 3)}, {1, 2}) == "A3/A2@{1,2}");
  CHECK(pair_name({make_weyl_type('A', 3)}, {}) == "A3/e");
  CHECK(pair_name({make_weyl_type('B', 4)}, {0, 1, 2}) == "B4/A3@{1,2,3}");
  CHECK(pair_name({make_weyl_type('E', 6)}, {1, 2, 3, 4, 5}) == "E6/D5@{1,2,3,4,6}");
  CHECK(pair_name({make_weyl_type('B', 4), make_weyl_type('A', 1)}, {1, 2, 4}) ==
        "B4xA1/A2xA1@{2,3,5}");
  // round trip: name -> parse -> same canonical data
  PairSpec p = parse_pair_spec("B4xA1/A2xA1@{2,3,5}");
  CHECK(pair_name(p.factors, p.j) == "B4xA1/A2xA1@{2,3,5}");
}

}  // TEST_SUITE
