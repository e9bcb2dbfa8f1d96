#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "bruhat/bwgraph.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

// Induced poset on a down-closed subset: inherited covers and inherited
// ranks, elements listed by ambient index.
struct SubPoset {
  std::vector<int> elements;  // ambient ids, ascending
  PointedPoset poset;         // local ids follow `elements`
};

SubPoset induced_subposet(const PointedPoset& p, std::vector<int> elements);

std::vector<int> x1_of(const PointedPoset& p);

// X2(I): rank-2 elements whose covered set is exactly I.
std::vector<int> x2_of(const PointedPoset& p, const std::vector<int>& i_set);

// X^0(I) = X_0 + I + elements of rank > 1 all of whose rank-2 downset lies
// in X2(I).
SubPoset x0_of(const PointedPoset& p, const std::vector<int>& i_set);

// X^inf(I): elements whose rank-1 downset lies inside I.
SubPoset xinf_of(const PointedPoset& p, const std::vector<int>& i_set);

long long mu(const PointedPoset& p, int a, int b);
long long nu(const PointedPoset& p, int a);

struct ReconTriple {
  std::vector<int> x1;
  std::vector<std::tuple<int, int, long long>> mu;  // a < b, both in x1
  std::vector<std::pair<int, long long>> nu;
};

ReconTriple triple_of(const PointedPoset& p);
std::string triple_to_json(const ReconTriple& t);

// a ~> b: mu(a,b) = 2 and some y in X^0(a) has two distinct covers both >= b.
bool leads_to(const PointedPoset& p, int a, int b);

// Classes of X_1 under the closure of mu(a,b) > 2 and the symmetrised ~>.
std::vector<std::vector<int>> sim_classes(const PointedPoset& p);

// One factor X^inf(I) per sim-class I, in class order.
std::vector<SubPoset> factor_posets(const PointedPoset& p);

// Elements with at most one member of each rank below them, bottom excluded.
std::vector<int> vx(const PointedPoset& p);

// The bw-Coxeter graph of the poset: vertices VX in ascending ambient order,
// rank-1 elements black.
BWGraph g_of(const PointedPoset& p);

}  // namespace bruhat
