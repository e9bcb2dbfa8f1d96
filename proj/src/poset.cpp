#include "bruhat/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "bruhat/errors.hpp"

namespace bruhat {

PointedPoset::PointedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers)
    : ranks_(std::move(ranks)), covers_(std::move(covers)) {
  const int n = size();
  if (n == 0) throw NotGradable("poset: empty");
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

  up_.assign(n, {});
  down_.assign(n, {});
  int bottoms = 0;
  length_ = 0;
  for (int v = 0; v < n; ++v) {
    if (ranks_[v] < 0) throw NotGradable("poset: negative rank");
    if (ranks_[v] == 0) ++bottoms;
    length_ = std::max(length_, ranks_[v]);
  }
  if (bottoms != 1) throw NotGradable("poset: needs exactly one rank-0 element");
  for (auto [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw NotGradable("poset: cover out of range");
    if (ranks_[b] != ranks_[a] + 1) throw NotGradable("poset: cover must raise rank by 1");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (int v = 0; v < n; ++v)
    if (ranks_[v] > 0 && down_[v].empty())
      throw NotGradable("poset: element with positive rank covers nothing");

  by_rank_.assign(length_ + 1, {});
  for (int v = 0; v < n; ++v) by_rank_[ranks_[v]].push_back(v);

  if (n <= kMaterializeLimit) {
    // Ranks need not be sorted by index; process rank by rank.
    below_.assign(n, Bitset(n));
    for (int r = 0; r <= length_; ++r)
      for (int v : by_rank_[r]) {
        below_[v].set(v);
        for (int u : down_[v]) below_[v] |= below_[u];
      }
  }
}

const std::vector<int>& PointedPoset::elements_of_rank(int r) const {
  static const std::vector<int> kEmpty;
  if (r < 0 || r > length_) return kEmpty;
  return by_rank_[r];
}

std::vector<int> PointedPoset::rank_sizes() const {
  std::vector<int> out(length_ + 1);
  for (int r = 0; r <= length_; ++r) out[r] = static_cast<int>(by_rank_[r].size());
  return out;
}

bool PointedPoset::leq(int a, int b) const {
  if (a == b) return true;
  if (ranks_[a] >= ranks_[b]) return false;
  if (!below_.empty()) return below_[b].test(a);
  // Walk down from b, pruning below rank(a).
  std::vector<int> stack{b};
  std::vector<char> seen(size(), 0);
  seen[b] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : down_[v]) {
      if (u == a) return true;
      if (!seen[u] && ranks_[u] > ranks_[a]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

PointedPoset bruhat_order(const QuotientTable& q) {
  const int n = q.size();
  if (n == 0) throw NotGradable("bruhat_order: empty table");
  if (n > PointedPoset::kMaterializeLimit)
    throw CapExceeded("bruhat_order: quotient of size " + std::to_string(n) +
                      " exceeds the materialised-order limit");

  // Upward reflection edges, then transitive closure in length order.
  std::vector<std::vector<int>> in_edges(n);
  for (int v = 0; v < n; ++v)
    for (auto [t, dir] : reflection_images(q, v))
      if (dir > 0) in_edges[t].push_back(v);

  std::vector<Bitset> below(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    below[v].set(v);
    for (int u : in_edges[v]) below[v] |= below[u];  // index order refines length
  }

  std::vector<int> ranks(n);
  for (int v = 0; v < n; ++v) ranks[v] = q.elements[v].length;
  std::vector<std::pair<int, int>> covers;
  int lo = 0;
  for (int v = 0; v < n; ++v) {
    while (q.elements[lo].length < ranks[v] - 1) ++lo;
    for (int u = lo; u < n && q.elements[u].length == ranks[v] - 1; ++u)
      if (below[v].test(u)) covers.emplace_back(u, v);
  }
  return PointedPoset(std::move(ranks), std::move(covers));
}

PointedPoset grade_abstract(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n <= 0) throw NotGradable("grade_abstract: empty");
  std::vector<std::vector<int>> succ(n), pred(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw NotGradable("grade_abstract: relation out of range");
    if (a == b) throw NotGradable("grade_abstract: reflexive pair breaks antisymmetry");
    succ[a].push_back(b);
    pred[b].push_back(a);
    ++indeg[b];
  }

  std::vector<int> topo;
  std::vector<int> deg = indeg;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 0) topo.push_back(v);
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (int w : succ[topo[head]])
      if (--deg[w] == 0) topo.push_back(w);
  if (static_cast<int>(topo.size()) != n)
    throw NotGradable("grade_abstract: relation has a cycle");

  std::vector<Bitset> below(n, Bitset(n)), above(n, Bitset(n));
  for (int v : topo) {
    below[v].set(v);
    for (int u : pred[v]) below[v] |= below[u];
  }
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    above[*it].set(*it);
    for (int w : succ[*it]) above[*it] |= above[w];
  }

  int bottom = -1;
  for (int v = 0; v < n; ++v)
    if (below[v].count() == 1) {
      if (bottom != -1) throw NotGradable("grade_abstract: more than one minimal element");
      bottom = v;
    }
  if (above[bottom].count() != static_cast<std::size_t>(n))
    throw NotGradable("grade_abstract: minimum is not below every element");

  // Covers: intervals of size exactly 2.
  std::vector<std::pair<int, int>> covers;
  for (int b = 0; b < n; ++b)
    below[b].for_each([&](std::size_t a) {
      if (static_cast<int>(a) == b) return;
      Bitset mid = below[b];
      mid &= above[a];
      if (mid.count() == 2) covers.emplace_back(static_cast<int>(a), b);
    });

  std::vector<std::vector<int>> cov_up(n);
  for (auto [a, b] : covers) cov_up[a].push_back(b);
  std::vector<int> rank(n, -1);
  rank[bottom] = 0;
  std::vector<int> stack{bottom};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : cov_up[v]) {
      if (rank[w] == -1) {
        rank[w] = rank[v] + 1;
        stack.push_back(w);
      } else if (rank[w] != rank[v] + 1) {
        throw NotGradable("grade_abstract: maximal chains of unequal length");
      }
    }
  }
  return PointedPoset(std::move(rank), std::move(covers));
}

std::string poset_to_json(const PointedPoset& p) {
  nlohmann::json out;
  out["n"] = p.size();
  out["ranks"] = p.ranks();
  out["covers"] = nlohmann::json::array();
  for (auto [a, b] : p.covers()) out["covers"].push_back({a, b});
  return out.dump(2) + "\n";
}

PointedPoset poset_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("poset JSON: ") + e.what(), e.byte);
  }
  try {
    int n = in.at("n").get<int>();
    std::vector<int> ranks = in.at("ranks").get<std::vector<int>>();
    if (static_cast<int>(ranks.size()) != n)
      throw ParseError("poset JSON: ranks length disagrees with n");
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : in.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("poset JSON: bad cover entry");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return PointedPoset(std::move(ranks), std::move(covers));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
}

std::string poset_to_dot(const PointedPoset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int r = 0; r <= p.length(); ++r) {
    out += "  { rank=same;";
    for (int v : p.elements_of_rank(r)) out += " n" + std::to_string(v) + ";";
    out += " }\n";
  }
  for (auto [a, b] : p.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace bruhat
