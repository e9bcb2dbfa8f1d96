#include "bruhat/invariants.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace bruhat {

SubPoset induced_subposet(const PointedPoset& p, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> local(p.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<int>(i);
  std::vector<int> ranks;
  ranks.reserve(elements.size());
  for (int v : elements) ranks.push_back(p.rank(v));
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.covers())
    if (local[a] >= 0 && local[b] >= 0) covers.emplace_back(local[a], local[b]);
  SubPoset out;
  out.elements = std::move(elements);
  out.poset = PointedPoset(std::move(ranks), std::move(covers));
  return out;
}

std::vector<int> x1_of(const PointedPoset& p) { return p.elements_of_rank(1); }

std::vector<int> x2_of(const PointedPoset& p, const std::vector<int>& i_set) {
  std::vector<int> want = i_set;
  std::sort(want.begin(), want.end());
  std::vector<int> out;
  for (int x : p.elements_of_rank(2)) {
    std::vector<int> covered = p.down(x);
    std::sort(covered.begin(), covered.end());
    if (covered == want) out.push_back(x);
  }
  return out;
}

SubPoset x0_of(const PointedPoset& p, const std::vector<int>& i_set) {
  std::vector<char> in_x2i(p.size(), 0);
  for (int x : x2_of(p, i_set)) in_x2i[x] = 1;
  std::vector<int> members = p.elements_of_rank(0);
  members.insert(members.end(), i_set.begin(), i_set.end());
  const std::vector<int>& rank2 = p.elements_of_rank(2);
  for (int x = 0; x < p.size(); ++x) {
    if (p.rank(x) <= 1) continue;
    bool ok = true;
    for (int y : rank2)
      if (p.leq(y, x) && !in_x2i[y]) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return induced_subposet(p, std::move(members));
}

SubPoset xinf_of(const PointedPoset& p, const std::vector<int>& i_set) {
  std::vector<char> in_i(p.size(), 0);
  for (int a : i_set) in_i[a] = 1;
  const std::vector<int>& rank1 = p.elements_of_rank(1);
  std::vector<int> members;
  for (int x = 0; x < p.size(); ++x) {
    bool ok = true;
    for (int y : rank1)
      if (!in_i[y] && p.leq(y, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return induced_subposet(p, std::move(members));
}

long long mu(const PointedPoset& p, int a, int b) {
  return x0_of(p, {a, b}).poset.length();
}

long long nu(const PointedPoset& p, int a) {
  return static_cast<long long>(x2_of(p, {a}).size());
}

ReconTriple triple_of(const PointedPoset& p) {
  ReconTriple t;
  t.x1 = x1_of(p);
  std::sort(t.x1.begin(), t.x1.end());
  for (std::size_t i = 0; i < t.x1.size(); ++i) {
    for (std::size_t k = i + 1; k < t.x1.size(); ++k)
      t.mu.emplace_back(t.x1[i], t.x1[k], mu(p, t.x1[i], t.x1[k]));
    t.nu.emplace_back(t.x1[i], nu(p, t.x1[i]));
  }
  return t;
}

std::string triple_to_json(const ReconTriple& t) {
  nlohmann::json out;
  out["x1"] = t.x1;
  out["mu"] = nlohmann::json::array();
  for (auto [a, b, v] : t.mu) out["mu"].push_back({a, b, v});
  out["nu"] = nlohmann::json::array();
  for (auto [a, v] : t.nu) out["nu"].push_back({a, v});
  return out.dump(2) + "\n";
}

bool leads_to(const PointedPoset& p, int a, int b) {
  if (mu(p, a, b) != 2) return false;
  for (int y : x0_of(p, {a}).elements) {
    int hits = 0;
    for (int c : p.up(y))
      if (p.leq(b, c)) ++hits;
    if (hits >= 2) return true;
  }
  return false;
}

std::vector<std::vector<int>> sim_classes(const PointedPoset& p) {
  std::vector<int> x1 = x1_of(p);
  std::sort(x1.begin(), x1.end());
  std::map<int, int> parent;
  for (int a : x1) parent[a] = a;
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < x1.size(); ++i)
    for (std::size_t k = i + 1; k < x1.size(); ++k) {
      int a = x1[i], b = x1[k];
      if (mu(p, a, b) > 2 || leads_to(p, a, b) || leads_to(p, b, a))
        parent[find(a)] = find(b);
    }
  std::map<int, std::vector<int>> grouped;
  for (int a : x1) grouped[find(a)].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubPoset> factor_posets(const PointedPoset& p) {
  std::vector<SubPoset> out;
  for (const auto& cls : sim_classes(p)) out.push_back(xinf_of(p, cls));
  return out;
}

std::vector<int> vx(const PointedPoset& p) {
  // The downset of x is a chain iff x has a unique cover below and that
  // cover's downset is a chain.
  std::vector<char> chain(p.size(), 0);
  std::vector<int> out;
  for (int r = 0; r <= p.length(); ++r)
    for (int v : p.elements_of_rank(r)) {
      if (r == 0)
        chain[v] = 1;
      else
        chain[v] = p.down(v).size() == 1 && chain[p.down(v)[0]];
      if (chain[v] && r > 0) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

BWGraph g_of(const PointedPoset& p) {
  std::vector<int> vxs = vx(p);
  std::vector<int> local(p.size(), -1);
  BWGraph g;
  g.n = static_cast<int>(vxs.size());
  g.black.assign(g.n, 0);
  for (std::size_t i = 0; i < vxs.size(); ++i) {
    local[vxs[i]] = static_cast<int>(i);
    g.black[i] = p.rank(vxs[i]) == 1;
  }
  std::map<std::pair<int, int>, int> edges;  // local pair -> label
  auto add = [&edges](int a, int b, int label) {
    if (a > b) std::swap(a, b);
    auto [it, fresh] = edges.emplace(std::make_pair(a, b), label);
    if (!fresh) it->second = std::max(it->second, label);
  };

  std::vector<int> x1 = x1_of(p);
  std::sort(x1.begin(), x1.end());
  for (std::size_t i = 0; i < x1.size(); ++i)
    for (std::size_t k = i + 1; k < x1.size(); ++k) {
      long long m = mu(p, x1[i], x1[k]);
      if (m >= 3) add(local[x1[i]], local[x1[k]], static_cast<int>(m));
    }

  for (auto [a, b] : p.covers())
    if (local[a] >= 0 && local[b] >= 0) add(local[a], local[b], 3);

  for (int a : x1) {
    std::vector<int> cands;
    for (int x : vxs) {
      if (p.leq(a, x)) continue;
      int hits = 0;
      for (int c : p.up(x))
        if (p.leq(a, c)) ++hits;
      if (hits >= 2) cands.push_back(x);
    }
    for (int x : cands) {
      bool minimal = true;
      for (int y : cands)
        if (y != x && p.leq(y, x)) {
          minimal = false;
          break;
        }
      if (minimal) add(local[a], local[x], 3);
    }
  }

  for (const auto& [key, label] : edges) g.edges.push_back({key.first, key.second, label});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace bruhat
