#include "bruhat/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

// Right-multiply the matrix by the reflection s: columns change, rows do not.
std::vector<int> mult_by_gen(const std::vector<int>& a, const CartanMatrix& c, int s) {
  const int n = c.n;
  std::vector<int> out = a;
  for (int i = 0; i < n; ++i) {
    int ais = a[static_cast<std::size_t>(i) * n + s];
    for (int j = 0; j < n; ++j) {
      if (j == s)
        out[static_cast<std::size_t>(i) * n + j] = -ais;
      else
        out[static_cast<std::size_t>(i) * n + j] -= ais * c.at(j, s);
    }
  }
  return out;
}

}  // namespace

OracleGroup OracleGroup::enumerate(const CoxeterMatrix& m, std::size_t cap) {
  OracleGroup g;
  g.matrix_ = m;
  const int n = m.rank();
  CartanMatrix cart = cartan_of(m);

  std::vector<int> id(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;

  std::map<std::vector<int>, int> index;
  index.emplace(id, 0);
  g.els_.push_back(GroupElement{{}, id});

  std::size_t head = 0;
  while (head < g.els_.size()) {
    int cur = static_cast<int>(head);
    std::vector<int> mat = g.els_[head].mat;
    std::vector<int> word = g.els_[head].word;
    ++head;
    for (int s = 0; s < n; ++s) {
      std::vector<int> nm = mult_by_gen(mat, cart, s);
      auto [it, fresh] = index.emplace(nm, static_cast<int>(g.els_.size()));
      if (fresh) {
        if (g.els_.size() >= cap)
          throw CapExceeded("oracle enumerate: group larger than cap " +
                            std::to_string(cap));
        std::vector<int> nw = word;
        nw.push_back(s);
        g.els_.push_back(GroupElement{std::move(nw), std::move(nm)});
      }
      g.mult_.resize(g.els_.size() * static_cast<std::size_t>(n), -1);
      g.mult_[static_cast<std::size_t>(cur) * n + s] = it->second;
    }
  }
  return g;
}

bool OracleGroup::right_descent(int g, int s) const {
  const int n = rank();
  const std::vector<int>& mat = els_[g].mat;
  for (int i = 0; i < n; ++i)
    if (mat[static_cast<std::size_t>(i) * n + s] < 0) return true;
  return false;
}

int OracleGroup::longest() const {
  int best = 0;
  for (int g = 1; g < size(); ++g)
    if (length(g) > length(best)) best = g;
  return best;
}

std::vector<char> oracle_downset(const OracleGroup& g, int v) {
  std::vector<char> in(g.size(), 0);
  in[0] = 1;
  std::vector<int> members{0};
  for (int s : g.element(v).word) {
    std::vector<int> added;
    for (int u : members) {
      if (!g.right_descent(u, s)) {
        int us = g.mult_gen(u, s);
        if (!in[us]) {
          in[us] = 1;
          added.push_back(us);
        }
      }
    }
    members.insert(members.end(), added.begin(), added.end());
  }
  return in;
}

bool bruhat_le(const OracleGroup& g, int u, int v) {
  return oracle_downset(g, v)[u] != 0;
}

std::vector<int> min_coset_reps(const OracleGroup& g, const std::vector<int>& j) {
  std::vector<int> reps;
  for (int e = 0; e < g.size(); ++e) {
    bool min = true;
    for (int s : j)
      if (g.right_descent(e, s)) {
        min = false;
        break;
      }
    if (min) reps.push_back(e);
  }
  std::sort(reps.begin(), reps.end(), [&g](int a, int b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a < b;
  });
  return reps;
}

std::vector<Bitset> oracle_rep_order(const OracleGroup& g, const std::vector<int>& reps) {
  std::vector<int> pos(g.size(), -1);
  for (std::size_t r = 0; r < reps.size(); ++r) pos[reps[r]] = static_cast<int>(r);
  std::vector<Bitset> below(reps.size(), Bitset(reps.size()));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::vector<char> down = oracle_downset(g, reps[r]);
    for (int e = 0; e < g.size(); ++e)
      if (down[e] && pos[e] >= 0) below[r].set(pos[e]);
  }
  return below;
}

std::vector<int> oracle_weight(const OracleGroup& g, const CartanMatrix& c,
                               const std::vector<int>& j, int elem) {
  const int n = c.n;
  std::vector<int> v(n, 1);
  for (int s : j) v[s] = 0;
  const std::vector<int>& word = g.element(elem).word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it, vs = v[s];
    for (int k = 0; k < n; ++k) v[k] -= vs * c.at(s, k);
  }
  return v;
}

std::uint64_t count_reduced_words(const OracleGroup& g, int elem) {
  // R(e) = 1 and R(w) = sum over right descents s of R(ws); memoised on the
  // fly, recursion depth bounded by l(w).
  std::vector<std::uint64_t> memo(g.size(), 0);
  memo[0] = 1;
  struct Rec {
    const OracleGroup& g;
    std::vector<std::uint64_t>& memo;
    std::uint64_t run(int w) {
      if (memo[w]) return memo[w];
      std::uint64_t total = 0;
      for (int s = 0; s < g.rank(); ++s)
        if (g.right_descent(w, s)) total += run(g.mult_gen(w, s));
      return memo[w] = total;
    }
  } rec{g, memo};
  return rec.run(elem);
}

std::vector<int> support(const OracleGroup& g, int elem) {
  std::vector<char> seen(g.rank(), 0);
  for (int s : g.element(elem).word) seen[s] = 1;
  std::vector<int> out;
  for (int s = 0; s < g.rank(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

bool unique_below(const OracleGroup& g, const std::vector<int>& reps,
                  const std::vector<Bitset>& order, int rep_pos) {
  bool ok = true;
  order[rep_pos].for_each([&](std::size_t q) {
    if (count_reduced_words(g, reps[q]) != 1) ok = false;
  });
  return ok;
}

}  // namespace bruhat
