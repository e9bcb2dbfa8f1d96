#include "bruhat/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bruhat/errors.hpp"

namespace bruhat {

CartanMatrix cartan_of(const CoxeterMatrix& m) {
  const int n = m.rank();
  CartanMatrix c;
  c.n = n;
  c.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) c.a[static_cast<std::size_t>(i) * n + i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int bond = m.m(i, j);
      int lo = 0, hi = 0;  // a[i][j], a[j][i]
      switch (bond) {
        case 2: break;
        case 3: lo = hi = -1; break;
        case 4: lo = -2; hi = -1; break;
        case 6: lo = -3; hi = -1; break;
        default:
          throw std::invalid_argument("cartan_of: non-crystallographic bond " +
                                      std::to_string(bond));
      }
      c.a[static_cast<std::size_t>(i) * n + j] = lo;
      c.a[static_cast<std::size_t>(j) * n + i] = hi;
    }
  return c;
}

std::vector<Root> positive_roots(const CartanMatrix& c, std::size_t cap) {
  const int n = c.n;
  std::map<std::vector<int>, std::vector<int>> found;  // coords -> coroot
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> coords = std::move(queue.back());
    queue.pop_back();
    const std::vector<int>& coroot = found.at(coords);
    std::vector<int> d = coroot;
    for (int i = 0; i < n; ++i) {
      int pair_ci = 0, pair_di = 0;
      for (int k = 0; k < n; ++k) {
        pair_ci += coords[k] * c.at(k, i);  // <beta, alpha_i^vee>
        pair_di += c.at(i, k) * d[k];       // <alpha_i, beta^vee>
      }
      if (pair_ci == 0) continue;
      std::vector<int> nc = coords;
      nc[i] -= pair_ci;
      if (nc[i] < 0) continue;  // only beta = alpha_i reflects negative
      if (found.count(nc)) continue;
      std::vector<int> nd = d;
      nd[i] -= pair_di;
      found.emplace(nc, std::move(nd));
      if (found.size() > cap)
        throw CapExceeded("positive_roots: more than " + std::to_string(cap) +
                          " roots; bond pattern is not of finite type");
      queue.push_back(std::move(nc));
    }
  }
  std::vector<Root> out;
  out.reserve(found.size());
  for (auto& [coords, coroot] : found) {
    Root r;
    r.omega.assign(n, 0);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r.omega[j] += coords[k] * c.at(k, j);
    r.coords = coords;
    r.coroot = coroot;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    int hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.coords < y.coords;
  });
  return out;
}

}  // namespace bruhat
