#include "bruhat/coxeter.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat {

CoxeterMatrix::CoxeterMatrix(int rank) {
  if (rank < 0) throw std::invalid_argument("CoxeterMatrix: negative rank");
  n_ = rank;
  e_.assign(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i) e_[static_cast<std::size_t>(i) * rank + i] = 1;
}

void CoxeterMatrix::set_m(int i, int j, int value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("CoxeterMatrix::set_m: index out of range");
  if (i == j) {
    if (value != 1) throw std::invalid_argument("CoxeterMatrix: m(s,s) must be 1");
    return;
  }
  if (value < 2) throw std::invalid_argument("CoxeterMatrix: off-diagonal bond < 2");
  e_[static_cast<std::size_t>(i) * n_ + j] = value;
  e_[static_cast<std::size_t>(j) * n_ + i] = value;
}

std::string WeylType::name() const {
  return family + std::to_string(rank);
}

bool valid_weyl_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

WeylType make_weyl_type(char family, int rank) {
  if (!valid_weyl_type(family, rank))
    throw std::invalid_argument("invalid Weyl type " + (family + std::to_string(rank)));
  return WeylType{family, rank};
}

CoxeterMatrix build_weyl(WeylType t) {
  if (!valid_weyl_type(t.family, t.rank))
    throw std::invalid_argument("invalid Weyl type " + t.name());
  const int n = t.rank;
  CoxeterMatrix m(n);
  auto chain = [&m](int upto) {
    for (int i = 0; i + 1 < upto; ++i) m.set_m(i, i + 1, 3);
  };
  switch (t.family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n);
      m.set_m(n - 2, n - 1, 4);
      break;
    case 'D':
      chain(n - 1);
      m.set_m(n - 3, n - 1, 3);
      break;
    case 'E':
      chain(n - 1);
      m.set_m(2, n - 1, 3);
      break;
    case 'F':
      chain(n);
      m.set_m(1, 2, 4);
      break;
    case 'G':
      m.set_m(0, 1, 6);
      break;
  }
  return m;
}

CoxeterMatrix build_weyl(const std::vector<WeylType>& factors) {
  std::vector<CoxeterMatrix> ms;
  ms.reserve(factors.size());
  for (WeylType t : factors) ms.push_back(build_weyl(t));
  return product(ms);
}

CoxeterMatrix product(const std::vector<CoxeterMatrix>& ms) {
  int n = 0;
  for (const auto& m : ms) n += m.rank();
  CoxeterMatrix out(n);
  int base = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < m.rank(); ++i)
      for (int j = i + 1; j < m.rank(); ++j)
        if (m.m(i, j) != 2) out.set_m(base + i, base + j, m.m(i, j));
    base += m.rank();
  }
  return out;
}

CoxeterMatrix submatrix(const CoxeterMatrix& m, const std::vector<int>& vertices) {
  CoxeterMatrix out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      int v = m.m(vertices[i], vertices[j]);
      if (v != 2) out.set_m(static_cast<int>(i), static_cast<int>(j), v);
    }
  return out;
}

std::vector<std::vector<int>> connected_components(const CoxeterMatrix& m,
                                                   const std::vector<int>& subset) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(subset.size(), 0);
  std::vector<char> in_subset(m.rank(), 0);
  std::vector<int> pos(m.rank(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    in_subset[subset[i]] = 1;
    pos[subset[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::vector<int> stack{subset[i]};
    seen[i] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : subset) {
        if (!seen[pos[u]] && m.m(v, u) >= 3) {
          seen[pos[u]] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<int>> connected_components(const CoxeterMatrix& m) {
  std::vector<int> all(m.rank());
  for (int i = 0; i < m.rank(); ++i) all[i] = i;
  return connected_components(m, all);
}

bool is_simple(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n == 0) return false;
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.m(i, j) >= 3) ++edges;
  // A connected graph is acyclic iff it has exactly n-1 edges.
  return connected_components(m).size() == 1 && edges == n - 1;
}

namespace {

// Arm lengths (in edges) of a tree with exactly one degree-3 vertex.
std::optional<std::vector<int>> branch_arms(const CoxeterMatrix& m,
                                            const std::vector<int>& deg) {
  const int n = m.rank();
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) return std::nullopt;
    if (deg[i] == 3) {
      if (branch != -1) return std::nullopt;
      branch = i;
    }
  }
  if (branch == -1) return std::nullopt;
  std::vector<int> arms;
  for (int nb = 0; nb < n; ++nb) {
    if (m.m(branch, nb) < 3) continue;
    int len = 1, prev = branch, cur = nb;
    for (;;) {
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (k != prev && m.m(cur, k) >= 3) {
          if (next != -1) return std::nullopt;
          next = k;
        }
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

// Bond labels read along a path graph, from one end to the other.
std::optional<std::vector<int>> path_labels(const CoxeterMatrix& m,
                                            const std::vector<int>& deg) {
  const int n = m.rank();
  int end = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 2) return std::nullopt;
    if (deg[i] == 1 && end == -1) end = i;
  }
  if (end == -1) return std::nullopt;
  std::vector<int> labels;
  int prev = -1, cur = end;
  for (int step = 0; step + 1 < n; ++step) {
    int next = -1;
    for (int k = 0; k < n; ++k)
      if (k != prev && m.m(cur, k) >= 3) next = k;
    if (next == -1) return std::nullopt;
    labels.push_back(m.m(cur, next));
    prev = cur;
    cur = next;
  }
  return labels;
}

}  // namespace

std::optional<WeylType> recognize_irreducible(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n == 0) return std::nullopt;
  if (n == 1) return WeylType{'A', 1};
  if (connected_components(m).size() != 1) return std::nullopt;

  std::vector<int> deg(n, 0);
  int big_bonds = 0, big_label = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = m.m(i, j);
      if (v >= 3) {
        ++deg[i];
        ++deg[j];
      }
      if (v >= 4) {
        ++big_bonds;
        big_label = v;
      }
      if (v != 2 && v != 3 && v != 4 && v != 6) return std::nullopt;
    }

  if (big_bonds > 1) return std::nullopt;
  if (big_bonds == 1) {
    if (n == 2) {
      if (big_label == 4) return WeylType{'B', 2};
      return WeylType{'G', 2};
    }
    if (big_label != 4) return std::nullopt;
    auto labels = path_labels(m, deg);
    if (!labels) return std::nullopt;
    bool terminal = labels->front() == 4 || labels->back() == 4;
    if (terminal) return WeylType{'B', n};
    if (n == 4 && (*labels)[1] == 4) return WeylType{'F', 4};
    return std::nullopt;
  }

  // Simply laced: path, or a tree with one branch vertex.
  if (path_labels(m, deg)) return WeylType{'A', n};
  auto arms = branch_arms(m, deg);
  if (!arms || arms->size() != 3) return std::nullopt;
  if ((*arms)[0] == 1 && (*arms)[1] == 1) return WeylType{'D', n};
  if ((*arms)[0] == 1 && (*arms)[1] == 2 && n >= 6 && n <= 8) return WeylType{'E', n};
  return std::nullopt;
}

std::optional<std::vector<WeylType>> recognize(const CoxeterMatrix& m) {
  std::vector<WeylType> out;
  for (const auto& comp : connected_components(m)) {
    auto t = recognize_irreducible(submatrix(m, comp));
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  return out;
}

std::uint64_t group_order(WeylType t) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case 'A': return fact(t.rank + 1);
    case 'B': return (std::uint64_t{1} << t.rank) * fact(t.rank);
    case 'D': return (std::uint64_t{1} << (t.rank - 1)) * fact(t.rank);
    case 'E':
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::invalid_argument("group_order: bad family");
}

std::optional<std::uint64_t> group_order(const CoxeterMatrix& m) {
  auto types = recognize(m);
  if (!types) return std::nullopt;
  std::uint64_t o = 1;
  for (WeylType t : *types) o *= group_order(t);
  return o;
}

long long longest_length(WeylType t) {
  switch (t.family) {
    case 'A': return static_cast<long long>(t.rank) * (t.rank + 1) / 2;
    case 'B': return static_cast<long long>(t.rank) * t.rank;
    case 'D': return static_cast<long long>(t.rank) * (t.rank - 1);
    case 'E':
      if (t.rank == 6) return 36;
      if (t.rank == 7) return 63;
      return 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::invalid_argument("longest_length: bad family");
}

std::optional<long long> longest_length(const CoxeterMatrix& m) {
  auto types = recognize(m);
  if (!types) return std::nullopt;
  long long len = 0;
  for (WeylType t : *types) len += longest_length(t);
  return len;
}

namespace {

void autos_search(const CoxeterMatrix& m, std::vector<int>& perm,
                  std::vector<char>& used, int v,
                  std::vector<std::vector<int>>& out) {
  const int n = m.rank();
  if (v == n) {
    out.push_back(perm);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (m.m(u, v) != m.m(perm[u], img)) ok = false;
    if (!ok) continue;
    perm[v] = img;
    used[img] = 1;
    autos_search(m, perm, used, v + 1, out);
    used[img] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterMatrix& m) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(m.rank(), -1);
  std::vector<char> used(m.rank(), 0);
  autos_search(m, perm, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string type_product_name(const std::vector<WeylType>& ts) {
  if (ts.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) s += 'x';
    s += ts[i].name();
  }
  return s;
}

}  // namespace bruhat
