#include "bruhat/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace bruhat {

void ColoredGraph::add_edge(int a, int b, int label) {
  if (static_cast<int>(adj.size()) < n) adj.resize(n);
  adj[a].emplace_back(b, label);
  adj[b].emplace_back(a, label);
}

ColoredGraph color_encode(const BWGraph& g) {
  ColoredGraph cg;
  cg.n = g.n;
  cg.color.resize(g.n);
  cg.adj.resize(g.n);
  for (int v = 0; v < g.n; ++v) cg.color[v] = g.black[v] ? 1 : 0;
  for (const BWGraph::Edge& e : g.edges) cg.add_edge(e.a, e.b, e.label);
  return cg;
}

ColoredGraph color_encode(const PointedPoset& p) {
  ColoredGraph cg;
  cg.n = p.size();
  cg.color.resize(cg.n);
  cg.adj.resize(cg.n);
  for (int v = 0; v < cg.n; ++v) cg.color[v] = static_cast<std::uint64_t>(p.rank(v));
  for (auto [a, b] : p.covers()) cg.add_edge(a, b, 0);
  return cg;
}

namespace {

using Signature = std::vector<std::uint64_t>;

Signature signature_of(const ColoredGraph& g, int v) {
  Signature sig{g.color[v]};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nb;
  nb.reserve(g.adj[v].size());
  for (auto [u, label] : g.adj[v]) nb.emplace_back(static_cast<std::uint64_t>(label), g.color[u]);
  std::sort(nb.begin(), nb.end());
  for (auto [label, c] : nb) {
    sig.push_back(label);
    sig.push_back(c);
  }
  return sig;
}

// One joint refinement round over any number of graphs; new colours are
// indices into the sorted signature dictionary, so they are canonical.
// Returns the number of distinct colours.
std::size_t refine_round(std::vector<ColoredGraph*> graphs) {
  std::map<Signature, std::uint64_t> dict;
  std::vector<std::vector<Signature>> sigs(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    sigs[gi].reserve(graphs[gi]->n);
    for (int v = 0; v < graphs[gi]->n; ++v) {
      sigs[gi].push_back(signature_of(*graphs[gi], v));
      dict.emplace(sigs[gi].back(), 0);
    }
  }
  std::uint64_t next = 0;
  for (auto& [sig, id] : dict) id = next++;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi)
    for (int v = 0; v < graphs[gi]->n; ++v)
      graphs[gi]->color[v] = dict.at(sigs[gi][v]);
  return dict.size();
}

int default_rounds(int n) {
  int rounds = 2, size = 1;
  while (size < n) {
    size *= 2;
    rounds += 3;
  }
  return rounds;
}

std::vector<std::uint64_t> color_histogram_key(const ColoredGraph& g) {
  std::vector<std::uint64_t> c = g.color;
  std::sort(c.begin(), c.end());
  return c;
}

bool backtrack(const ColoredGraph& g, const ColoredGraph& h, const std::vector<int>& order,
               std::size_t at, std::vector<int>& map_gh, std::vector<char>& used) {
  if (at == order.size()) return true;
  int v = order[at];
  // Edges towards already-mapped vertices, as (mapped neighbour, label).
  std::vector<std::pair<int, int>> need;
  for (auto [u, label] : g.adj[v])
    if (map_gh[u] >= 0) need.emplace_back(map_gh[u], label);
  std::sort(need.begin(), need.end());

  for (int w = 0; w < h.n; ++w) {
    if (used[w] || h.color[w] != g.color[v]) continue;
    if (h.adj[w].size() != g.adj[v].size()) continue;
    std::vector<std::pair<int, int>> have;
    for (auto [u, label] : h.adj[w])
      if (used[u]) have.emplace_back(u, label);
    std::sort(have.begin(), have.end());
    if (have != need) continue;
    map_gh[v] = w;
    used[w] = 1;
    if (backtrack(g, h, order, at + 1, map_gh, used)) return true;
    map_gh[v] = -1;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h) {
  if (g.n != h.n) return std::nullopt;
  if (g.n == 0) return std::vector<int>{};

  ColoredGraph rg = g, rh = h;
  if (color_histogram_key(rg) != color_histogram_key(rh)) return std::nullopt;
  std::size_t classes = 0;
  for (int round = 0; round < default_rounds(g.n); ++round) {
    std::size_t now = refine_round({&rg, &rh});
    if (color_histogram_key(rg) != color_histogram_key(rh)) return std::nullopt;
    if (now == classes) break;
    classes = now;
  }

  // Order: rare colour classes first, then prefer vertices adjacent to the
  // already-ordered ones so the partial map stays constrained.
  std::map<std::uint64_t, int> class_size;
  for (int v = 0; v < rg.n; ++v) ++class_size[rg.color[v]];
  std::vector<char> placed(rg.n, 0);
  std::vector<int> order;
  order.reserve(rg.n);
  for (int step = 0; step < rg.n; ++step) {
    int best = -1;
    long long best_key = 0;
    for (int v = 0; v < rg.n; ++v) {
      if (placed[v]) continue;
      long long anchored = 0;
      for (auto [u, label] : rg.adj[v]) anchored += placed[u];
      long long key = anchored * 1000000 - class_size[rg.color[v]] * 1000 - v;
      if (best == -1 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<int> map_gh(rg.n, -1);
  std::vector<char> used(rh.n, 0);
  if (backtrack(rg, rh, order, 0, map_gh, used)) return map_gh;
  return std::nullopt;
}

std::uint64_t refinement_hash(const ColoredGraph& g, int rounds) {
  ColoredGraph rg = g;
  if (rounds < 0) rounds = default_rounds(g.n);
  for (int round = 0; round < rounds; ++round) refine_round({&rg});
  std::vector<std::uint64_t> colors = color_histogram_key(rg);
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(g.n);
  for (std::uint64_t c : colors) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::vector<int>> bwgraph_isomorphic(const BWGraph& g, const BWGraph& h) {
  return find_isomorphism(color_encode(g), color_encode(h));
}

std::optional<std::vector<int>> poset_isomorphic(const PointedPoset& p, const PointedPoset& q) {
  return find_isomorphism(color_encode(p), color_encode(q));
}

}  // namespace bruhat
