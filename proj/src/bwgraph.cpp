#include "bruhat/bwgraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "bruhat/errors.hpp"
#include "bruhat/isomorphism.hpp"

namespace bruhat {

void BWGraph::add_edge(int a, int b, int label) {
  if (a == b) throw std::invalid_argument("BWGraph: self-loop");
  if (a > b) std::swap(a, b);
  for (const Edge& e : edges)
    if (e.a == a && e.b == b) throw std::invalid_argument("BWGraph: duplicate edge");
  edges.push_back(Edge{a, b, label});
  std::sort(edges.begin(), edges.end());
}

int BWGraph::black_count() const {
  int c = 0;
  for (char b : black) c += b != 0;
  return c;
}

std::vector<std::vector<int>> BWGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

BWGraph bw_graph(const CoxeterMatrix& m, const std::vector<int>& j) {
  BWGraph g;
  g.n = m.rank();
  g.black.assign(g.n, 1);
  for (int s : j) {
    if (s < 0 || s >= g.n) throw std::invalid_argument("bw_graph: bad J index");
    g.black[s] = 0;
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (m.m(a, b) >= 3) g.add_edge(a, b, m.m(a, b));
  return g;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> white_components(const BWGraph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int v = 0; v < g.n; ++v) {
    if (g.black[v] || seen[v]) continue;
    std::vector<int> comp, blacks, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x]) {
        if (g.black[y]) {
          blacks.push_back(y);
        } else if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::sort(blacks.begin(), blacks.end());
    blacks.erase(std::unique(blacks.begin(), blacks.end()), blacks.end());
    out.emplace_back(std::move(comp), std::move(blacks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_bu_labels(const BWGraph& g) {
  for (const BWGraph::Edge& e : g.edges)
    if (e.label > 3 && (!g.black[e.a] || !g.black[e.b]))
      throw std::invalid_argument("BU: labelled edge meets a white vertex");
}

}  // namespace

BWGraph bu_expand(const BWGraph& g) {
  check_bu_labels(g);
  BWGraph out;
  std::vector<int> black_id(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (g.black[v]) {
      black_id[v] = out.n++;
      out.black.push_back(1);
    }
  for (const BWGraph::Edge& e : g.edges)
    if (g.black[e.a] && g.black[e.b])
      out.add_edge(black_id[e.a], black_id[e.b], e.label);

  for (const auto& [comp, blacks] : white_components(g)) {
    int copies = static_cast<int>(blacks.size());
    for (int c = 0; c < copies; ++c) {
      std::vector<int> local(g.n, -1);
      for (int w : comp) {
        local[w] = out.n++;
        out.black.push_back(0);
      }
      for (const BWGraph::Edge& e : g.edges) {
        if (local[e.a] >= 0 && local[e.b] >= 0)
          out.add_edge(local[e.a], local[e.b], e.label);
        else if (local[e.a] >= 0 && g.black[e.b])
          out.add_edge(local[e.a], black_id[e.b], e.label);
        else if (local[e.b] >= 0 && g.black[e.a])
          out.add_edge(black_id[e.a], local[e.b], e.label);
      }
    }
  }
  return out;
}

std::optional<BWGraph> invert_bu(const BWGraph& g) {
  check_bu_labels(g);
  auto comps = white_components(g);
  for (const auto& [comp, blacks] : comps)
    if (blacks.empty()) return std::nullopt;  // BU output never has such components

  // Group components by attachment-isomorphism: a bijection of members which
  // preserves internal edges and each member's exact set of black neighbours.
  std::map<std::vector<int>, std::uint64_t> attachment_ids;
  auto comp_graph = [&](std::size_t c) {
    const auto& comp = comps[c].first;
    ColoredGraph cg;
    cg.n = static_cast<int>(comp.size());
    cg.color.resize(cg.n);
    cg.adj.resize(cg.n);
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::vector<int> nbrs;
      for (const BWGraph::Edge& e : g.edges) {
        int other = -1;
        if (e.a == comp[i]) other = e.b;
        if (e.b == comp[i]) other = e.a;
        if (other >= 0 && g.black[other]) nbrs.push_back(other);
      }
      std::sort(nbrs.begin(), nbrs.end());
      auto [it, fresh] = attachment_ids.emplace(nbrs, attachment_ids.size());
      (void)fresh;
      cg.color[i] = it->second;
    }
    for (const BWGraph::Edge& e : g.edges)
      if (local[e.a] >= 0 && local[e.b] >= 0) cg.add_edge(local[e.a], local[e.b], e.label);
    return cg;
  };

  std::vector<ColoredGraph> graphs;
  graphs.reserve(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) graphs.push_back(comp_graph(c));

  std::vector<int> cls(comps.size(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (find_isomorphism(graphs[classes[k][0]], graphs[c])) {
        classes[k].push_back(c);
        cls[c] = static_cast<int>(k);
        break;
      }
    }
    if (cls[c] == -1) {
      cls[c] = static_cast<int>(classes.size());
      classes.push_back({c});
    }
  }

  // Each class of size k whose components have n black neighbours must
  // collapse to k/n components.
  std::vector<char> keep_comp(comps.size(), 0);
  for (const auto& members : classes) {
    std::size_t nb = comps[members[0]].second.size();
    if (members.size() % nb != 0) return std::nullopt;
    for (std::size_t i = 0; i < members.size() / nb; ++i) keep_comp[members[i]] = 1;
  }

  std::vector<char> keep(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    if (g.black[v]) keep[v] = 1;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (keep_comp[c])
      for (int w : comps[c].first) keep[w] = 1;

  BWGraph h;
  std::vector<int> id(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (keep[v]) {
      id[v] = h.n++;
      h.black.push_back(g.black[v]);
    }
  for (const BWGraph::Edge& e : g.edges)
    if (id[e.a] >= 0 && id[e.b] >= 0) h.add_edge(id[e.a], id[e.b], e.label);

  if (!bwgraph_isomorphic(bu_expand(h), g)) return std::nullopt;
  return h;
}

std::string bwgraph_to_json(const BWGraph& g) {
  nlohmann::json out;
  out["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.n; ++v)
    out["vertices"].push_back({{"id", v}, {"color", g.black[v] ? "black" : "white"}});
  out["edges"] = nlohmann::json::array();
  for (const BWGraph::Edge& e : g.edges) {
    nlohmann::json je{{"a", e.a}, {"b", e.b}};
    if (e.label > 3)
      je["label"] = e.label;
    else
      je["label"] = nullptr;
    out["edges"].push_back(je);
  }
  return out.dump(2) + "\n";
}

BWGraph bwgraph_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bw-graph JSON: ") + e.what(), e.byte);
  }
  try {
    BWGraph g;
    g.n = static_cast<int>(in.at("vertices").size());
    g.black.assign(g.n, 0);
    for (const auto& v : in.at("vertices")) {
      int id = v.at("id").get<int>();
      if (id < 0 || id >= g.n) throw ParseError("bw-graph JSON: vertex id out of range");
      std::string color = v.at("color").get<std::string>();
      if (color != "black" && color != "white")
        throw ParseError("bw-graph JSON: bad color " + color);
      g.black[id] = color == "black";
    }
    for (const auto& e : in.at("edges")) {
      int label = e.contains("label") && !e.at("label").is_null() ? e.at("label").get<int>() : 3;
      g.add_edge(e.at("a").get<int>(), e.at("b").get<int>(), label);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bw-graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bw-graph JSON: ") + e.what());
  }
}

std::string bwgraph_to_dot(const BWGraph& g) {
  std::string out = "graph bw {\n  node [shape=circle];\n";
  for (int v = 0; v < g.n; ++v) {
    out += "  n" + std::to_string(v) + " [style=filled, fillcolor=" +
           (g.black[v] ? "black, fontcolor=white" : "white") + "];\n";
  }
  for (const BWGraph::Edge& e : g.edges) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b);
    if (e.label > 3) out += " [label=\"" + std::to_string(e.label) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace bruhat
