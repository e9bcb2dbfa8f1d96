#include "bruhat/quotient.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include <json.hpp>

#include "bruhat/errors.hpp"

namespace bruhat {

std::string pack_weight(const std::vector<int>& w) {
  std::string s(w.size() * sizeof(int), '\0');
  std::memcpy(s.data(), w.data(), s.size());
  return s;
}

int QuotientTable::index_of(const std::vector<int>& weight) const {
  auto it = index.find(pack_weight(weight));
  return it == index.end() ? -1 : it->second;
}

QuotientTable enumerate_quotient(const CoxeterMatrix& m, const std::vector<int>& j,
                                 std::size_t cap) {
  const int n = m.rank();
  for (int s : j)
    if (s < 0 || s >= n) throw std::invalid_argument("enumerate_quotient: bad J index");

  QuotientTable q;
  q.matrix = m;
  q.j = j;
  std::sort(q.j.begin(), q.j.end());
  q.cartan = cartan_of(m);
  q.roots = positive_roots(q.cartan);

  std::vector<int> seed(n, 1);
  for (int s : q.j) seed[s] = 0;

  q.index.emplace(pack_weight(seed), 0);
  q.elements.push_back(OrbitElement{seed, 0});
  std::size_t head = 0;
  while (head < q.elements.size()) {
    std::vector<int> v = q.elements[head].weight;
    int len = q.elements[head].length;
    ++head;
    for (int i = 0; i < n; ++i) {
      if (v[i] <= 0) continue;  // s_i shortens or stabilises otherwise
      std::vector<int> w = v;
      int vi = v[i];
      for (int k = 0; k < n; ++k) w[k] -= vi * q.cartan.at(i, k);
      auto [it, fresh] = q.index.emplace(pack_weight(w), static_cast<int>(q.elements.size()));
      if (fresh) {
        if (q.elements.size() >= cap)
          throw CapExceeded("enumerate_quotient: orbit larger than cap " +
                            std::to_string(cap));
        q.elements.push_back(OrbitElement{std::move(w), len + 1});
      }
    }
  }

  std::sort(q.elements.begin(), q.elements.end(),
            [](const OrbitElement& a, const OrbitElement& b) {
              if (a.length != b.length) return a.length < b.length;
              return a.weight < b.weight;
            });
  q.index.clear();
  for (int i = 0; i < q.size(); ++i) q.index.emplace(pack_weight(q.elements[i].weight), i);
  return q;
}

long long quotient_length(const CoxeterMatrix& m, const std::vector<int>& j) {
  long long full = static_cast<long long>(positive_roots(cartan_of(m)).size());
  long long sub = static_cast<long long>(positive_roots(cartan_of(submatrix(m, j))).size());
  return full - sub;
}

std::vector<std::pair<int, int>> reflection_images(const QuotientTable& q, int idx) {
  const int n = q.matrix.rank();
  const std::vector<int>& v = q.elements[idx].weight;
  std::vector<std::pair<int, int>> out;
  out.reserve(q.roots.size());
  for (const Root& r : q.roots) {
    long long p = 0;
    for (int k = 0; k < n; ++k) p += static_cast<long long>(r.coroot[k]) * v[k];
    if (p == 0) continue;
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = v[k] - static_cast<int>(p) * r.omega[k];
    int target = q.index_of(w);
    if (target < 0) throw std::logic_error("reflection_images: image left the orbit");
    out.emplace_back(target, q.elements[target].length > q.elements[idx].length ? 1 : -1);
  }
  return out;
}

std::string quotient_to_json(const QuotientTable& q) {
  nlohmann::json out;
  auto types = recognize(q.matrix);
  out["pair"]["group"] = types ? type_product_name(*types) : "unknown";
  std::vector<int> j1;
  for (int s : q.j) j1.push_back(s + 1);
  out["pair"]["j"] = j1;
  out["elements"] = nlohmann::json::array();
  for (const OrbitElement& e : q.elements)
    out["elements"].push_back({{"length", e.length}, {"weight", e.weight}});
  return out.dump(2) + "\n";
}

}  // namespace bruhat
