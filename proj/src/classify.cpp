#include "bruhat/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bruhat/isomorphism.hpp"

namespace bruhat {

namespace {

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
  for (int k = 0; k < 8; ++k) {
    h ^= (x >> (8 * k)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

int hash_rounds(int n) {
  int r = 2;
  for (int k = 1; k < n; k *= 2) r += 3;
  return r;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " = ";
    out += names[i];
  }
  return out;
}

std::vector<int> iota_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

CoxeterPair make_coxeter_pair(const std::vector<WeylType>& factors, std::vector<int> j) {
  CoxeterPair p;
  p.factors = factors;
  p.matrix = build_weyl(factors);
  std::sort(j.begin(), j.end());
  p.j = canonical_subset(p.matrix, j);
  p.name = pair_name(factors, p.j);
  std::uint64_t num = 1;
  for (const auto& t : factors) num *= group_order(t);
  auto sub = recognize(submatrix(p.matrix, p.j));
  if (!sub) throw std::logic_error("parabolic subdiagram not of Weyl type");
  std::uint64_t den = 1;
  for (const auto& t : *sub) den *= group_order(t);
  p.quotient_size = num / den;
  return p;
}

std::string Fingerprint::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv_mix(h, static_cast<std::uint64_t>(size));
  h = fnv_mix(h, static_cast<std::uint64_t>(length));
  for (auto x : rank_histogram) h = fnv_mix(h, static_cast<std::uint64_t>(x));
  for (const auto& d : degrees) {
    h = fnv_mix(h, static_cast<std::uint64_t>(d.first));
    h = fnv_mix(h, static_cast<std::uint64_t>(d.second));
  }
  h = fnv_mix(h, refine);
  for (auto x : mu_multiset) h = fnv_mix(h, static_cast<std::uint64_t>(x));
  for (auto x : nu_multiset) h = fnv_mix(h, static_cast<std::uint64_t>(x));
  std::ostringstream os;
  os << std::hex;
  for (int k = 15; k >= 0; --k) os << ((h >> (4 * k)) & 0xf);
  return os.str();
}

Fingerprint fingerprint_of(const PointedPoset& p) {
  Fingerprint f;
  f.size = p.size();
  f.length = p.length();
  for (int c : p.rank_sizes()) f.rank_histogram.push_back(c);
  f.degrees.reserve(p.size());
  for (int v = 0; v < p.size(); ++v)
    f.degrees.emplace_back(static_cast<int>(p.down(v).size()), static_cast<int>(p.up(v).size()));
  std::sort(f.degrees.begin(), f.degrees.end());
  f.refine = refinement_hash(color_encode(p), hash_rounds(p.size()));
  ReconTriple t = triple_of(p);
  for (const auto& [a, b, v] : t.mu) f.mu_multiset.push_back(v);
  for (const auto& [a, v] : t.nu) f.nu_multiset.push_back(v);
  std::sort(f.mu_multiset.begin(), f.mu_multiset.end());
  std::sort(f.nu_multiset.begin(), f.nu_multiset.end());
  return f;
}

PairEnumeration enumerate_pairs(int max_rank, std::uint64_t max_quotient) {
  if (max_rank > 25) throw std::invalid_argument("sweep rank bound too large");
  PairEnumeration out;
  for (int r = 1; r <= max_rank; ++r) {
    for (char fam : {'A', 'B', 'D', 'E', 'F', 'G'}) {
      if (!valid_weyl_type(fam, r)) continue;
      WeylType t = make_weyl_type(fam, r);
      CoxeterMatrix m = build_weyl(t);
      for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> j;
        for (int i = 0; i < r; ++i)
          if (mask >> i & 1) j.push_back(i);
        if (canonical_subset(m, j) != j) continue;
        CoxeterPair p = make_coxeter_pair({t}, std::move(j));
        if (p.quotient_size > max_quotient)
          out.skipped.emplace_back(p.name, p.quotient_size);
        else
          out.pairs.push_back(std::move(p));
      }
    }
  }
  return out;
}

std::vector<std::vector<std::string>> expected_coincidences(int max_rank,
                                                            std::uint64_t max_quotient) {
  std::vector<std::vector<std::string>> classes;
  auto name_of = [](WeylType t, std::vector<int> j) {
    return make_coxeter_pair({t}, std::move(j)).name;
  };

  // chains of even size 2n
  for (int n = 2; n <= max_rank; ++n) {
    std::vector<std::string> c;
    if (2 * n - 1 <= max_rank && static_cast<std::uint64_t>(2 * n) <= max_quotient)
      c.push_back(name_of(make_weyl_type('A', 2 * n - 1), iota_range(0, 2 * n - 2)));
    if (n <= max_rank && static_cast<std::uint64_t>(2 * n) <= max_quotient)
      c.push_back(name_of(make_weyl_type('B', n), iota_range(1, n)));
    if (n == 3 && max_rank >= 2 && max_quotient >= 6)
      c.push_back(name_of(make_weyl_type('G', 2), {0}));
    if (c.size() >= 2) {
      std::sort(c.begin(), c.end());
      classes.push_back(std::move(c));
    }
  }

  // hypercube-like quotients of size 2^n
  for (int n = 3; n <= max_rank; ++n) {
    std::vector<std::string> c;
    std::uint64_t size = 1ull << n;
    if (size <= max_quotient)
      c.push_back(name_of(make_weyl_type('B', n), iota_range(0, n - 1)));
    if (n + 1 <= max_rank && size <= max_quotient)
      c.push_back(name_of(make_weyl_type('D', n + 1), iota_range(0, n)));
    if (c.size() >= 2) {
      std::sort(c.begin(), c.end());
      classes.push_back(std::move(c));
    }
  }

  // one-point quotients (W, S)
  std::vector<std::string> triv;
  for (int r = 1; r <= max_rank; ++r)
    for (char fam : {'A', 'B', 'D', 'E', 'F', 'G'})
      if (valid_weyl_type(fam, r))
        triv.push_back(name_of(make_weyl_type(fam, r), iota_range(0, r)));
  if (triv.size() >= 2 && max_quotient >= 1) {
    std::sort(triv.begin(), triv.end());
    classes.push_back(std::move(triv));
  }

  std::sort(classes.begin(), classes.end());
  return classes;
}

CoincidenceReport classify(int max_rank, std::uint64_t max_quotient, int jobs) {
  PairEnumeration en = enumerate_pairs(max_rank, max_quotient);
  const std::size_t count = en.pairs.size();
  std::vector<std::optional<PointedPoset>> posets(count);
  std::vector<Fingerprint> fps(count);
  std::size_t cap = static_cast<std::size_t>(max_quotient) + 16;

  auto work = [&](std::size_t i) {
    QuotientTable q = enumerate_quotient(en.pairs[i].matrix, en.pairs[i].j, cap);
    posets[i].emplace(bruhat_order(q));
    fps[i] = fingerprint_of(*posets[i]);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  std::map<Fingerprint, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < count; ++i) groups[fps[i]].push_back(i);

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [fp, idxs] : groups)
    for (std::size_t a = 0; a < idxs.size(); ++a)
      for (std::size_t b = a + 1; b < idxs.size(); ++b) {
        std::size_t ra = find(idxs[a]), rb = find(idxs[b]);
        if (ra == rb) continue;
        if (poset_isomorphic(*posets[idxs[a]], *posets[idxs[b]])) parent[rb] = ra;
      }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < count; ++i) by_root[find(i)].push_back(i);

  CoincidenceReport rep;
  rep.pair_count = count;
  rep.skipped = std::move(en.skipped);
  for (const auto& [root, members] : by_root) {
    if (members.size() < 2) {
      ++rep.singleton_count;
      continue;
    }
    CoincidenceReport::Class c;
    for (std::size_t i : members) c.members.push_back(en.pairs[i].name);
    std::sort(c.members.begin(), c.members.end());
    c.fingerprint = fps[members.front()].digest();
    c.quotient_size = en.pairs[members.front()].quotient_size;
    rep.classes.push_back(std::move(c));
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const auto& a, const auto& b) { return a.members < b.members; });

  std::vector<std::vector<std::string>> got;
  for (const auto& c : rep.classes) got.push_back(c.members);
  std::vector<std::vector<std::string>> want = expected_coincidences(max_rank, max_quotient);
  for (const auto& w : want)
    if (std::find(got.begin(), got.end(), w) == got.end())
      rep.discrepancies.push_back("missing class: " + join_names(w));
  for (const auto& g : got)
    if (std::find(want.begin(), want.end(), g) == want.end())
      rep.discrepancies.push_back("unexpected class: " + join_names(g));
  rep.matches_expected = rep.discrepancies.empty();
  return rep;
}

std::string report_to_json(const CoincidenceReport& r) {
  nlohmann::json j;
  j["pairs"] = r.pair_count;
  j["singletons"] = r.singleton_count;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json jc;
    jc["members"] = c.members;
    jc["fingerprint"] = c.fingerprint;
    jc["quotient_size"] = c.quotient_size;
    j["classes"].push_back(jc);
  }
  j["skipped"] = nlohmann::json::array();
  for (const auto& [name, size] : r.skipped)
    j["skipped"].push_back({{"pair", name}, {"quotient_size", size}});
  j["matches_expected"] = r.matches_expected;
  j["discrepancies"] = r.discrepancies;
  return j.dump(2) + "\n";
}

Theorem1Report verify_theorem1(const CoxeterMatrix& m, const std::vector<int>& j) {
  Theorem1Report rep;
  std::vector<char> in_j(m.rank(), 0);
  for (int s : j) in_j[s] = 1;
  std::vector<int> outside;
  for (int i = 0; i < m.rank(); ++i)
    if (!in_j[i]) outside.push_back(i);

  QuotientTable q = enumerate_quotient(m, j);
  PointedPoset p = bruhat_order(q);
  std::vector<int> x1 = x1_of(p);
  std::ostringstream note;

  // A rank-1 element is s(lambda_J) for a unique s outside J; that weight is
  // negative exactly in coordinate s.
  std::vector<int> gen(x1.size(), -1);
  bool ok = x1.size() == outside.size();
  if (!ok)
    note << "rank-1 count " << x1.size() << " differs from |S \\ J| = " << outside.size() << "; ";
  std::vector<char> seen(m.rank(), 0);
  for (std::size_t k = 0; ok && k < x1.size(); ++k) {
    const std::vector<int>& w = q.elements[x1[k]].weight;
    int neg = -1;
    bool unique = true;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i] < 0) {
        if (neg >= 0) unique = false;
        neg = i;
      }
    if (neg < 0 || !unique || in_j[neg] || seen[neg]) {
      ok = false;
      note << "weight labelling failed at rank-1 element " << x1[k] << "; ";
    } else {
      seen[neg] = 1;
      gen[k] = neg;
    }
  }
  rep.x1_ok = ok;

  if (ok) {
    rep.mu_ok = true;
    for (std::size_t a = 0; a < x1.size() && rep.mu_ok; ++a)
      for (std::size_t b = a + 1; b < x1.size() && rep.mu_ok; ++b) {
        long long want = m.m(gen[a], gen[b]);
        long long got = mu(p, x1[a], x1[b]);
        if (got != want) {
          rep.mu_ok = false;
          note << "mu(" << gen[a] + 1 << "," << gen[b] + 1 << ") = " << got << ", bond is "
               << want << "; ";
        }
      }
    rep.nu_ok = true;
    for (std::size_t a = 0; a < x1.size() && rep.nu_ok; ++a) {
      long long want = 0;
      for (int t : j)
        if (m.m(gen[a], t) >= 3) ++want;
      long long got = nu(p, x1[a]);
      if (got != want) {
        rep.nu_ok = false;
        note << "nu(" << gen[a] + 1 << ") = " << got << ", J-neighbour count is " << want << "; ";
      }
    }
  }
  rep.detail = note.str().empty() ? "ok" : note.str();
  return rep;
}

std::vector<FamilyInstance> lemnew_families_check(int mn_bound) {
  std::vector<FamilyInstance> out;
  for (int m = 1; m + 2 <= mn_bound; ++m)
    for (int n = 2; m + n <= mn_bound; ++n) {
      auto run = [&](const char* family, const std::vector<int>& sub, const CoxeterPair& left,
                     const CoxeterPair& right, long long expected_diff) {
        FamilyInstance fi;
        fi.family = family;
        fi.m = m;
        fi.n = n;
        fi.sub = sub;
        fi.left = left.name;
        fi.right = right.name;
        QuotientTable ql = enumerate_quotient(left.matrix, left.j);
        QuotientTable qr = enumerate_quotient(right.matrix, right.j);
        PointedPoset pl = bruhat_order(ql);
        PointedPoset pr = bruhat_order(qr);
        fi.bw_match = bwgraph_isomorphic(g_of(pl), g_of(pr)).has_value();
        fi.len_left = pl.length();
        fi.len_right = pr.length();
        fi.expected_diff = expected_diff;
        fi.diff_ok = fi.len_left - fi.len_right == expected_diff;
        fi.posets_distinct =
            pl.size() != pr.size() || !poset_isomorphic(pl, pr).has_value();
        out.push_back(std::move(fi));
      };

      // (B_{m+n}, P x A_{n-1}) against (D_{m+n+1}, P x A_n)
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m - 1; ++i)
          if (mask >> i & 1) sub.push_back(i);
        std::vector<int> jl = sub, jr = sub;
        for (int i = m; i < m + n - 1; ++i) jl.push_back(i);
        for (int i = m; i < m + n; ++i) jr.push_back(i);
        run("B/D", sub, make_coxeter_pair({make_weyl_type('B', m + n)}, jl),
            make_coxeter_pair({make_weyl_type('D', m + n + 1)}, jr), -m);
      }

      // (B_{m+n}, Q x B_{n-1}) against (A_{m+2n-1}, Q x A_{2n-2})
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
          if (mask >> i & 1) sub.push_back(i);
        std::vector<int> jl = sub, jr = sub;
        for (int i = m + 1; i < m + n; ++i) jl.push_back(i);
        for (int i = m + 1; i < m + 2 * n - 1; ++i) jr.push_back(i);
        run("B/A", sub, make_coxeter_pair({make_weyl_type('B', m + n)}, jl),
            make_coxeter_pair({make_weyl_type('A', m + 2 * n - 1)}, jr),
            static_cast<long long>(m) * (m + 1) / 2);
      }
    }
  return out;
}

std::optional<BWGraph> reconstruct_pair(const PointedPoset& p) { return invert_bu(g_of(p)); }

}  // namespace bruhat
