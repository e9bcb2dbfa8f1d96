#include "bruhat/pairspec.hpp"

#include <algorithm>
#include <set>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t at = 0;

  bool done() const { return at >= s.size(); }
  char peek() const { return s[at]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, at); }
};

int parse_int(Cursor& c) {
  if (c.done() || !isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("pair spec: expected a number");
  long v = 0;
  while (!c.done() && isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.s[c.at++] - '0');
    if (v > 1000000) c.fail("pair spec: number too large");
  }
  return static_cast<int>(v);
}

WeylType parse_type(Cursor& c) {
  if (c.done()) c.fail("pair spec: expected a type like A3");
  char fam = c.peek();
  if (fam < 'A' || fam > 'Z') c.fail("pair spec: expected a family letter A/B/D/E/F/G");
  std::size_t fam_at = c.at;
  ++c.at;
  int rank = parse_int(c);
  if (!valid_weyl_type(fam, rank))
    throw ParseError("pair spec: not a Weyl type: " + (fam + std::to_string(rank)), fam_at);
  return WeylType{fam, rank};
}

std::vector<WeylType> parse_type_product(Cursor& c) {
  std::vector<WeylType> out{parse_type(c)};
  while (!c.done() && c.peek() == 'x') {
    ++c.at;
    out.push_back(parse_type(c));
  }
  return out;
}

// Canonical multiset ordering for naming J components.
bool type_before(const WeylType& a, const WeylType& b) {
  if (a.rank != b.rank) return a.rank > b.rank;
  return a.family < b.family;
}

std::vector<WeylType> sorted_types(std::vector<WeylType> ts) {
  std::sort(ts.begin(), ts.end(), type_before);
  return ts;
}

std::vector<WeylType> component_types(const CoxeterMatrix& m, const std::vector<int>& j) {
  std::vector<WeylType> out;
  for (const auto& comp : connected_components(m, j)) {
    auto t = recognize_irreducible(submatrix(m, comp));
    if (!t) throw std::invalid_argument("parabolic is not of Weyl type");
    out.push_back(*t);
  }
  return sorted_types(out);
}

}  // namespace

std::vector<int> canonical_subset(const CoxeterMatrix& m, const std::vector<int>& j) {
  std::vector<int> best;
  bool first = true;
  for (const auto& perm : diagram_automorphisms(m)) {
    std::vector<int> image;
    image.reserve(j.size());
    for (int s : j) image.push_back(perm[s]);
    std::sort(image.begin(), image.end());
    if (first || image < best) {
      best = std::move(image);
      first = false;
    }
  }
  return best;
}

std::string pair_name(const std::vector<WeylType>& factors, const std::vector<int>& j) {
  CoxeterMatrix m = build_weyl(factors);
  std::string out = type_product_name(factors) + "/";
  if (j.empty()) return out + "e";
  out += type_product_name(component_types(m, j));
  out += "@{";
  std::vector<int> canon = canonical_subset(m, j);
  for (std::size_t i = 0; i < canon.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(canon[i] + 1);
  }
  return out + "}";
}

PairSpec parse_pair_spec(const std::string& text) {
  Cursor c{text};
  PairSpec spec;
  spec.factors = parse_type_product(c);
  if (c.done() || c.peek() != '/') c.fail("pair spec: expected '/'");
  ++c.at;
  if (c.done()) c.fail("pair spec: missing parabolic part (use 'e' for empty)");

  CoxeterMatrix m = spec.matrix();
  const int n = m.rank();

  if (c.peek() == 'e' && c.at + 1 == text.size()) {
    return spec;
  }

  std::vector<WeylType> jtypes = sorted_types(parse_type_product(c));
  int jrank = 0;
  for (const WeylType& t : jtypes) jrank += t.rank;
  if (jrank > n) c.fail("pair spec: parabolic rank exceeds group rank");

  if (!c.done() && c.peek() == '@') {
    ++c.at;
    if (c.done() || c.peek() != '{') c.fail("pair spec: expected '{' after '@'");
    ++c.at;
    std::set<int> picked;
    for (;;) {
      std::size_t num_at = c.at;
      int v = parse_int(c);
      if (v < 1 || v > n)
        throw ParseError("pair spec: index " + std::to_string(v) + " outside 1.." +
                             std::to_string(n),
                         num_at);
      if (!picked.insert(v - 1).second)
        throw ParseError("pair spec: repeated index " + std::to_string(v), num_at);
      if (c.done()) c.fail("pair spec: unterminated index list");
      if (c.peek() == ',') {
        ++c.at;
        continue;
      }
      if (c.peek() == '}') {
        ++c.at;
        break;
      }
      c.fail("pair spec: expected ',' or '}'");
    }
    if (!c.done()) c.fail("pair spec: trailing characters");
    spec.j.assign(picked.begin(), picked.end());
    std::vector<WeylType> actual;
    try {
      actual = component_types(m, spec.j);
    } catch (const std::invalid_argument&) {
      throw ParseError("pair spec: given indices do not form a Weyl parabolic");
    }
    if (actual != jtypes)
      throw ParseError("pair spec: indices give type " + type_product_name(actual) +
                       ", not " + type_product_name(jtypes));
    return spec;
  }
  if (!c.done()) c.fail("pair spec: trailing characters");

  // No explicit indices: resolve by type, unique up to diagram automorphism.
  std::vector<std::vector<int>> matches;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> j;
    for (int s = 0; s < n; ++s)
      if (mask & (1u << s)) j.push_back(s);
    if (static_cast<int>(j.size()) != jrank) continue;
    bool weyl_ok = true;
    std::vector<WeylType> actual;
    try {
      actual = component_types(m, j);
    } catch (const std::invalid_argument&) {
      weyl_ok = false;
    }
    if (weyl_ok && actual == jtypes) matches.push_back(std::move(j));
  }
  std::set<std::vector<int>> orbits;
  for (const auto& j : matches) orbits.insert(canonical_subset(m, j));
  if (orbits.empty())
    throw ParseError("pair spec: " + type_product_name(spec.factors) +
                     " has no parabolic of type " + type_product_name(jtypes));
  if (orbits.size() > 1) {
    std::string msg = "pair spec: ambiguous parabolic " + type_product_name(jtypes) +
                      "; pick one of:";
    for (const auto& j : orbits) {
      msg += " @{";
      for (std::size_t i = 0; i < j.size(); ++i)
        msg += (i ? "," : "") + std::to_string(j[i] + 1);
      msg += "}";
    }
    throw ParseError(msg);
  }
  spec.j = *orbits.begin();
  return spec;
}

}  // namespace bruhat
