#pragma once

// Test-side reference computations. These deliberately avoid the library's
// algorithms: subgroups come from brute-force closure of a few generators
// (three by default), subnormality from explicit chain search, ranks from p-th powers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "prott/tower.hpp"

namespace oracle {

using Set = std::vector<std::uint32_t>;  // sorted members

struct Table {
  std::size_t n;
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> inv;
  std::uint32_t id;

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

inline Table table_of(const prott::FiniteGroup& g) {
  Table t{g.order(), {}, {}, 0};
  t.mul.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a)
    for (std::size_t b = 0; b < t.n; ++b) t.mul[a * t.n + b] = g.mul(prott::Element(a), prott::Element(b));
  // locate the identity and inverses from the table alone
  for (std::uint32_t e = 0; e < t.n; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < t.n && ok; ++a) ok = t(e, a) == a && t(a, e) == a;
    if (ok) t.id = e;
  }
  t.inv.resize(t.n);
  for (std::uint32_t a = 0; a < t.n; ++a)
    for (std::uint32_t b = 0; b < t.n; ++b)
      if (t(a, b) == t.id) t.inv[a] = b;
  return t;
}

/// Closure under multiplication, iterated to a fixed point over all pairs.
inline Set close(const Table& t, const Set& gens) {
  std::vector<char> in(t.n, 0);
  in[t.id] = 1;
  for (auto g : gens) in[g] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t a = 0; a < t.n; ++a) {
      if (!in[a]) continue;
      for (std::uint32_t b = 0; b < t.n; ++b)
        if (in[b] && !in[t(a, b)]) in[t(a, b)] = 1, grew = true;
    }
  }
  Set out;
  for (std::uint32_t a = 0; a < t.n; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

/// Every subgroup generated by at most `gens` elements.
inline std::vector<Set> subgroups_by_closure(const Table& t, int gens = 3) {
  std::set<Set> found;
  std::set<Set> layer;
  layer.insert(close(t, {}));
  for (int round = 0; round < gens; ++round) {
    std::set<Set> next;
    for (const auto& h : layer)
      for (std::uint32_t g = 0; g < t.n; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        Set gens = h;
        gens.push_back(g);
        next.insert(close(t, gens));
      }
    found.insert(layer.begin(), layer.end());
    layer = std::move(next);
  }
  found.insert(layer.begin(), layer.end());
  return {found.begin(), found.end()};
}

inline Set conj(const Table& t, const Set& h, std::uint32_t g) {
  Set out;
  for (auto x : h) out.push_back(t(t(t.inv[g], x), g));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t class_count(const Table& t, const std::vector<Set>& subs) {
  std::set<Set> canon;
  for (const auto& h : subs) {
    Set best = h;
    for (std::uint32_t g = 0; g < t.n; ++g) best = std::min(best, conj(t, h, g));
    canon.insert(best);
  }
  return canon.size();
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool normal_in(const Table& t, const Set& n, const Set& h) {
  for (auto g : h)
    if (conj(t, n, g) != n) return false;
  return true;
}

inline bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Chain search: is there H = L_k ⊴ ... ⊴ L_0 = G with p-group steps?
/// With `index_p` every step must have index exactly p.
inline bool p_subnormal_chain(const Table& t, const std::vector<Set>& subs, const Set& h, std::uint64_t p,
                              bool index_p) {
  std::set<Set> seen;
  Set whole;
  for (std::uint32_t a = 0; a < t.n; ++a) whole.push_back(a);
  std::vector<Set> stack{whole};
  while (!stack.empty()) {
    Set m = stack.back();
    stack.pop_back();
    if (m == h) return true;
    if (!seen.insert(m).second) continue;
    for (const auto& l : subs) {
      if (l.size() >= m.size() || !subset(h, l) || !subset(l, m)) continue;
      const std::size_t idx = m.size() / l.size();
      if (index_p ? idx != p : !is_p_power(idx, p)) continue;
      if (normal_in(t, l, m)) stack.push_back(l);
    }
  }
  return false;
}

/// Shortest chain from h up to g with normal steps of index p.
inline int min_index_p_chain(const Table& t, const std::vector<Set>& subs, const Set& h, const Set& g,
                             std::uint64_t p) {
  std::map<Set, int> dist{{h, 0}};
  std::queue<Set> q;
  q.push(h);
  while (!q.empty()) {
    Set l = q.front();
    q.pop();
    if (l == g) return dist[l];
    for (const auto& m : subs) {
      if (!subset(l, m) || !subset(m, g) || m.size() != l.size() * p || dist.count(m)) continue;
      if (!normal_in(t, l, m)) continue;
      dist[m] = dist[l] + 1;
      q.push(m);
    }
  }
  return -1;
}

inline int log_p(std::size_t n, std::uint64_t p) {
  int k = 0;
  while (n > 1) n /= p, ++k;
  return k;
}

/// rank_p(H/K) for K ⊴ H with H/K an abelian p-group: log_p [H : K H^p].
inline int abelian_rank(const Table& t, const Set& h, const Set& k, std::uint64_t p) {
  std::set<std::uint32_t> kp(k.begin(), k.end());
  std::set<std::uint32_t> prod;
  for (auto x : h) {
    std::uint32_t y = t.id;
    for (std::uint64_t i = 0; i < p; ++i) y = t(y, x);
    for (auto z : kp) prod.insert(t(z, y));
  }
  Set gen(prod.begin(), prod.end());
  return log_p(h.size() / close(t, gen).size(), p);
}

/// Frattini subgroup from the maximal subgroups in `subs`.
inline Set frattini(const Table& t, const std::vector<Set>& subs) {
  Set whole;
  for (std::uint32_t a = 0; a < t.n; ++a) whole.push_back(a);
  Set out = whole;
  for (const auto& m : subs) {
    if (m.size() == t.n) continue;
    bool maximal = true;
    for (const auto& x : subs)
      if (x.size() > m.size() && x.size() < t.n && subset(m, x)) maximal = false;
    if (!maximal) continue;
    Set tmp;
    std::set_intersection(out.begin(), out.end(), m.begin(), m.end(), std::back_inserter(tmp));
    out = tmp;
  }
  return out;
}

/// O^p as the subgroup generated by the elements of order prime to p.
inline Set o_p_generated(const Table& t, std::uint64_t p) {
  Set gens;
  for (std::uint32_t a = 0; a < t.n; ++a) {
    std::size_t order = 1;
    for (std::uint32_t y = a; y != t.id; y = t(y, a)) ++order;
    if (order % p != 0) gens.push_back(a);
  }
  return close(t, gens);
}

/// Corpus of finite groups: cyclic up to 48, products of at most three cyclic
/// factors of order at most 4, S3, S4, Q8.
struct Named {
  std::string name;
  prott::GroupPtr group;
};

inline std::vector<Named> corpus() {
  using namespace prott;
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 48; ++n) out.push_back({"C" + std::to_string(n), share(cyclic_group(n))});
  for (std::size_t a = 2; a <= 4; ++a)
    for (std::size_t b = a; b <= 4; ++b) {
      out.push_back({"C" + std::to_string(a) + "xC" + std::to_string(b),
                     share(direct_product({share(cyclic_group(a)), share(cyclic_group(b))}))});
      for (std::size_t c = b; c <= 4; ++c)
        out.push_back({"C" + std::to_string(a) + "xC" + std::to_string(b) + "xC" + std::to_string(c),
                       share(direct_product({share(cyclic_group(a)), share(cyclic_group(b)), share(cyclic_group(c))}))});
    }
  out.push_back({"S3", share(symmetric_group(3))});
  out.push_back({"S4", share(symmetric_group(4))});
  out.push_back({"Q8", share(quaternion_group())});
  return out;
}

/// Realized towers, each at the largest depth <= 4 under the default cap.
inline std::vector<prott::Tower> tower_corpus() {
  using namespace prott;
  std::vector<Tower> out;
  for (const char* d : {"Zp(2)", "Zp(3)", "Zp(5)", "FpInf(2)", "FpInf(3)", "Z/6", "S3", "S4", "Q8", "Zp(2) x Z/3",
                        "Zp(3) x Z/2", "Zp(2) x Zp(3)", "Zp(2) x Zp(2)", "S3 x Zp(2)", "Q8 x Zp(3)", "FpInf(2) x Z/3"}) {
    auto d0 = parse_descriptor(d);
    for (std::size_t depth = 4; depth > 0; --depth) {
      try {
        out.push_back(realize(d0, depth));
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DepthTooLarge) throw;
      }
    }
  }
  return out;
}

}  // namespace oracle
