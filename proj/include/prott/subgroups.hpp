#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "prott/element_set.hpp"
#include "prott/error.hpp"
#include "prott/group.hpp"
#include "prott/primes.hpp"

namespace prott {

inline constexpr std::size_t kDefaultOrderBound = 200;

/// A subgroup of a finite group, as a member bit set.
struct Subgroup {
  GroupPtr parent;
  ElementSet members;

  std::size_t order() const { return members.size(); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

// ---------------------------------------------------------------------------
// Element-set helpers

/// Subgroup generated by `gens`.
inline ElementSet closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet s(g.order());
  s.insert(0);
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element a : gens) {
      Element y = g.mul(x, a);
      if (!s.contains(y)) {
        s.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  auto m = s.members();
  for (Element a : m) {
    if (!s.contains(g.inv(a))) return false;
    for (Element b : m)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline ElementSet conjugate(const FiniteGroup& g, const ElementSet& h, Element x) {
  ElementSet out(g.order());
  for (Element a : h.members()) out.insert(g.conj(a, x));
  return out;
}

/// {ab : a in A, b in B}
inline ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  auto bm = b.members();
  for (Element x : a.members())
    for (Element y : bm) out.insert(g.mul(x, y));
  return out;
}

/// True when N is a normal subgroup of H (both subsets of g).
inline bool is_normal_in(const FiniteGroup& g, const ElementSet& n, const ElementSet& h) {
  if (!n.is_subset_of(h)) return false;
  auto nm = n.members();
  for (Element x : h.members())
    for (Element a : nm)
      if (!n.contains(g.conj(a, x))) return false;
  return true;
}

inline ElementSet normalizer_set(const FiniteGroup& g, const ElementSet& h) {
  ElementSet out(g.order());
  auto hm = h.members();
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < hm.size() && ok; ++i) ok = h.contains(g.conj(hm[i], Element(x)));
    if (ok) out.insert(Element(x));
  }
  return out;
}

/// Smallest k >= 1 with x^k in n.
inline std::size_t order_modulo(const FiniteGroup& g, Element x, const ElementSet& n) {
  std::size_t k = 1;
  for (Element y = x; !n.contains(y); y = g.mul(y, x)) ++k;
  return k;
}

/// H/N is cyclic (N normal in H assumed).
inline bool cyclic_quotient(const FiniteGroup& g, const ElementSet& n, const ElementSet& h) {
  const std::size_t index = h.size() / n.size();
  for (Element x : h.members())
    if (order_modulo(g, x, n) == index) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Subgroup lattice

/// All subgroups of a group in canonical order (size, then member list),
/// together with their partition into conjugacy classes. Class
/// representatives are the canonically least members; classes are ordered by
/// their representatives.
class SubgroupLattice {
 public:
  GroupPtr group;
  std::vector<ElementSet> subgroups;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;

  std::size_t size() const { return subgroups.size(); }
  std::size_t num_classes() const { return classes.size(); }

  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const ElementSet& s) const {
    auto i = find(s);
    if (!i) throw Error(ErrorCode::BadArgument, "element set is not a subgroup of this group");
    return *i;
  }
  std::size_t class_index(const ElementSet& s) const { return class_of[index_of(s)]; }
  std::size_t class_rep(std::size_t cls) const { return classes[cls].front(); }
  const ElementSet& rep_set(std::size_t cls) const { return subgroups[class_rep(cls)]; }

  bool leq(std::size_t a, std::size_t b) const { return subgroups[a].is_subset_of(subgroups[b]); }
  bool is_normal(std::size_t i) const { return classes[class_of[i]].size() == 1; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return subgroups.size() - 1; }

  /// Indices of the maximal proper subgroups.
  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m + 1 < subgroups.size(); ++m) {
      bool is_max = true;
      for (std::size_t l = m + 1; l + 1 < subgroups.size() && is_max; ++l)
        if (subgroups[l].size() > subgroups[m].size() && leq(m, l)) is_max = false;
      if (is_max) out.push_back(m);
    }
    return out;
  }

  friend SubgroupLattice enumerate_subgroups(GroupPtr g, std::size_t bound);

 private:
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Cyclic subgroups seed the search; joins with cyclic subgroups are taken
/// until no new subgroup appears (every subgroup is a join of cyclic ones).
inline SubgroupLattice enumerate_subgroups(GroupPtr gp, std::size_t bound = kDefaultOrderBound) {
  const FiniteGroup& g = *gp;
  if (g.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded,
                "group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));

  struct Found {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet s, std::vector<Element> gens) -> bool {
    if (seen.count(s)) return false;
    seen.emplace(s, found.size());
    found.push_back({std::move(s), std::move(gens)});
    return true;
  };

  add(g.trivial(), {});
  std::vector<std::size_t> cyclic;
  std::vector<Element> cyclic_gen;
  for (std::size_t x = 1; x < g.order(); ++x) {
    auto c = closure(g, {Element(x)});
    if (add(c, {Element(x)})) {
      cyclic.push_back(found.size() - 1);
      cyclic_gen.push_back(Element(x));
    }
  }

  std::vector<std::size_t> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t hi : frontier) {
      for (std::size_t ci = 0; ci < cyclic.size(); ++ci) {
        Element c = cyclic_gen[ci];
        if (found[hi].set.contains(c)) continue;
        std::vector<Element> gens = found[hi].gens;
        gens.push_back(c);
        auto j = closure(g, gens);
        if (add(std::move(j), std::move(gens))) next.push_back(found.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  SubgroupLattice lat;
  lat.group = gp;
  for (auto& f : found) lat.subgroups.push_back(std::move(f.set));
  std::sort(lat.subgroups.begin(), lat.subgroups.end(),
            [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) lat.index_.emplace(lat.subgroups[i], i);

  const std::size_t none = static_cast<std::size_t>(-1);
  lat.class_of.assign(lat.subgroups.size(), none);
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.class_of[i] != none) continue;
    const std::size_t cls = lat.classes.size();
    lat.classes.emplace_back();
    if (g.is_abelian()) {
      lat.class_of[i] = cls;
      lat.classes[cls].push_back(i);
      continue;
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t j = lat.index_.at(conjugate(g, lat.subgroups[i], Element(x)));
      if (lat.class_of[j] == none) {
        lat.class_of[j] = cls;
        lat.classes[cls].push_back(j);
      }
    }
    std::sort(lat.classes[cls].begin(), lat.classes[cls].end());
  }
  return lat;
}

// ---------------------------------------------------------------------------
// Subgroup operations

inline Subgroup make_subgroup(GroupPtr g, ElementSet members) {
  if (members.universe() != g->order() || !is_subgroup(*g, members))
    throw Error(ErrorCode::BadArgument, "element set is not a subgroup");
  return Subgroup{std::move(g), std::move(members)};
}

inline Subgroup normalizer(const Subgroup& h) {
  return Subgroup{h.parent, normalizer_set(*h.parent, h.members)};
}

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N with the canonical surjection. Cosets are numbered by their least element.
inline Quotient quotient(const GroupPtr& g, const ElementSet& n) {
  if (!is_subgroup(*g, n) || !is_normal_in(*g, n, g->whole()))
    throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t order = g->order();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(order, none);
  std::vector<Element> rep;
  auto nm = n.members();
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != none) continue;
    for (Element a : nm) coset[g->mul(Element(x), a)] = rep.size();
    rep.push_back(Element(x));
  }
  const std::size_t q = rep.size();
  std::vector<Element> t(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) t[a * q + b] = static_cast<Element>(coset[g->mul(rep[a], rep[b])]);
  auto qg = share(FiniteGroup::from_flat(q, std::move(t)));
  std::vector<Element> m(order);
  for (std::size_t x = 0; x < order; ++x) m[x] = static_cast<Element>(coset[x]);
  return Quotient{qg, GroupHom::make(g, qg, std::move(m))};
}

inline Quotient quotient(const Subgroup& n) { return quotient(n.parent, n.members); }

/// The subgroup H as a group of its own, with the inclusion into its parent.
inline GroupHom subgroup_as_group(const GroupPtr& g, const ElementSet& h) {
  auto m = h.members();
  const std::size_t k = m.size();
  std::vector<Element> pos(g->order(), 0);
  for (std::size_t i = 0; i < k; ++i) pos[m[i]] = Element(i);
  std::vector<Element> t(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a * k + b] = pos[g->mul(m[a], m[b])];
  std::vector<std::string> labels;
  if (!g->labels().empty())
    for (Element e : m) labels.push_back(g->label(e));
  auto hg = share(FiniteGroup::from_flat(k, std::move(t), std::move(labels)));
  return GroupHom::make(hg, g, std::move(m));
}

inline ElementSet frattini_set(const SubgroupLattice& lat) {
  ElementSet phi = lat.group->whole();
  for (std::size_t m : lat.maximal()) phi = phi & lat.subgroups[m];
  return phi;
}

/// Intersection of all maximal subgroups; the trivial group for the trivial group.
inline Subgroup frattini(const GroupPtr& g) {
  return Subgroup{g, frattini_set(enumerate_subgroups(g, std::max(kDefaultOrderBound, g->order())))};
}

inline bool is_p_group(const FiniteGroup& g, std::uint64_t p) { return is_p_power(g.order(), p); }

inline int p_rank(const SubgroupLattice& lat, std::uint64_t p) {
  const FiniteGroup& g = *lat.group;
  if (!is_p_group(g, p))
    throw Error(ErrorCode::NotAPGroup, "order " + std::to_string(g.order()) + " is not a power of " + std::to_string(p));
  return *exact_log(g.order() / frattini_set(lat).size(), p);
}

/// log_p |P/Phi(P)| for a p-group P.
inline int p_rank(const GroupPtr& g, std::uint64_t p) {
  if (!is_p_group(*g, p))
    throw Error(ErrorCode::NotAPGroup, "order " + std::to_string(g->order()) + " is not a power of " + std::to_string(p));
  return p_rank(enumerate_subgroups(g, std::max(kDefaultOrderBound, g->order())), p);
}

/// Intersection of the normal subgroups with p-power index.
inline ElementSet o_p_set(const SubgroupLattice& lat, std::uint64_t p) {
  const FiniteGroup& g = *lat.group;
  ElementSet out = g.whole();
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_normal(i) && is_p_power(g.order() / lat.subgroups[i].size(), p)) out = out & lat.subgroups[i];
  return out;
}

inline Subgroup o_p(const GroupPtr& g, std::uint64_t p) {
  return Subgroup{g, o_p_set(enumerate_subgroups(g, std::max(kDefaultOrderBound, g->order())), p)};
}

/// H is p-subnormal in G iff O^p(G) <= H.
inline bool is_p_subnormal(const SubgroupLattice& lat, const ElementSet& h, std::uint64_t p) {
  return o_p_set(lat, p).is_subset_of(h);
}

inline bool is_p_subnormal(const Subgroup& h, std::uint64_t p) {
  return o_p(h.parent, p).members.is_subset_of(h.members);
}

/// Step convention for subnormal chains.
enum class ChainStep {
  IndexP,          // each step normal of index exactly p
  CyclicPQuotient  // each step normal with cyclic p-group quotient
};

/// Minimal length of a chain H = L_k < ... < L_0 = G with normal steps of the
/// given kind, searched breadth-first through the subgroups containing H.
/// nullopt when no such chain exists.
inline std::optional<int> min_p_chain_length(const SubgroupLattice& lat, const ElementSet& h, std::uint64_t p,
                                             ChainStep step = ChainStep::IndexP) {
  const FiniteGroup& g = *lat.group;
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (h.is_subset_of(lat.subgroups[i])) above.push_back(i);
  const std::size_t target = lat.index_of(h);
  std::vector<int> dist(lat.size(), -1);
  std::deque<std::size_t> queue{lat.top()};
  dist[lat.top()] = 0;
  while (!queue.empty()) {
    std::size_t upper = queue.front();
    queue.pop_front();
    if (upper == target) return dist[upper];
    const auto& us = lat.subgroups[upper];
    for (std::size_t lower : above) {
      if (dist[lower] >= 0) continue;
      const auto& ls = lat.subgroups[lower];
      if (ls.size() >= us.size() || !ls.is_subset_of(us)) continue;
      const std::size_t index = us.size() / ls.size();
      if (step == ChainStep::IndexP ? index != p : !is_p_power(index, p)) continue;
      if (!is_normal_in(g, ls, us)) continue;
      if (step == ChainStep::CyclicPQuotient && !cyclic_quotient(g, ls, us)) continue;
      dist[lower] = dist[upper] + 1;
      queue.push_back(lower);
    }
  }
  return std::nullopt;
}

inline std::optional<int> min_p_chain_length(const Subgroup& h, std::uint64_t p, ChainStep step = ChainStep::IndexP) {
  return min_p_chain_length(enumerate_subgroups(h.parent, std::max(kDefaultOrderBound, h.parent->order())), h.members,
                            p, step);
}

}  // namespace prott
