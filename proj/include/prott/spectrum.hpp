#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "prott/error.hpp"
#include "prott/extnat.hpp"
#include "prott/primes.hpp"
#include "prott/subgroups.hpp"
#include "prott/tower.hpp"

namespace prott {

/// Heights are indexed so that n = 1 is the rational point and P(p, n) is
/// the kernel of the height n-1 Morava K-theory; ∞ exceeds every integer.
using Height = ExtNat;

/// Marker for the prime slot of a height-1 prime.
inline constexpr std::uint64_t kNoPrime = 0;

inline std::string prime_str(std::uint64_t p) { return p == kNoPrime ? "dot" : std::to_string(p); }

/// A point P_G(H, p, n) at a given level of a tower, H given by its class.
struct TTPrime {
  std::size_t level = 0;
  std::size_t cls = 0;
  std::uint64_t p = kNoPrime;
  Height n = Height::of(1);

  friend bool operator==(const TTPrime& a, const TTPrime& b) {
    return a.level == b.level && a.cls == b.cls && a.p == b.p && a.n == b.n;
  }
};

/// Replaces the subgroup by its class and forgets the prime at height 1.
inline TTPrime prime_canonicalize(const Tower& t, std::size_t level, const ElementSet& subgroup, std::uint64_t p,
                                  Height n) {
  t.check_level(level);
  if (!n.infinite && n.value == 0) throw Error(ErrorCode::BadHeight, "heights start at 1");
  TTPrime out;
  out.level = level;
  out.cls = t.lattice(level).class_index(subgroup);
  out.n = n;
  if (!n.infinite && n.value == 1) {
    out.p = kNoPrime;
  } else {
    if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
    out.p = p;
  }
  return out;
}

/// Blueshift bounds for one finite level.
struct LevelBounds {
  bool possible = false;  // K is conjugate to a p-subnormal subgroup of H
  ExtNat lower;
  ExtNat upper;
};

struct BlueshiftResult {
  enum class Kind { Exact, Bounds, Infinite };
  enum class Provenance { AbelianTheorem, LowerUpperBounds };
  Kind kind = Kind::Exact;
  Provenance provenance = Provenance::AbelianTheorem;
  ExtNat lower;
  ExtNat upper;
  std::vector<LevelBounds> per_level;

  ExtNat value() const { return lower; }
};

/// Outcome of an inclusion query.
struct InclusionVerdict {
  enum class Kind { Exact, Undetermined };
  struct Window {
    std::size_t level;
    ExtNat lower;
    ExtNat upper;
  };
  Kind kind = Kind::Exact;
  bool value = false;  // meaningful when Exact
  std::string rule;
  std::size_t decided_level = 0;
  std::vector<Window> windows;  // levels where the bound sandwich is open

  bool exact_true() const { return kind == Kind::Exact && value; }
  bool exact_false() const { return kind == Kind::Exact && !value; }
  std::pair<ExtNat, ExtNat> bounds() const {
    ExtNat lo = ExtNat::of(0), hi = ExtNat::of(0);
    for (const auto& w : windows) {
      lo = max(lo, w.lower);
      hi = max(hi, w.upper);
    }
    return {lo, hi};
  }
};

struct InclusionOptions {
  ChainStep step = ChainStep::IndexP;
};

/// Computes and caches level-wise blueshift data for one tower.
class InclusionOracle {
 public:
  explicit InclusionOracle(const Tower& t, InclusionOptions opts = {}) : t_(t), opts_(opts) {}

  const Tower& tower() const { return t_; }
  const InclusionOptions& options() const { return opts_; }

  /// Bounds for K_i -> H_i at level i and prime p. On an abelian level both
  /// bounds equal rank_p(H_i/K_i). Otherwise every G_i-conjugate K' <= H_i
  /// that is p-subnormal contributes; the problem is reduced to the p-group
  /// H_i/O^p(H_i), the lower bound is the p-rank of Q/(K'Phi(Q)) and the upper
  /// bound the minimal chain length from K' to Q.
  LevelBounds level_bounds(std::size_t i, const ElementSet& k, const ElementSet& h, std::uint64_t p) {
    const auto& lat = t_.lattice(i);
    const std::size_t ki = lat.index_of(k), hi = lat.index_of(h);
    auto key = std::make_tuple(i, ki, hi, p);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    LevelBounds out = compute(i, ki, hi, p);
    cache_.emplace(key, out);
    return out;
  }

  /// Rank of H_i/K_i on abelian levels (K <= H, p-group quotient assumed).
  int abelian_rank(std::size_t i, const ElementSet& k, const ElementSet& h, std::uint64_t p) {
    auto b = level_bounds(i, k, h, p);
    return int(b.lower.value);
  }

  /// Decides P(K, p, n) ⊆ P(H, q, m) using levels 0..top of the given chains.
  InclusionVerdict decide(const std::vector<ElementSet>& kc, std::uint64_t p, Height n,
                          const std::vector<ElementSet>& hc, std::uint64_t q, Height m, std::size_t top,
                          std::optional<ExtNat> certified_rank = std::nullopt) {
    InclusionVerdict v;
    const bool n1 = !n.infinite && n.value == 1;
    const bool m1 = !m.infinite && m.value == 1;
    if (n1) {
      // P(K,1) ⊆ P(H,m) needs m = 1 and zero blueshift, i.e. K ~ H
      v.value = m1;
      v.rule = "height-one";
      for (std::size_t i = 0; i <= top && v.value; ++i) {
        const auto& lat = t_.lattice(i);
        if (lat.class_index(kc[i]) != lat.class_index(hc[i])) {
          v.value = false;
          v.decided_level = i;
        }
      }
      return v;
    }
    if (!m1 && p != q) {
      v.rule = "prime-mismatch";
      return v;
    }
    const bool abelian = t_.is_abelian();
    bool all_upper = true;
    for (std::size_t i = 0; i <= top; ++i) {
      LevelBounds b = level_bounds(i, kc[i], hc[i], p);
      if (!b.possible) {
        v.rule = abelian ? "not-nested-p-quotient" : "not-subconjugate-p-subnormal";
        v.decided_level = i;
        return v;
      }
      if (n < m + b.lower) {
        v.rule = abelian ? "abelian-rank" : "below-lower-bound";
        v.decided_level = i;
        return v;
      }
      if (!(m + b.upper <= n)) {
        all_upper = false;
        v.windows.push_back({i, b.lower, b.upper});
      }
    }
    if (certified_rank && n < m + *certified_rank) {
      v.rule = "abelian-rank";
      v.decided_level = top;
      return v;
    }
    if (all_upper) {
      v.value = true;
      v.rule = abelian ? "abelian-rank" : "upper-bound";
      v.decided_level = top;
      return v;
    }
    v.kind = InclusionVerdict::Kind::Undetermined;
    v.rule = "open-window";
    return v;
  }

 private:
  LevelBounds compute(std::size_t i, std::size_t ki, std::size_t hi, std::uint64_t p) {
    const auto& lat = t_.lattice(i);
    const auto& g = t_.levels[i];
    const ElementSet& hs = lat.subgroups[hi];
    LevelBounds out;
    if (g->is_abelian()) {
      const ElementSet& ks = lat.subgroups[ki];
      if (!ks.is_subset_of(hs) || !is_p_power(hs.size() / ks.size(), p)) return out;
      int r = detail::level_quotient_rank(t_, i, hs, ks, p);
      out.possible = true;
      out.lower = out.upper = ExtNat::of(std::uint64_t(r));
      return out;
    }
    // H as a group, its O^p and the p-group quotient
    auto incl = subgroup_as_group(g, hs);
    const auto hlat = enumerate_subgroups(incl.source, std::max(t_.bound, incl.source->order()));
    const ElementSet oph = o_p_set(hlat, p);
    auto q = quotient(incl.source, oph);
    const auto qlat = enumerate_subgroups(q.group, std::max(t_.bound, q.group->order()));
    const ElementSet phi = frattini_set(qlat);
    std::vector<std::int64_t> pos(g->order(), -1);
    for (std::size_t a = 0; a < incl.map.size(); ++a) pos[incl.map[a]] = std::int64_t(a);

    for (std::size_t kj : lat.classes[lat.class_of[ki]]) {
      const ElementSet& kc = lat.subgroups[kj];
      if (!kc.is_subset_of(hs)) continue;
      ElementSet kin(incl.source->order());
      for (Element e : kc.members()) kin.insert(Element(pos[e]));
      if (!oph.is_subset_of(kin)) continue;
      const ElementSet kq = q.projection.image(kin);
      const ElementSet kphi = product_set(*q.group, kq, phi);
      const int lower = *exact_log(q.group->order() / kphi.size(), p);
      const auto upper = min_p_chain_length(qlat, kq, p, opts_.step);
      if (!upper) continue;  // cannot happen for a p-group; kept total
      const ExtNat lo = ExtNat::of(std::uint64_t(lower)), up = ExtNat::of(std::uint64_t(*upper));
      if (!out.possible) {
        out.possible = true;
        out.lower = lo;
        out.upper = up;
      } else {
        out.lower = max(out.lower, lo);
        out.upper = min(out.upper, up);
      }
    }
    return out;
  }

  const Tower& t_;
  InclusionOptions opts_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::uint64_t>, LevelBounds> cache_;
};

/// One side of an inclusion query: a closed subgroup with a prime and height.
struct PrimeData {
  SubgroupThread subgroup;
  std::uint64_t p = kNoPrime;
  Height n = Height::of(1);
};

namespace detail {
inline std::uint64_t canonical_prime(const PrimeData& d) {
  if (!d.n.infinite && d.n.value == 0) throw Error(ErrorCode::BadHeight, "heights start at 1");
  return (!d.n.infinite && d.n.value == 1) ? kNoPrime : d.p;
}
}  // namespace detail

/// Exact inclusion test for abelian towers: K <= H at every level, H/K a
/// pro-p group, n >= m + rank_p(H/K), and p = q when m > 1.
inline InclusionVerdict includes_abelian(const Tower& t, const PrimeData& k, const PrimeData& h,
                                         InclusionOptions opts = {}) {
  if (!t.is_abelian()) throw Error(ErrorCode::NotAbelian, "tower has a non-abelian level");
  InclusionOracle oracle(t, opts);
  const std::uint64_t p = detail::canonical_prime(k), q = detail::canonical_prime(h);
  std::optional<ExtNat> cert;
  if (p != kNoPrime) {
    bool nested = true;
    for (std::size_t i = 0; i <= t.depth() && nested; ++i)
      nested = k.subgroup.at(i).is_subset_of(h.subgroup.at(i)) &&
               is_p_power(h.subgroup.at(i).size() / k.subgroup.at(i).size(), p);
    if (nested && detail::certified_infinite_rank(t, h.subgroup, k.subgroup, p)) cert = ExtNat::inf();
  }
  return oracle.decide(k.subgroup.chain, p, k.n, h.subgroup.chain, q, h.n, t.depth(), cert);
}

/// Level-wise inclusion oracle. Abelian towers are decided exactly; otherwise
/// the necessary conditions and the blueshift bound sandwich are applied at
/// every level, and an open window is reported as Undetermined.
inline InclusionVerdict includes_levelwise(const Tower& t, const PrimeData& k, const PrimeData& h,
                                           InclusionOptions opts = {}) {
  if (t.is_abelian()) return includes_abelian(t, k, h, opts);
  InclusionOracle oracle(t, opts);
  return oracle.decide(k.subgroup.chain, detail::canonical_prime(k), k.n, h.subgroup.chain, detail::canonical_prime(h),
                       h.n, t.depth());
}

/// Blueshift of the pair K <= H at prime p. Exact for abelian towers,
/// otherwise the sandwich of lower and upper bounds taken over all levels.
inline BlueshiftResult blueshift(const Tower& t, const SubgroupThread& h, const SubgroupThread& k, std::uint64_t p,
                                 Height m = Height::of(2), InclusionOptions opts = {}) {
  (void)m;  // the bounds do not depend on the base height
  if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  BlueshiftResult r;
  if (t.is_abelian()) {
    auto rank = pro_p_rank(t, h, k, p);
    r.provenance = BlueshiftResult::Provenance::AbelianTheorem;
    r.lower = r.upper = rank.value;
    r.kind = rank.value.infinite ? BlueshiftResult::Kind::Infinite : BlueshiftResult::Kind::Exact;
    for (int v : rank.per_level) r.per_level.push_back({true, ExtNat::of(std::uint64_t(v)), ExtNat::of(std::uint64_t(v))});
    return r;
  }
  InclusionOracle oracle(t, opts);
  r.kind = BlueshiftResult::Kind::Bounds;
  r.provenance = BlueshiftResult::Provenance::LowerUpperBounds;
  r.lower = r.upper = ExtNat::of(0);
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    auto b = oracle.level_bounds(i, k.at(i), h.at(i), p);
    if (!b.possible)
      throw Error(ErrorCode::NotPGroupQuotient,
                  "level " + std::to_string(i) + ": K is not conjugate to a p-subnormal subgroup of H");
    r.per_level.push_back(b);
    r.lower = max(r.lower, b.lower);
    r.upper = max(r.upper, b.upper);
  }
  return r;
}

/// General-path bounds (lower, upper) for K <= H, ignoring abelian shortcuts.
inline std::pair<ExtNat, ExtNat> blueshift_bounds_general(const Tower& t, const SubgroupThread& h,
                                                          const SubgroupThread& k, std::uint64_t p,
                                                          InclusionOptions opts = {}) {
  ExtNat lo = ExtNat::of(0), hi = ExtNat::of(0);
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    const auto& g = t.levels[i];
    const auto& hs = h.at(i);
    const auto& ks = k.at(i);
    if (!ks.is_subset_of(hs) || !is_p_power(hs.size() / ks.size(), p) || !is_normal_in(*g, ks, hs))
      throw Error(ErrorCode::NotPGroupQuotient, "level " + std::to_string(i) + ": H/K is not a p-group");
    auto incl = subgroup_as_group(g, hs);
    const auto hlat = enumerate_subgroups(incl.source, std::max(t.bound, incl.source->order()));
    const ElementSet oph = o_p_set(hlat, p);
    auto q = quotient(incl.source, oph);
    const auto qlat = enumerate_subgroups(q.group, std::max(t.bound, q.group->order()));
    ElementSet kin(incl.source->order());
    for (std::size_t a = 0; a < incl.map.size(); ++a)
      if (ks.contains(incl.map[a])) kin.insert(Element(a));
    const ElementSet kq = q.projection.image(kin);
    const ElementSet kphi = product_set(*q.group, kq, frattini_set(qlat));
    lo = max(lo, ExtNat::of(std::uint64_t(*exact_log(q.group->order() / kphi.size(), p))));
    hi = max(hi, ExtNat::of(std::uint64_t(*min_p_chain_length(qlat, kq, p, opts.step))));
  }
  return {lo, hi};
}

/// The inclusion problem moved into the p-group tower H_i/O^p(H_i).
struct ReducedProblem {
  bool subnormal = false;  // false: the inclusion fails, no reduction produced
  std::optional<Tower> tower;
  std::optional<SubgroupThread> k;  // image of a p-subnormal conjugate of K
  std::optional<SubgroupThread> h;  // the whole quotient
};

inline ReducedProblem reduce_to_pro_p(const Tower& t, const SubgroupThread& k, const SubgroupThread& h,
                                      std::uint64_t p) {
  const std::size_t top = t.depth();
  const auto& g = t.levels[top];
  ReducedProblem out;
  const ElementSet op_top = [&] {
    auto incl = subgroup_as_group(g, h.at(top));
    auto lat = enumerate_subgroups(incl.source, std::max(t.bound, incl.source->order()));
    return incl.image(o_p_set(lat, p));
  }();
  std::optional<ElementSet> chosen;
  bool subconjugate = false;
  for (std::size_t x = 0; x < g->order() && !chosen; ++x) {
    ElementSet kc = conjugate(*g, k.at(top), Element(x));
    if (!kc.is_subset_of(h.at(top))) continue;
    subconjugate = true;
    if (op_top.is_subset_of(kc)) chosen = kc;
  }
  if (!subconjugate) throw Error(ErrorCode::NotSubconjugate, "K is not conjugate into H");
  if (!chosen) return out;
  // O^p(H_i) <= K'_i at lower levels follows from the top level, since
  // the image of O^p(H_N) is O^p(H_i)
  const SubgroupThread kt = thread_from_top(t, *chosen);

  std::vector<GroupPtr> levels;
  std::vector<GroupHom> proj, incls;
  for (std::size_t i = 0; i <= top; ++i) {
    auto incl = subgroup_as_group(t.levels[i], h.at(i));
    auto lat = enumerate_subgroups(incl.source, std::max(t.bound, incl.source->order()));
    auto q = quotient(incl.source, o_p_set(lat, p));
    levels.push_back(q.group);
    proj.push_back(q.projection);
    incls.push_back(incl);
  }
  std::vector<GroupHom> steps;
  for (std::size_t i = 0; i < top; ++i) {
    std::vector<std::int64_t> pos(t.group(i).order(), -1);
    for (std::size_t a = 0; a < incls[i].map.size(); ++a) pos[incls[i].map[a]] = std::int64_t(a);
    std::vector<Element> m(levels[i + 1]->order(), 0);
    for (std::size_t a = 0; a < incls[i + 1].map.size(); ++a) {
      Element down = t.steps[i](incls[i + 1].map[a]);
      m[proj[i + 1](Element(a))] = proj[i](Element(pos[down]));
    }
    steps.push_back(GroupHom::make(levels[i + 1], levels[i], std::move(m)));
  }
  Tower rt = make_tower(levels, steps, t.bound);
  std::vector<ElementSet> kchain, hchain;
  for (std::size_t i = 0; i <= top; ++i) {
    ElementSet kin(incls[i].source->order());
    for (std::size_t a = 0; a < incls[i].map.size(); ++a)
      if (kt.at(i).contains(incls[i].map[a])) kin.insert(Element(a));
    kchain.push_back(proj[i].image(kin));
    hchain.push_back(levels[i]->whole());
  }
  out.subnormal = true;
  out.k = thread_from_chain(rt, std::move(kchain), "K'/O^p(H)");
  out.h = thread_from_chain(rt, std::move(hchain), "H/O^p(H)");
  out.tower = std::move(rt);
  return out;
}

// ---------------------------------------------------------------------------
// Prism

struct PrismNode {
  std::size_t cls = 0;
  std::uint64_t p = kNoPrime;
  Height n = Height::of(1);
  std::string id;
  std::string subgroup_label;
  std::size_t order = 0;
  std::vector<std::size_t> trace;  // class index at levels 0..level (the maps iota)
};

struct PrismEdge {
  enum class Tag { Exact, Possible };
  std::size_t src = 0;  // the smaller prime
  std::size_t dst = 0;  // the larger prime
  Tag tag = Tag::Exact;
  std::string rule;
  std::size_t decided_level = 0;
  ExtNat lower, upper;  // window for Possible edges
};

/// Finite approximation of the spectrum at one level: nodes (class, p, n)
/// and the inclusion relation between them, stored as src ⊆ dst.
struct PrismGraph {
  std::size_t level = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t n_max = 1;
  std::vector<PrismNode> nodes;
  std::vector<PrismEdge> edges;                  // full relation, no loops
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // reduction of the Exact part
  std::vector<std::vector<char>> exact;          // exact[a][b]: node a ⊆ node b, reflexive

  std::optional<std::size_t> find(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].id == id) return i;
    return std::nullopt;
  }
};

inline std::string class_label(std::size_t cls) { return "C" + std::to_string(cls); }

inline std::string node_id(std::size_t cls, std::uint64_t p, const Height& n) {
  return class_label(cls) + "|" + prime_str(p) + "|" + n.str();
}

inline PrismGraph build_prism(const Tower& t, std::vector<std::uint64_t> primes, std::uint64_t n_max, std::size_t level,
                              InclusionOptions opts = {}) {
  t.check_level(level);
  if (n_max < 1) throw Error(ErrorCode::BadHeight, "n_max must be at least 1");
  for (auto p : primes)
    if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  PrismGraph g;
  g.level = level;
  g.primes = primes;
  g.n_max = n_max;
  const auto& lat = t.lattice(level);
  std::vector<std::vector<ElementSet>> chains(lat.num_classes());
  for (std::size_t c = 0; c < lat.num_classes(); ++c) {
    auto& ch = chains[c];
    ch.resize(level + 1);
    ch[level] = lat.rep_set(c);
    for (std::size_t i = level; i > 0; --i) ch[i - 1] = t.steps[i - 1].image(ch[i]);
    std::vector<std::size_t> trace;
    for (std::size_t i = 0; i <= level; ++i) trace.push_back(t.lattice(i).class_index(ch[i]));
    auto add = [&](std::uint64_t p, Height n) {
      g.nodes.push_back({c, p, n, node_id(c, p, n), class_label(c), lat.rep_set(c).size(), trace});
    };
    add(kNoPrime, Height::of(1));
    for (auto p : primes) {
      for (std::uint64_t n = 2; n <= n_max; ++n) add(p, Height::of(n));
      add(p, Height::inf());
    }
  }

  InclusionOracle oracle(t, opts);
  const std::size_t count = g.nodes.size();
  g.exact.assign(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    g.exact[a][a] = 1;
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      const auto& na = g.nodes[a];
      const auto& nb = g.nodes[b];
      auto v = oracle.decide(chains[na.cls], na.p, na.n, chains[nb.cls], nb.p, nb.n, level);
      if (v.exact_false()) continue;
      PrismEdge e;
      e.src = a;
      e.dst = b;
      e.rule = v.rule;
      e.decided_level = v.decided_level;
      if (v.exact_true()) {
        e.tag = PrismEdge::Tag::Exact;
        g.exact[a][b] = 1;
      } else {
        e.tag = PrismEdge::Tag::Possible;
        std::tie(e.lower, e.upper) = v.bounds();
      }
      g.edges.push_back(std::move(e));
    }
  }
  for (const auto& e : g.edges) {
    if (e.tag != PrismEdge::Tag::Exact) continue;
    bool covered = true;
    for (std::size_t c = 0; c < count && covered; ++c)
      if (c != e.src && c != e.dst && g.exact[e.src][c] && g.exact[c][e.dst]) covered = false;
    if (covered) g.hasse.emplace_back(e.src, e.dst);
  }
  return g;
}

/// Every prime contained in some member of S.
inline std::vector<std::size_t> down_closure(const PrismGraph& g, const std::vector<std::size_t>& s) {
  std::vector<char> in(g.nodes.size(), 0);
  for (auto v : s) {
    if (v >= g.nodes.size()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v));
    for (std::size_t q = 0; q < g.nodes.size(); ++q)
      if (g.exact[q][v]) in[q] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < in.size(); ++q)
    if (in[q]) out.push_back(q);
  return out;
}

/// At a finite level every subset is clopen, so S is Thomason closed exactly
/// when it is down-closed under the Exact inclusions.
inline bool is_thomason_closed(const PrismGraph& g, const std::vector<std::size_t>& s) {
  std::vector<char> in(g.nodes.size(), 0);
  for (auto v : s) {
    if (v >= g.nodes.size()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v));
    in[v] = 1;
  }
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (!in[v]) continue;
    for (std::size_t q = 0; q < g.nodes.size(); ++q)
      if (g.exact[q][v] && !in[q]) return false;
  }
  return true;
}

inline bool is_thomason_closed(const PrismGraph& g, const std::vector<std::string>& ids) {
  std::vector<std::size_t> s;
  for (const auto& id : ids) {
    auto i = g.find(id);
    if (!i) throw Error(ErrorCode::UnknownNode, "unknown node '" + id + "'");
    s.push_back(*i);
  }
  return is_thomason_closed(g, s);
}

}  // namespace prott
