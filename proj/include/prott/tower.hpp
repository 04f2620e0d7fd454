#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prott/descriptor.hpp"
#include "prott/element_set.hpp"
#include "prott/error.hpp"
#include "prott/extnat.hpp"
#include "prott/group.hpp"
#include "prott/primes.hpp"
#include "prott/subgroups.hpp"

namespace prott {

inline constexpr std::size_t kDefaultDepth = 4;

/// A profinite group presented by a chain of finite quotients
/// G_0 <- G_1 <- ... <- G_N with G_0 trivial and surjective steps.
/// Subgroup lattices of every level are computed on construction.
struct Tower {
  std::vector<GroupPtr> levels;
  std::vector<GroupHom> steps;  // steps[i] : levels[i+1] -> levels[i]
  std::vector<std::shared_ptr<const SubgroupLattice>> lattices;
  std::optional<ProDescriptor> descriptor;
  std::size_t bound = kDefaultOrderBound;

  // per-factor levels of a realised descriptor: factor_levels[f][i]
  std::vector<std::vector<GroupPtr>> factor_levels;

  std::size_t depth() const { return levels.size() - 1; }
  const SubgroupLattice& lattice(std::size_t i) const { return *lattices.at(i); }
  const FiniteGroup& group(std::size_t i) const { return *levels.at(i); }

  bool is_abelian() const {
    return std::all_of(levels.begin(), levels.end(), [](const GroupPtr& g) { return g->is_abelian(); });
  }

  void check_level(std::size_t i) const {
    if (i > depth())
      throw Error(ErrorCode::LevelOutOfRange,
                  "level " + std::to_string(i) + " beyond depth " + std::to_string(depth()));
  }

  /// Image of a subset of level j at level i <= j.
  ElementSet image(ElementSet s, std::size_t j, std::size_t i) const {
    for (std::size_t k = j; k > i; --k) s = steps[k - 1].image(s);
    return s;
  }
  Element image(Element e, std::size_t j, std::size_t i) const {
    for (std::size_t k = j; k > i; --k) e = steps[k - 1](e);
    return e;
  }

  /// Class index at level i of the image of a level-j class.
  std::size_t class_image(std::size_t cls, std::size_t j, std::size_t i) const {
    return lattice(i).class_index(image(lattice(j).rep_set(cls), j, i));
  }
};

/// Builds a tower from explicit levels and steps.
inline Tower make_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> steps,
                        std::size_t bound = kDefaultOrderBound) {
  if (levels.empty() || levels.front()->order() != 1)
    throw Error(ErrorCode::BadArgument, "level 0 of a tower must be the trivial group");
  if (steps.size() + 1 != levels.size()) throw Error(ErrorCode::BadArgument, "tower needs one step per level");
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (!steps[i].surjective)
      throw Error(ErrorCode::InducedMapNotSurjective, "step " + std::to_string(i + 1) + " -> " +
                                                          std::to_string(i) + " is not surjective");
  for (const auto& g : levels)
    if (g->order() > bound)
      throw Error(ErrorCode::DepthTooLarge,
                  "level of order " + std::to_string(g->order()) + " exceeds bound " + std::to_string(bound));
  Tower t;
  t.levels = std::move(levels);
  t.steps = std::move(steps);
  t.bound = bound;
  for (const auto& g : t.levels) t.lattices.push_back(std::make_shared<const SubgroupLattice>(enumerate_subgroups(g, bound)));
  return t;
}

namespace detail {

inline std::uint64_t factor_level_order(const ProFactor& f, std::size_t i) {
  switch (f.kind) {
    case ProFactor::Kind::Fin: return i == 0 ? 1 : f.finite_order();
    case ProFactor::Kind::Zp: return ipow(f.p, unsigned(i));
    case ProFactor::Kind::FpInf: return ipow(f.p, unsigned(i));
    case ProFactor::Kind::SL: break;
  }
  throw Error(ErrorCode::Unsupported, f.str() + " is a lookup-only atom and cannot be realised");
}

inline FiniteGroup elementary_abelian(std::uint64_t p, std::size_t rank) {
  if (rank == 0) return cyclic_group(1);
  auto c = share(cyclic_group(p));
  return direct_product(std::vector<GroupPtr>(rank, c));
}

/// Level groups and steps of one factor.
inline void realize_factor(const ProFactor& f, std::size_t depth, std::vector<GroupPtr>& levels,
                           std::vector<GroupHom>& steps) {
  if (f.kind == ProFactor::Kind::SL)
    throw Error(ErrorCode::Unsupported, f.str() + " is a lookup-only atom and cannot be realised");
  for (std::size_t i = 0; i <= depth; ++i) {
    switch (f.kind) {
      case ProFactor::Kind::Fin:
        levels.push_back(i == 0 ? share(cyclic_group(1)) : (i == 1 ? share(make_group(f.atom())) : levels[1]));
        break;
      case ProFactor::Kind::Zp: levels.push_back(share(cyclic_group(ipow(f.p, unsigned(i))))); break;
      case ProFactor::Kind::FpInf: levels.push_back(share(elementary_abelian(f.p, i))); break;
      case ProFactor::Kind::SL: break;
    }
  }
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& src = levels[i + 1];
    const auto& dst = levels[i];
    std::vector<Element> m(src->order());
    for (std::size_t a = 0; a < m.size(); ++a) {
      switch (f.kind) {
        case ProFactor::Kind::Fin: m[a] = i == 0 ? 0 : Element(a); break;
        case ProFactor::Kind::Zp: m[a] = Element(a % dst->order()); break;
        // drop the last (least significant) coordinate
        case ProFactor::Kind::FpInf: m[a] = Element(a / f.p); break;
        case ProFactor::Kind::SL: break;
      }
    }
    steps.push_back(GroupHom::make(src, dst, std::move(m)));
  }
}

}  // namespace detail

/// Realises a descriptor to the given depth. Zp(p) has level i = Z/p^i,
/// FpInf(p) has level i = (Z/p)^i, a finite atom appears from level 1 on;
/// products are taken level by level.
inline Tower realize(const ProDescriptor& d, std::size_t depth = kDefaultDepth,
                     std::size_t bound = kDefaultOrderBound) {
  if (d.factors.empty()) throw Error(ErrorCode::BadArgument, "empty descriptor");
  for (std::size_t i = 0; i <= depth; ++i) {
    std::uint64_t order = 1;
    for (const auto& f : d.factors) {
      order *= detail::factor_level_order(f, i);
      if (order > bound)
        throw Error(ErrorCode::DepthTooLarge, "level " + std::to_string(i) + " of " + d.str() +
                                                  " exceeds the order bound " + std::to_string(bound));
    }
  }
  const std::size_t k = d.factors.size();
  std::vector<std::vector<GroupPtr>> flevels(k);
  std::vector<std::vector<GroupHom>> fsteps(k);
  for (std::size_t f = 0; f < k; ++f) detail::realize_factor(d.factors[f], depth, flevels[f], fsteps[f]);

  std::vector<GroupPtr> levels;
  std::vector<GroupHom> steps;
  if (k == 1) {
    levels = flevels[0];
    steps = fsteps[0];
  } else {
    for (std::size_t i = 0; i <= depth; ++i) {
      std::vector<GroupPtr> parts;
      for (std::size_t f = 0; f < k; ++f) parts.push_back(flevels[f][i]);
      levels.push_back(share(direct_product(parts)));
    }
    for (std::size_t i = 0; i < depth; ++i) {
      std::vector<GroupHom> parts;
      for (std::size_t f = 0; f < k; ++f) parts.push_back(fsteps[f][i]);
      steps.push_back(product_hom(levels[i + 1], levels[i], parts));
    }
  }
  Tower t = make_tower(std::move(levels), std::move(steps), bound);
  t.descriptor = d;
  t.factor_levels = std::move(flevels);
  return t;
}

// ---------------------------------------------------------------------------
// Threads

/// Symbolic description of one factor of a product subgroup.
struct FactorToken {
  enum class Kind { Trivial, Full, PPower, ClassRep };
  Kind kind = Kind::Full;
  std::size_t k = 0;  // exponent (PPower) or class index (ClassRep)

  std::string str() const {
    switch (kind) {
      case Kind::Trivial: return "e";
      case Kind::Full: return "full";
      case Kind::PPower: return "p^" + std::to_string(k);
      case Kind::ClassRep: return "#" + std::to_string(k);
    }
    return "?";
  }
  friend bool operator==(const FactorToken& a, const FactorToken& b) { return a.kind == b.kind && a.k == b.k; }
};

/// A closed subgroup, given by its compatible images H_i in every level.
struct SubgroupThread {
  std::vector<ElementSet> chain;
  std::string tag;
  std::vector<FactorToken> tokens;  // empty unless built from a symbolic spec

  std::size_t depth() const { return chain.size() - 1; }
  const ElementSet& at(std::size_t i) const { return chain.at(i); }
};

/// Thread of images of a subgroup of the top level.
inline SubgroupThread thread_from_top(const Tower& t, const ElementSet& top, std::string tag = {}) {
  SubgroupThread h;
  h.chain.resize(t.depth() + 1);
  h.chain[t.depth()] = top;
  for (std::size_t i = t.depth(); i > 0; --i) h.chain[i - 1] = t.steps[i - 1].image(h.chain[i]);
  h.tag = std::move(tag);
  return h;
}

/// Validates an explicit chain against the tower's steps.
inline SubgroupThread thread_from_chain(const Tower& t, std::vector<ElementSet> chain, std::string tag = {}) {
  if (chain.size() != t.levels.size()) throw Error(ErrorCode::IncompatibleChain, "chain length differs from tower");
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].universe() != t.group(i).order() || !is_subgroup(t.group(i), chain[i]))
      throw Error(ErrorCode::IncompatibleChain, "level " + std::to_string(i) + " entry is not a subgroup");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!(t.steps[i].image(chain[i + 1]) == chain[i]))
      throw Error(ErrorCode::IncompatibleChain,
                  "image of level " + std::to_string(i + 1) + " differs from level " + std::to_string(i));
  return SubgroupThread{std::move(chain), std::move(tag), {}};
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline FactorToken parse_token(const std::string& raw, const ProFactor& f) {
  const std::string tok = trim(raw);
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorCode::BadArgument, "subgroup token '" + tok + "' for " + f.str() + ": " + why);
  };
  if (tok == "e") return {FactorToken::Kind::Trivial, 0};
  if (tok == "full") return {FactorToken::Kind::Full, 0};
  if (!tok.empty() && tok[0] == '#') {
    if (f.kind != ProFactor::Kind::Fin) throw bad("class tokens apply to finite factors only");
    try {
      return {FactorToken::Kind::ClassRep, std::stoul(tok.substr(1))};
    } catch (const std::exception&) {
      throw bad("malformed class index");
    }
  }
  auto caret = tok.find('^');
  if (caret != std::string::npos) {
    if (f.kind != ProFactor::Kind::Zp) throw bad("p-power tokens apply to Zp factors only");
    std::string base = tok.substr(0, caret);
    if (base != "p" && base != std::to_string(f.p)) throw bad("base must be p or " + std::to_string(f.p));
    try {
      std::size_t k = std::stoul(tok.substr(caret + 1));
      return k == 0 ? FactorToken{FactorToken::Kind::Full, 0} : FactorToken{FactorToken::Kind::PPower, k};
    } catch (const std::exception&) {
      throw bad("malformed exponent");
    }
  }
  throw bad("expected e, full, p^k or #k");
}

inline ElementSet factor_subgroup(const Tower& t, std::size_t f, std::size_t level, const FactorToken& tok) {
  const auto& g = t.factor_levels[f][level];
  const ProFactor& pf = t.descriptor->factors[f];
  switch (tok.kind) {
    case FactorToken::Kind::Trivial: return g->trivial();
    case FactorToken::Kind::Full: return g->whole();
    case FactorToken::Kind::PPower: {
      if (tok.k >= level) return g->trivial();
      std::uint64_t step = ipow(pf.p, unsigned(tok.k));
      ElementSet s(g->order());
      for (std::uint64_t x = 0; x < g->order(); x += step) s.insert(Element(x));
      return s;
    }
    case FactorToken::Kind::ClassRep: {
      if (level == 0) return g->trivial();
      auto lat = enumerate_subgroups(g, std::max(t.bound, g->order()));
      if (tok.k >= lat.num_classes())
        throw Error(ErrorCode::BadArgument, pf.str() + " has only " + std::to_string(lat.num_classes()) + " classes");
      return lat.rep_set(tok.k);
    }
  }
  return g->trivial();
}

}  // namespace detail

/// Thread for a symbolic subgroup spec of a realised descriptor: "e", "full",
/// or one token per factor joined by 'x' ("p^2 x full", "#1 x e"). Tokens are
/// e, full, p^k (Zp factors) and #k (k-th class of a finite factor).
inline SubgroupThread thread(const Tower& t, const std::string& spec) {
  if (!t.descriptor) throw Error(ErrorCode::BadArgument, "symbolic subgroup specs need a realised descriptor");
  const auto& factors = t.descriptor->factors;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && factors.size() > 1) {
    std::string tok = detail::trim(parts[0]);
    if (tok != "e" && tok != "full")
      throw Error(ErrorCode::BadArgument, "spec '" + spec + "' needs one token per factor");
    parts.assign(factors.size(), tok);
  }
  if (parts.size() != factors.size())
    throw Error(ErrorCode::BadArgument, "spec '" + spec + "' has " + std::to_string(parts.size()) + " tokens for " +
                                            std::to_string(factors.size()) + " factors");
  SubgroupThread h;
  for (std::size_t f = 0; f < factors.size(); ++f) h.tokens.push_back(detail::parse_token(parts[f], factors[f]));
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    const FiniteGroup& g = t.group(i);
    std::vector<ElementSet> fparts;
    for (std::size_t f = 0; f < factors.size(); ++f) fparts.push_back(detail::factor_subgroup(t, f, i, h.tokens[f]));
    if (factors.size() == 1) {
      h.chain.push_back(fparts[0]);
      continue;
    }
    ElementSet s(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::size_t rest = a;
      bool in = true;
      for (std::size_t f = factors.size(); f-- > 0 && in;) {
        std::size_t fo = t.factor_levels[f][i]->order();
        in = fparts[f].contains(Element(rest % fo));
        rest /= fo;
      }
      if (in) s.insert(Element(a));
    }
    h.chain.push_back(std::move(s));
  }
  std::string tag;
  for (std::size_t f = 0; f < h.tokens.size(); ++f) tag += (f ? " x " : "") + h.tokens[f].str();
  // symbolic chains are compatible by construction; checked anyway
  SubgroupThread checked = thread_from_chain(t, std::move(h.chain), std::move(tag));
  checked.tokens = std::move(h.tokens);
  return checked;
}

// ---------------------------------------------------------------------------
// Supernatural orders

/// Formal product of prime powers with exponents in N ∪ {∞}.
struct SupernaturalNumber {
  std::map<std::uint64_t, ExtNat> exponents;
  bool truncated = false;  // exponents are depth-limited lower bounds

  ExtNat exponent(std::uint64_t p) const {
    auto it = exponents.find(p);
    return it == exponents.end() ? ExtNat::of(0) : it->second;
  }

  bool divides(const SupernaturalNumber& other) const {
    for (const auto& [p, e] : exponents)
      if (!(e <= other.exponent(p))) return false;
    return true;
  }

  std::string str() const {
    if (exponents.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : exponents) {
      if (!out.empty()) out += "*";
      out += std::to_string(p) + "^" + e.str();
    }
    return out;
  }
};

namespace detail {
inline void lcm_into(SupernaturalNumber& s, std::uint64_t order) {
  for (auto p : prime_divisors(order)) {
    auto v = ExtNat::of(std::uint64_t(valuation(order, p)));
    auto& e = s.exponents[p];
    e = max(e, v);
  }
}
}  // namespace detail

/// lcm of the level orders; primes of Zp and FpInf factors get exponent ∞.
inline SupernaturalNumber order_supernatural(const Tower& t) {
  SupernaturalNumber s;
  for (const auto& g : t.levels) detail::lcm_into(s, g->order());
  if (!t.descriptor) {
    s.truncated = true;
    return s;
  }
  for (const auto& f : t.descriptor->factors)
    if (f.kind == ProFactor::Kind::Zp || f.kind == ProFactor::Kind::FpInf) s.exponents[f.p] = ExtNat::inf();
  return s;
}

/// Order of a closed subgroup; ∞ exponents come from its symbolic tokens.
inline SupernaturalNumber order_supernatural(const Tower& t, const SubgroupThread& h) {
  SupernaturalNumber s;
  for (const auto& hi : h.chain) detail::lcm_into(s, hi.size());
  if (!t.descriptor || h.tokens.empty()) {
    s.truncated = true;
    return s;
  }
  const auto& fs = t.descriptor->factors;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto kind = h.tokens[f].kind;
    if ((fs[f].kind == ProFactor::Kind::Zp && kind != FactorToken::Kind::Trivial) ||
        (fs[f].kind == ProFactor::Kind::FpInf && kind == FactorToken::Kind::Full))
      s.exponents[fs[f].p] = ExtNat::inf();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Subgroup spaces

/// Conjugacy-class sets Sub(G_i)/G_i and the induced maps between them.
struct SubSystem {
  std::vector<std::size_t> sizes;              // number of classes per level
  std::vector<std::vector<std::size_t>> maps;  // maps[i] : classes(i+1) -> classes(i)
  std::vector<std::vector<std::size_t>> orders;  // subgroup order of each class
};

inline SubSystem sub_system(const Tower& t) {
  SubSystem s;
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    const auto& lat = t.lattice(i);
    s.sizes.push_back(lat.num_classes());
    std::vector<std::size_t> ords;
    for (std::size_t c = 0; c < lat.num_classes(); ++c) ords.push_back(lat.rep_set(c).size());
    s.orders.push_back(std::move(ords));
  }
  for (std::size_t i = 0; i < t.depth(); ++i) {
    std::vector<std::size_t> m(s.sizes[i + 1]);
    std::vector<bool> hit(s.sizes[i], false);
    for (std::size_t c = 0; c < m.size(); ++c) {
      m[c] = t.class_image(c, i + 1, i);
      hit[m[c]] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      throw Error(ErrorCode::InducedMapNotSurjective, "class map " + std::to_string(i + 1) + " -> " +
                                                          std::to_string(i) + " is not surjective");
    s.maps.push_back(std::move(m));
  }
  return s;
}

/// Top-level classes whose image at level i is the image of h: the
/// truncated basic neighbourhood of h determined by level i.
inline std::vector<std::size_t> neighborhood_fiber(const Tower& t, const SubgroupThread& h, std::size_t i) {
  t.check_level(i);
  const std::size_t n = t.depth();
  const std::size_t target = t.lattice(i).class_index(h.at(i));
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.lattice(n).num_classes(); ++c)
    if (t.class_image(c, n, i) == target) out.push_back(c);
  return out;
}

/// The chain O^p(G_i); compatibility of consecutive levels is checked.
inline SubgroupThread o_p_thread(const Tower& t, std::uint64_t p) {
  std::vector<ElementSet> chain;
  for (std::size_t i = 0; i <= t.depth(); ++i) chain.push_back(o_p_set(t.lattice(i), p));
  return thread_from_chain(t, std::move(chain), "O^" + std::to_string(p));
}

inline bool is_pro_p_subnormal(const Tower& t, const SubgroupThread& h, std::uint64_t p) {
  for (std::size_t i = 0; i <= t.depth(); ++i)
    if (!o_p_set(t.lattice(i), p).is_subset_of(h.at(i))) return false;
  return true;
}

struct RankResult {
  ExtNat value;
  std::vector<int> per_level;
  std::size_t stable_levels = 0;  // trailing levels attaining the maximum
  bool truncated = false;         // no descriptor certificate was available
};

namespace detail {

/// True when the descriptor certifies rank_p(H/K) = ∞: an FpInf(p) factor
/// whose tokens differ between h and k.
inline bool certified_infinite_rank(const Tower& t, const SubgroupThread& h, const SubgroupThread& k,
                                    std::uint64_t p) {
  if (!t.descriptor || h.tokens.empty() || k.tokens.empty()) return false;
  const auto& fs = t.descriptor->factors;
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (fs[f].kind == ProFactor::Kind::FpInf && fs[f].p == p && !(h.tokens[f] == k.tokens[f])) return true;
  return false;
}

inline int level_quotient_rank(const Tower& t, std::size_t i, const ElementSet& hs, const ElementSet& ks,
                               std::uint64_t p) {
  const auto& g = t.levels[i];
  if (!is_p_power(hs.size() / ks.size(), p))
    throw Error(ErrorCode::NotPGroupQuotient, "level " + std::to_string(i) + " quotient is not a p-group");
  if (!is_normal_in(*g, ks, hs)) throw Error(ErrorCode::NotNormal, "level " + std::to_string(i) + ": K not normal in H");
  if (hs.size() == ks.size()) return 0;
  auto incl = subgroup_as_group(g, hs);
  ElementSet kin(incl.source->order());
  auto hm = hs.members();
  for (std::size_t a = 0; a < hm.size(); ++a)
    if (ks.contains(hm[a])) kin.insert(Element(a));
  auto q = quotient(incl.source, kin);
  return p_rank(q.group, p);
}

}  // namespace detail

/// sup_i rank_p(H_i/K_i); ∞ when the descriptor certifies unbounded growth.
inline RankResult pro_p_rank(const Tower& t, const SubgroupThread& h, const SubgroupThread& k, std::uint64_t p) {
  RankResult r;
  for (std::size_t i = 0; i <= t.depth(); ++i)
    if (!k.at(i).is_subset_of(h.at(i))) throw Error(ErrorCode::NotNested, "K is not contained in H at level " + std::to_string(i));
  int best = 0;
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    r.per_level.push_back(detail::level_quotient_rank(t, i, h.at(i), k.at(i), p));
    best = std::max(best, r.per_level.back());
  }
  for (std::size_t i = r.per_level.size(); i-- > 0 && r.per_level[i] == best;) ++r.stable_levels;
  if (detail::certified_infinite_rank(t, h, k, p)) {
    r.value = ExtNat::inf();
  } else {
    r.value = ExtNat::of(std::uint64_t(best));
    r.truncated = !t.descriptor || h.tokens.empty() || k.tokens.empty();
  }
  return r;
}

/// Levels N_{G_i}(H_i)/H_i with the induced maps.
inline Tower weyl_tower(const Tower& t, const SubgroupThread& h) {
  std::vector<GroupPtr> levels;
  std::vector<GroupHom> to_weyl;    // N_i (as group) -> W_i
  std::vector<GroupHom> inclusion;  // N_i (as group) -> G_i
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    const auto& g = t.levels[i];
    auto incl = subgroup_as_group(g, normalizer_set(*g, h.at(i)));
    ElementSet hin(incl.source->order());
    for (std::size_t a = 0; a < incl.map.size(); ++a)
      if (h.at(i).contains(incl.map[a])) hin.insert(Element(a));
    auto q = quotient(incl.source, hin);
    levels.push_back(q.group);
    to_weyl.push_back(q.projection);
    inclusion.push_back(incl);
  }
  std::vector<GroupHom> steps;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    // position of each G_i element inside N_i
    std::vector<std::int64_t> pos(t.group(i).order(), -1);
    for (std::size_t a = 0; a < inclusion[i].map.size(); ++a) pos[inclusion[i].map[a]] = std::int64_t(a);
    std::vector<Element> m(levels[i + 1]->order(), 0);
    const auto& src = inclusion[i + 1];
    for (std::size_t a = 0; a < src.map.size(); ++a) {
      Element down = t.steps[i](src.map[a]);
      if (pos[down] < 0) throw Error(ErrorCode::BadArgument, "normalizer does not map into normalizer");
      m[to_weyl[i + 1](Element(a))] = to_weyl[i](Element(pos[down]));
    }
    auto hom = GroupHom::make(levels[i + 1], levels[i], std::move(m));
    if (!hom.surjective)
      throw Error(ErrorCode::InducedMapNotSurjective,
                  "Weyl map " + std::to_string(i + 1) + " -> " + std::to_string(i) + " is not surjective");
    steps.push_back(std::move(hom));
  }
  return make_tower(std::move(levels), std::move(steps), t.bound);
}

}  // namespace prott
