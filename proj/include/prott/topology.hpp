#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prott/descriptor.hpp"
#include "prott/error.hpp"
#include "prott/extnat.hpp"
#include "prott/tower.hpp"

namespace prott {

/// Finite sets X_0 <- X_1 <- ... <- X_N with surjective maps; points of X_i
/// are 0..sizes[i]-1.
struct FiniteInvSystem {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> maps;  // maps[i] : X_{i+1} -> X_i

  std::size_t depth() const { return sizes.size() - 1; }

  std::size_t image(std::size_t x, std::size_t j, std::size_t i) const {
    for (std::size_t k = j; k > i; --k) x = maps[k - 1][x];
    return x;
  }
};

inline FiniteInvSystem make_inv_system(std::vector<std::size_t> sizes, std::vector<std::vector<std::size_t>> maps) {
  if (sizes.empty()) throw Error(ErrorCode::BadArgument, "inverse system needs a level");
  if (maps.size() + 1 != sizes.size()) throw Error(ErrorCode::BadArgument, "inverse system needs one map per level");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].size() != sizes[i + 1]) throw Error(ErrorCode::BadArgument, "map size mismatch at level " + std::to_string(i + 1));
    std::vector<char> hit(sizes[i], 0);
    for (auto v : maps[i]) {
      if (v >= sizes[i]) throw Error(ErrorCode::BadArgument, "map value out of range at level " + std::to_string(i + 1));
      hit[v] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw Error(ErrorCode::InducedMapNotSurjective, "map " + std::to_string(i + 1) + " -> " + std::to_string(i) + " is not surjective");
  }
  return FiniteInvSystem{std::move(sizes), std::move(maps)};
}

inline FiniteInvSystem inv_system_of_sub(const Tower& t) {
  auto s = sub_system(t);
  return make_inv_system(std::move(s.sizes), std::move(s.maps));
}

/// Descriptor knowledge that licenses space-level conclusions: for
/// Fin(A) x prod Zp(p_i) x prod FpInf(q_j), A abelian and all primes
/// distinct and prime to |A|, Sub(G) is a product of the factor spaces and
/// the level data are regular enough for the derivative recursion below.
/// Any finite group qualifies too: its tower is constant past level 1.
struct CBCertificate {
  std::size_t zp_factors = 0;
  std::size_t fp_inf_factors = 0;
  std::string family;
};

inline std::optional<CBCertificate> certify(const ProDescriptor& d) {
  CBCertificate c;
  if (d.all_finite()) {
    c.family = "finite";  // constant tower, finite discrete space
    return c;
  }
  std::uint64_t fin_order = 1;
  std::set<std::uint64_t> primes;
  for (const auto& f : d.factors) {
    switch (f.kind) {
      case ProFactor::Kind::Fin:
        if (!f.finite_abelian()) return std::nullopt;
        fin_order *= f.finite_order();
        break;
      case ProFactor::Kind::Zp:
      case ProFactor::Kind::FpInf:
        if (!primes.insert(f.p).second) return std::nullopt;
        (f.kind == ProFactor::Kind::Zp ? c.zp_factors : c.fp_inf_factors)++;
        break;
      case ProFactor::Kind::SL: return std::nullopt;
    }
  }
  for (auto p : primes)
    if (fin_order % p == 0) return std::nullopt;
  c.family = "finite abelian x Zp x FpInf, coprime";
  return c;
}

struct PointStatus {
  enum class Kind { IsolatedAtHorizon, Fattening, StableCertified };
  std::size_t point = 0;  // element of X_N
  Kind status = Kind::Fattening;
  std::vector<std::size_t> fiber_history;  // fiber_history[i] = #{y in X_N : y_i = x_i}
  std::optional<std::size_t> isolation_level;  // first i < N with a singleton fiber
};

inline const char* status_name(PointStatus::Kind k) {
  switch (k) {
    case PointStatus::Kind::IsolatedAtHorizon: return "isolated-at-horizon";
    case PointStatus::Kind::Fattening: return "fattening";
    case PointStatus::Kind::StableCertified: return "stable-certified";
  }
  return "?";
}

struct CBReport {
  enum class RankKind { Finite, Infinite, TruncationUnknown };
  struct Ranked {
    std::size_t rank;
    std::size_t level;
    std::size_t point;
  };

  std::size_t horizon = 0;
  bool certified = false;
  std::vector<PointStatus> points;
  // derived[k][j] is the k-th derivative seen at level j, for j <= N - k
  std::vector<std::vector<std::vector<std::size_t>>> derived;
  RankKind rank_kind = RankKind::TruncationUnknown;
  std::size_t rank = 0;
  std::vector<Ranked> ranked;  // points of each CB rank, at the deepest level that decides them
};

inline const char* rank_kind_name(CBReport::RankKind k) {
  switch (k) {
    case CBReport::RankKind::Finite: return "finite";
    case CBReport::RankKind::Infinite: return "infinite";
    case CBReport::RankKind::TruncationUnknown: return "truncation-unknown";
  }
  return "?";
}

/// Cantor-Bendixson analysis at horizon N.
///
/// Point statuses only look at fibers: x in X_N is isolated at the horizon
/// when its image at some level i < N already has x as its only lift.
///
/// With a certificate, the derivative is approximated by lookahead: a point
/// of the deepest usable level survives one more derivative when it has at
/// least two surviving lifts one level further down, and shallower levels
/// take images. Each derivative costs one level of depth.
inline CBReport cb_analyze(const FiniteInvSystem& s, const std::optional<CBCertificate>& cert = std::nullopt) {
  const std::size_t n = s.depth();
  if (n < 2) throw Error(ErrorCode::HorizonTooShallow, "horizon " + std::to_string(n) + " is below 2");
  CBReport r;
  r.horizon = n;
  r.certified = cert.has_value();

  for (std::size_t x = 0; x < s.sizes[n]; ++x) {
    PointStatus ps;
    ps.point = x;
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t xi = s.image(x, n, i);
      std::size_t count = 0;
      for (std::size_t y = 0; y < s.sizes[n]; ++y)
        if (s.image(y, n, i) == xi) ++count;
      ps.fiber_history.push_back(count);
      if (count == 1 && i < n && !ps.isolation_level) ps.isolation_level = i;
    }
    if (ps.isolation_level)
      ps.status = cert ? PointStatus::Kind::StableCertified : PointStatus::Kind::IsolatedAtHorizon;
    r.points.push_back(std::move(ps));
  }

  if (!cert) {
    r.rank_kind = CBReport::RankKind::TruncationUnknown;
    return r;
  }

  std::vector<std::vector<std::size_t>> cur;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<std::size_t> all(s.sizes[j]);
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
    cur.push_back(std::move(all));
  }
  r.derived.push_back(cur);
  for (std::size_t k = 0; k < n; ++k) {
    // cur holds D_k(j) for j <= n - k; D_{k+1} is decided at level n-k-1
    // and pushed down by images
    const std::size_t top = n - k - 1;
    std::vector<std::vector<std::size_t>> next(top + 1);
    std::vector<std::size_t> lifts(s.sizes[top], 0);
    for (auto y : cur[top + 1]) ++lifts[s.maps[top][y]];
    for (auto x : cur[top]) {
      if (lifts[x] >= 2)
        next[top].push_back(x);
      else
        r.ranked.push_back({k, top, x});  // rank exactly k
    }
    for (std::size_t j = top; j-- > 0;) {
      std::set<std::size_t> img;
      for (auto y : next[j + 1]) img.insert(s.maps[j][y]);
      next[j].assign(img.begin(), img.end());
    }
    bool stable = true;
    for (std::size_t j = 0; j <= top; ++j) stable = stable && next[j] == cur[j];
    r.derived.push_back(next);
    if (next[0].empty()) {
      r.rank_kind = CBReport::RankKind::Finite;
      r.rank = k;
      return r;
    }
    if (stable) {
      // the derivative no longer removes anything: a perfect kernel remains
      r.rank_kind = CBReport::RankKind::Infinite;
      return r;
    }
    cur = std::move(next);
  }
  r.rank_kind = CBReport::RankKind::TruncationUnknown;
  return r;
}

/// Analysis of the subgroup space of a tower, certified from its descriptor
/// when possible.
inline CBReport cb_analyze(const Tower& t) {
  std::optional<CBCertificate> cert;
  if (t.descriptor) cert = certify(*t.descriptor);
  return cb_analyze(inv_system_of_sub(t), cert);
}

struct OpenCheck {
  bool isolated = false;
  bool certified = false;
  bool index_stable = false;
  bool holds = true;
  std::optional<std::size_t> isolation_level;
  std::vector<std::uint64_t> indices;  // [G_i : H_i]
};

/// Instance check of "isolated in Sub(G)/G implies open": a certified
/// isolated thread must have constant index from its isolation level on.
inline OpenCheck isolated_implies_open_check(const Tower& t, const SubgroupThread& h, const CBReport& report) {
  OpenCheck c;
  const std::size_t n = t.depth();
  for (std::size_t i = 0; i <= n; ++i) c.indices.push_back(t.group(i).order() / h.at(i).size());
  const std::size_t x = t.lattice(n).class_index(h.at(n));
  const auto& ps = report.points.at(x);
  c.isolated = ps.status != PointStatus::Kind::Fattening;
  c.certified = ps.status == PointStatus::Kind::StableCertified;
  c.isolation_level = ps.isolation_level;
  if (!c.certified) return c;  // nothing to check
  const std::size_t from = *ps.isolation_level;
  c.index_stable = std::all_of(c.indices.begin() + std::ptrdiff_t(from), c.indices.end(),
                               [&](std::uint64_t v) { return v == c.indices[from]; });
  c.holds = c.index_stable;
  return c;
}

inline OpenCheck isolated_implies_open_check(const Tower& t, const SubgroupThread& h) {
  return isolated_implies_open_check(t, h, cb_analyze(t));
}

// ---------------------------------------------------------------------------
// Verdicts

enum class Tri { Yes, No, Unknown };

inline const char* tri_name(Tri v) {
  switch (v) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

/// Countability of Sub(G)/G and the properties equivalent to it for rational
/// G-spectra. Only `countable` is decided; the rest are filled from it.
struct Verdict {
  std::string descriptor;
  Tri countable = Tri::Unknown;
  Tri scattered = Tri::Unknown;
  Tri stratified = Tri::Unknown;
  Tri costratified = Tri::Unknown;
  Tri lgp = Tri::Unknown;
  Tri semi_artinian = Tri::Unknown;
  Tri telescope = Tri::Yes;
  std::vector<std::string> provenance;
};

inline Verdict countability_verdict(const ProDescriptor& d) {
  Verdict v;
  v.descriptor = d.str();
  auto decide = [&](Tri c, std::string why) {
    v.countable = c;
    v.provenance.push_back(std::move(why));
  };

  std::map<std::uint64_t, int> zp;
  bool fp_inf = false, abelian = true, finite = true;
  std::size_t sl = 0;
  for (const auto& f : d.factors) {
    switch (f.kind) {
      case ProFactor::Kind::Fin: abelian = abelian && f.finite_abelian(); break;
      case ProFactor::Kind::Zp: ++zp[f.p], finite = false; break;
      case ProFactor::Kind::FpInf: fp_inf = true, finite = false; break;
      case ProFactor::Kind::SL: ++sl, abelian = false, finite = false; break;
    }
  }
  const bool repeated = std::any_of(zp.begin(), zp.end(), [](const auto& e) { return e.second > 1; });

  if (fp_inf) {
    decide(Tri::No, "FpInf(p) is a direct factor; its subgroups form a Cantor set and, lying in a direct abelian "
                    "factor, are pairwise non-conjugate");
  } else if (repeated) {
    decide(Tri::No, "Zp(p) x Zp(p) is a direct factor; it has uncountably many closed subgroups, pairwise "
                    "non-conjugate in G");
  } else if (finite) {
    decide(Tri::Yes, "finite group: Sub(G)/G is a finite discrete space");
  } else if (abelian) {
    decide(Tri::Yes, "abelian: finite group times Zp(p_i) for pairwise distinct p_i has countable subgroup space");
  } else if (sl == 1 && d.factors.size() == 1) {
    const auto& f = d.factors.front();
    decide(f.n <= 2 ? Tri::Yes : Tri::No,
           "reference fact, not computed: Sub(SL_N(Zp))/conjugacy is countable exactly for N = 1, 2");
  } else {
    decide(Tri::Unknown, "outside the decided families");
  }
  v.scattered = v.stratified = v.costratified = v.lgp = v.semi_artinian = v.countable;
  v.provenance.push_back("a profinite space is countable iff it is scattered; stratification, costratification, "
                         "the local-to-global principle and semi-Artinian rational Burnside ring all reduce to it");
  v.provenance.push_back("the telescope conjecture holds for every profinite G rationally");
  return v;
}

/// CB rank of Sub(G)/G from the descriptor alone.
struct CBRankValue {
  enum class Kind { Finite, Infinite, Unsupported };
  Kind kind = Kind::Unsupported;
  std::size_t value = 0;
};

inline CBRankValue cb_rank_descriptor(const ProDescriptor& d) {
  CBRankValue r;
  if (d.all_finite()) {
    r.kind = CBRankValue::Kind::Finite;
    return r;
  }
  auto c = certify(d);
  if (!c) return r;
  if (c->fp_inf_factors > 0) {
    r.kind = CBRankValue::Kind::Infinite;  // not scattered
    return r;
  }
  // finite discrete space times (N*)^r
  r.kind = CBRankValue::Kind::Finite;
  r.value = c->zp_factors;
  return r;
}

}  // namespace prott
