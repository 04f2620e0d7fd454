#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prott/error.hpp"
#include "prott/primes.hpp"
#include "prott/spectrum.hpp"
#include "prott/subgroups.hpp"
#include "prott/tower.hpp"

namespace prott {

/// O^p(H) for a subgroup H of g, as a subset of g.
inline ElementSet o_p_of_subgroup(const GroupPtr& g, const ElementSet& h, std::uint64_t p,
                                  std::size_t bound = kDefaultOrderBound) {
  auto incl = subgroup_as_group(g, h);
  auto lat = enumerate_subgroups(incl.source, std::max(bound, incl.source->order()));
  return incl.image(o_p_set(lat, p));
}

/// A point p(H, c) of Spec A(G): c = 0 for characteristic zero, otherwise a
/// prime, in which case cls is the class of O^c(H).
struct BurnsidePrime {
  std::size_t cls = 0;
  std::uint64_t p = 0;
  std::string id;

  friend bool operator==(const BurnsidePrime& a, const BurnsidePrime& b) { return a.cls == b.cls && a.p == b.p; }
};

inline std::string burnside_id(std::size_t cls, std::uint64_t p) {
  return "p(" + class_label(cls) + "," + std::to_string(p) + ")";
}

struct BurnsideSpectrum {
  std::vector<std::uint64_t> primes;
  std::vector<BurnsidePrime> points;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // proper inclusions src ⊂ dst
  std::vector<std::vector<std::size_t>> o_p_class;          // o_p_class[j][c]: class of O^{primes[j]}(H_c)

  std::optional<std::size_t> find_point(std::size_t cls, std::uint64_t p) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].cls == cls && points[i].p == p) return i;
    return std::nullopt;
  }

  /// The point p(H, c) for the class of H, merging by O^c when c > 0.
  std::size_t point_of(std::size_t cls, std::uint64_t p) const {
    if (p == 0) return *find_point(cls, 0);
    auto it = std::find(primes.begin(), primes.end(), p);
    if (it == primes.end()) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not among the characteristics");
    return *find_point(o_p_class[std::size_t(it - primes.begin())][cls], p);
  }

  bool leq(std::size_t a, std::size_t b) const {
    if (a == b) return true;
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
  }
};

/// Spec of the Burnside ring relative to a finite set of characteristics:
/// one point p(H,0) per class and one p(H,p) per class of O^p(H), with
/// p(H,0) ⊂ p(H,p) the only proper inclusions.
inline BurnsideSpectrum burnside_spec(const SubgroupLattice& lat, std::vector<std::uint64_t> primes,
                                      std::size_t bound = kDefaultOrderBound) {
  for (auto p : primes)
    if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  BurnsideSpectrum s;
  s.primes = primes;
  const std::size_t nc = lat.num_classes();
  for (std::size_t c = 0; c < nc; ++c) s.points.push_back({c, 0, burnside_id(c, 0)});
  for (auto p : primes) {
    std::vector<std::size_t> op(nc);
    for (std::size_t c = 0; c < nc; ++c) op[c] = lat.class_index(o_p_of_subgroup(lat.group, lat.rep_set(c), p, bound));
    std::vector<std::size_t> seen = op;
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto c : seen) s.points.push_back({c, p, burnside_id(c, p)});
    s.o_p_class.push_back(std::move(op));
  }
  for (std::size_t j = 0; j < primes.size(); ++j)
    for (std::size_t c = 0; c < nc; ++c) s.edges.emplace_back(c, *s.find_point(s.o_p_class[j][c], primes[j]));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

inline BurnsideSpectrum burnside_spec(const GroupPtr& g, std::vector<std::uint64_t> primes,
                                      std::size_t bound = kDefaultOrderBound) {
  return burnside_spec(enumerate_subgroups(g, bound), std::move(primes), bound);
}

inline BurnsideSpectrum burnside_spec(const Tower& t, std::size_t level, std::vector<std::uint64_t> primes) {
  t.check_level(level);
  return burnside_spec(t.lattice(level), std::move(primes), t.bound);
}

/// Comparison map to Spec A(G): P(H,•,1) goes to p(H,0) and P(H,p,m) with
/// m > 1 to p(H,p). It reverses inclusions.
inline std::size_t rho(const BurnsideSpectrum& s, std::size_t cls, std::uint64_t p, Height m) {
  if (!m.infinite && m.value == 0) throw Error(ErrorCode::BadHeight, "heights start at 1");
  if (!m.infinite && m.value == 1) return s.point_of(cls, 0);
  return s.point_of(cls, p);
}

inline std::size_t rho(const BurnsideSpectrum& s, const TTPrime& P) { return rho(s, P.cls, P.p, P.n); }
inline std::size_t rho(const BurnsideSpectrum& s, const PrismNode& v) { return rho(s, v.cls, v.p, v.n); }

/// The level-i points of Sub(G)/G, which at a finite level is the spectrum
/// of the rational Burnside ring; every subset is clopen.
struct RationalSpectrum {
  std::size_t level = 0;
  std::vector<std::size_t> orders;               // subgroup order of each class
  std::optional<std::vector<std::size_t>> map_from_above;  // classes(level+1) -> classes(level)
  std::string clopen_count;                      // 2^size in decimal

  std::size_t size() const { return orders.size(); }
};

namespace detail {
inline std::string pow2_decimal(std::size_t e) {
  std::vector<int> digits{1};  // little-endian
  for (std::size_t i = 0; i < e; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      int v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry) digits.push_back(carry);
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += char('0' + *it);
  return out;
}
}  // namespace detail

inline RationalSpectrum rational_spectrum(const Tower& t, std::size_t level) {
  t.check_level(level);
  RationalSpectrum r;
  r.level = level;
  const auto& lat = t.lattice(level);
  for (std::size_t c = 0; c < lat.num_classes(); ++c) r.orders.push_back(lat.rep_set(c).size());
  if (level < t.depth()) {
    std::vector<std::size_t> m;
    for (std::size_t c = 0; c < t.lattice(level + 1).num_classes(); ++c) m.push_back(t.class_image(c, level + 1, level));
    r.map_from_above = std::move(m);
  }
  r.clopen_count = detail::pow2_decimal(r.size());
  return r;
}

}  // namespace prott
