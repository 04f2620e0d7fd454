#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prott/burnside.hpp"
#include "prott/spectrum.hpp"

using namespace prott;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadArgument;
}

Tower tower(const std::string& d, std::size_t depth = kDefaultDepth, std::size_t bound = kDefaultOrderBound) {
  return realize(parse_descriptor(d), depth, bound);
}

Height h(std::uint64_t n) { return Height::of(n); }
const Height kInf = Height::inf();

std::vector<Height> heights() { return {h(1), h(2), h(3), h(4), h(5), kInf}; }

struct PrismCase {
  std::string descriptor;
  std::size_t depth;
  std::vector<std::uint64_t> primes;
};

std::vector<PrismCase> prism_cases() {
  return {{"Z/1", 2, {2, 3}}, {"Zp(2)", 4, {2}},     {"Zp(3)", 3, {2, 3}}, {"Z/6", 1, {2, 3}},
          {"S3", 1, {2, 3}},  {"Q8", 1, {2}},        {"Z/2 x Z/2", 1, {2}}, {"Zp(2) x Z/3", 3, {2, 3}},
          {"S4", 1, {2, 3}},  {"FpInf(2)", 2, {2}}};
}

}  // namespace

TEST(TTPrime, Canonicalize) {
  auto t = tower("S3", 1);
  const auto& lat = t.lattice(1);
  auto a = prime_canonicalize(t, 1, lat.subgroups[1], 5, h(1));
  EXPECT_EQ(a.p, kNoPrime);
  auto b = prime_canonicalize(t, 1, lat.subgroups[2], 2, kInf);
  EXPECT_EQ(b.p, 2u);
  EXPECT_TRUE(b.n.infinite);
  // conjugate order-2 subgroups land on the same class
  auto c = prime_canonicalize(t, 1, lat.subgroups[3], 2, h(3));
  auto d = prime_canonicalize(t, 1, lat.subgroups[1], 2, h(3));
  EXPECT_EQ(c, d);
  EXPECT_EQ(code_of([&] { prime_canonicalize(t, 1, lat.subgroups[0], 2, h(0)); }), ErrorCode::BadHeight);
  EXPECT_EQ(code_of([&] { prime_canonicalize(t, 1, lat.subgroups[0], 4, h(2)); }), ErrorCode::BadPrime);
}

TEST(Inclusion, AbelianZp) {
  auto t = tower("Zp(3)");
  auto e = thread(t, "e"), full = thread(t, "full");
  for (auto n : heights())
    for (auto m : heights()) {
      auto v = includes_abelian(t, {e, 3, n}, {full, 3, m});
      ASSERT_EQ(v.kind, InclusionVerdict::Kind::Exact);
      EXPECT_EQ(v.value, m + h(1) <= n) << n.str() << " " << m.str();
      auto same = includes_abelian(t, {full, 3, n}, {full, 3, m});
      EXPECT_EQ(same.value, m <= n);
      // the reverse direction never holds
      EXPECT_FALSE(includes_abelian(t, {full, 3, n}, {e, 3, m}).value);
    }
}

TEST(Inclusion, AbelianPrimes) {
  auto t = tower("Zp(2) x Z/3");
  auto e = thread(t, "e x e"), c3 = thread(t, "e x full"), full = thread(t, "full");
  // target at height one accepts any source prime
  EXPECT_TRUE(includes_abelian(t, {full, 3, h(2)}, {full, 2, h(1)}).value);
  EXPECT_FALSE(includes_abelian(t, {full, 3, h(2)}, {full, 2, h(2)}).value);
  // C3 -> full has 2-group quotient of rank 1; e -> C3 has 3-group quotient
  EXPECT_TRUE(includes_abelian(t, {c3, 2, h(3)}, {full, 2, h(2)}).value);
  EXPECT_FALSE(includes_abelian(t, {c3, 2, h(2)}, {full, 2, h(2)}).value);
  EXPECT_TRUE(includes_abelian(t, {e, 3, h(2)}, {c3, 3, h(1)}).value);
  EXPECT_FALSE(includes_abelian(t, {e, 2, kInf}, {c3, 2, h(2)}).value);
  EXPECT_EQ(code_of([] {
              auto s = tower("S3", 1);
              includes_abelian(s, {thread(s, "e"), 2, h(2)}, {thread(s, "full"), 2, h(1)});
            }),
            ErrorCode::NotAbelian);
}

TEST(Inclusion, AbelianRankTwo) {
  auto t = tower("Zp(2) x Zp(2)", 3);
  auto e = thread(t, "e"), full = thread(t, "full");
  for (auto n : heights())
    for (auto m : heights()) EXPECT_EQ(includes_abelian(t, {e, 2, n}, {full, 2, m}).value, m + h(2) <= n);
}

TEST(Inclusion, InfiniteRank) {
  auto t = tower("FpInf(2)", 3);
  auto e = thread(t, "e"), full = thread(t, "full");
  EXPECT_FALSE(includes_abelian(t, {e, 2, h(5)}, {full, 2, h(1)}).value);
  EXPECT_TRUE(includes_abelian(t, {e, 2, kInf}, {full, 2, h(1)}).value);
  EXPECT_TRUE(includes_abelian(t, {e, 2, kInf}, {full, 2, h(4)}).value);
}

TEST(Inclusion, Q8Sandwich) {
  auto t = tower("Q8");
  auto e = thread(t, "e"), full = thread(t, "full");
  for (std::uint64_t m : {1, 2, 3}) {
    auto gap3 = includes_levelwise(t, {e, 2, h(m + 3)}, {full, 2, h(m)});
    EXPECT_TRUE(gap3.exact_true());
    auto gap2 = includes_levelwise(t, {e, 2, h(m + 2)}, {full, 2, h(m)});
    ASSERT_EQ(gap2.kind, InclusionVerdict::Kind::Undetermined);
    EXPECT_EQ(gap2.bounds(), std::make_pair(ExtNat::of(2), ExtNat::of(3)));
    auto gap1 = includes_levelwise(t, {e, 2, h(m + 1)}, {full, 2, h(m)});
    EXPECT_TRUE(gap1.exact_false());
  }
}

TEST(Inclusion, NotSubnormalIsFalse) {
  auto t = tower("S3", 1);
  auto e = thread(t, "e"), full = thread(t, "full");
  // O^2(S3) = A3 is not inside e
  auto v = includes_levelwise(t, {e, 2, kInf}, {full, 2, h(2)});
  EXPECT_TRUE(v.exact_false());
  EXPECT_EQ(v.rule, "not-subconjugate-p-subnormal");
  // A3 is 2-subnormal with quotient C2
  auto a3 = thread_from_chain(t, o_p_thread(t, 2).chain);
  EXPECT_TRUE(includes_levelwise(t, {a3, 2, h(3)}, {full, 2, h(2)}).exact_true());
  EXPECT_TRUE(includes_levelwise(t, {a3, 2, h(2)}, {full, 2, h(2)}).exact_false());
}

TEST(Blueshift, Examples) {
  auto z = tower("Zp(5)", 2);
  auto r = blueshift(z, thread(z, "full"), thread(z, "e"), 5);
  EXPECT_EQ(r.kind, BlueshiftResult::Kind::Exact);
  EXPECT_EQ(r.value(), ExtNat::of(1));
  auto same = blueshift(z, thread(z, "p^1"), thread(z, "p^1"), 5);
  EXPECT_EQ(same.value(), ExtNat::of(0));

  auto q = tower("Q8");
  auto b = blueshift(q, thread(q, "full"), thread(q, "e"), 2);
  EXPECT_EQ(b.kind, BlueshiftResult::Kind::Bounds);
  EXPECT_EQ(b.provenance, BlueshiftResult::Provenance::LowerUpperBounds);
  EXPECT_EQ(b.lower, ExtNat::of(2));
  EXPECT_EQ(b.upper, ExtNat::of(3));

  auto f = tower("FpInf(3)", 2);
  EXPECT_EQ(blueshift(f, thread(f, "full"), thread(f, "e"), 3).kind, BlueshiftResult::Kind::Infinite);

  auto s = tower("S3", 1);
  EXPECT_EQ(code_of([&] { blueshift(s, thread(s, "full"), thread(s, "e"), 2); }), ErrorCode::NotPGroupQuotient);
}

// On abelian groups the Frattini lower bound is the rank, as is the chain
// bound with cyclic steps; index-p chains can only be longer.
TEST(Blueshift, GeneralPathOnAbelianGroups) {
  for (const auto& [name, g] : oracle::corpus()) {
    if (!g->is_abelian()) continue;
    auto t = make_tower({share(cyclic_group(1)), g}, {GroupHom::make(g, share(cyclic_group(1)),
                                                                     std::vector<Element>(g->order(), 0))});
    auto tab = oracle::table_of(*g);
    const auto& lat = t.lattice(1);
    auto full = thread_from_top(t, g->whole());
    for (std::uint64_t p : {2, 3}) {
      for (const auto& ks : lat.subgroups) {
        if (!is_p_power(g->order() / ks.size(), p)) continue;
        auto k = thread_from_top(t, ks);
        auto km = ks.members();
        auto whole = g->whole().members();
        const auto rank = ExtNat::of(std::uint64_t(
            oracle::abelian_rank(tab, oracle::Set(whole.begin(), whole.end()), oracle::Set(km.begin(), km.end()), p)));
        auto [lo, hi] = blueshift_bounds_general(t, full, k, p);
        EXPECT_EQ(lo, rank) << name;
        EXPECT_LE(rank, hi) << name;
        auto [clo, chi] = blueshift_bounds_general(t, full, k, p, {ChainStep::CyclicPQuotient});
        EXPECT_EQ(clo, rank) << name;
        EXPECT_EQ(chi, rank) << name;
      }
    }
  }
}

TEST(Reduction, S3ToC2) {
  auto t = tower("S3", 2);
  auto a3 = o_p_thread(t, 2);
  auto r = reduce_to_pro_p(t, a3, thread(t, "full"), 2);
  ASSERT_TRUE(r.subnormal);
  EXPECT_EQ(r.tower->group(2).order(), 2u);
  EXPECT_EQ(r.k->at(2).size(), 1u);
  EXPECT_EQ(r.h->at(2).size(), 2u);

  // a 2-group is its own reduction
  auto q = tower("Q8", 2);
  auto rq = reduce_to_pro_p(q, thread(q, "e"), thread(q, "full"), 2);
  ASSERT_TRUE(rq.subnormal);
  EXPECT_EQ(rq.tower->group(2).order(), 8u);
  EXPECT_EQ(rq.k->at(2).size(), 1u);

  // e is not 2-subnormal in S3
  EXPECT_FALSE(reduce_to_pro_p(t, thread(t, "e"), thread(t, "full"), 2).subnormal);
  EXPECT_EQ(code_of([&] { reduce_to_pro_p(t, thread(t, "full"), a3, 2); }), ErrorCode::NotSubconjugate);
}

// Inclusions computed before and after reduction agree.
TEST(Reduction, PreservesVerdicts) {
  auto t = tower("S3", 1);
  auto full = thread(t, "full");
  for (const auto& ks : t.lattice(1).subgroups) {
    auto k = thread_from_top(t, ks);
    auto r = reduce_to_pro_p(t, k, full, 2);
    for (auto n : heights())
      for (auto m : heights()) {
        if (m == h(1) || n == h(1)) continue;
        auto v = includes_levelwise(t, {k, 2, n}, {full, 2, m});
        if (!r.subnormal) {
          EXPECT_TRUE(v.exact_false());
          continue;
        }
        auto w = includes_levelwise(*r.tower, {*r.k, 2, n}, {*r.h, 2, m});
        EXPECT_EQ(v.kind, w.kind);
        EXPECT_EQ(v.value, w.value);
      }
  }
}

TEST(Prism, TrivialGroupChain) {
  auto t = tower("Z/1", 1);
  auto g = build_prism(t, {5}, 2, 1);
  ASSERT_EQ(g.nodes.size(), 3u);
  EXPECT_EQ(g.nodes[0].id, "C0|dot|1");
  EXPECT_EQ(g.nodes[1].id, "C0|5|2");
  EXPECT_EQ(g.nodes[2].id, "C0|5|inf");
  EXPECT_EQ(g.edges.size(), 3u);
  std::vector<std::pair<std::size_t, std::size_t>> chain{{1, 0}, {2, 1}};
  auto hasse = g.hasse;
  std::sort(hasse.begin(), hasse.end());
  EXPECT_EQ(hasse, chain);
}

TEST(Prism, ZpLevelTwoShape) {
  auto t = tower("Zp(2)", 2);
  auto g = build_prism(t, {2}, 3, 2);
  EXPECT_EQ(g.nodes.size(), 3u * 4u);
  for (const auto& e : g.edges) {
    const auto& a = g.nodes[e.src];
    const auto& b = g.nodes[e.dst];
    EXPECT_EQ(e.tag, PrismEdge::Tag::Exact);
    if (a.cls == b.cls) {
      EXPECT_LE(b.n, a.n);
    } else {
      // classes are ordered by size, so the smaller subgroup comes first
      EXPECT_LT(a.cls, b.cls);
      EXPECT_LE(b.n + h(1), a.n);
    }
  }
  EXPECT_TRUE(g.find("C0|2|3").has_value());
  EXPECT_TRUE(g.exact[*g.find("C0|2|3")][*g.find("C2|2|2")]);
  EXPECT_FALSE(g.exact[*g.find("C0|2|2")][*g.find("C2|2|2")]);
}

TEST(Prism, S3Columns) {
  auto t = tower("S3", 1);
  auto g = build_prism(t, {2, 3}, 3, 1);
  EXPECT_EQ(g.nodes.size(), 4u * (1 + 2 * 3));
  std::set<std::size_t> cols;
  bool cross_column = false;
  for (const auto& e : g.edges) {
    cols.insert(g.nodes[e.src].cls);
    cols.insert(g.nodes[e.dst].cls);
    cross_column = cross_column || (e.tag == PrismEdge::Tag::Exact && g.nodes[e.src].cls != g.nodes[e.dst].cls);
  }
  EXPECT_EQ(cols.size(), 4u);
  EXPECT_TRUE(cross_column);
  // C3 ⊆ S3 at p = 2 with gap one
  EXPECT_TRUE(g.exact[*g.find("C2|2|3")][*g.find("C3|2|2")]);
  EXPECT_FALSE(g.exact[*g.find("C2|3|3")][*g.find("C3|3|2")]);
}

TEST(Prism, Errors) {
  auto t = tower("Zp(2)", 2);
  EXPECT_EQ(code_of([&] { build_prism(t, {2}, 2, 3); }), ErrorCode::LevelOutOfRange);
  EXPECT_EQ(code_of([&] { build_prism(t, {2}, 0, 1); }), ErrorCode::BadHeight);
  EXPECT_EQ(code_of([&] { build_prism(t, {4}, 2, 1); }), ErrorCode::BadPrime);
  auto g = build_prism(t, {2}, 2, 1);
  EXPECT_EQ(code_of([&] { is_thomason_closed(g, std::vector<std::string>{"nope"}); }), ErrorCode::UnknownNode);
}

TEST(Prism, ExactRelationIsPartialOrder) {
  for (const auto& c : prism_cases()) {
    auto t = tower(c.descriptor, c.depth);
    auto g = build_prism(t, c.primes, 3, c.depth);
    const std::size_t n = g.nodes.size();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_TRUE(g.exact[a][a]);
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) EXPECT_FALSE(g.exact[a][b] && g.exact[b][a]) << c.descriptor << " " << g.nodes[a].id;
        if (!g.exact[a][b]) continue;
        for (std::size_t d = 0; d < n; ++d)
          if (g.exact[b][d]) EXPECT_TRUE(g.exact[a][d]) << c.descriptor;
      }
    }
    // the Hasse diagram generates the relation
    std::vector<std::vector<char>> closure(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) closure[a][a] = 1;
    for (auto [a, b] : g.hasse) closure[a][b] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (closure[a][k] && closure[k][b]) closure[a][b] = 1;
    EXPECT_EQ(closure, g.exact) << c.descriptor;
  }
}

// an exact inclusion at level j survives at every lower level, via the traces
TEST(Prism, LevelCompatibility) {
  for (const auto& c : prism_cases()) {
    auto t = tower(c.descriptor, c.depth);
    auto top = build_prism(t, c.primes, 3, c.depth);
    for (std::size_t i = 0; i < c.depth; ++i) {
      auto low = build_prism(t, c.primes, 3, i);
      for (const auto& e : top.edges) {
        if (e.tag != PrismEdge::Tag::Exact) continue;
        const auto& a = top.nodes[e.src];
        const auto& b = top.nodes[e.dst];
        auto la = low.find(node_id(a.trace[i], a.p, a.n));
        auto lb = low.find(node_id(b.trace[i], b.p, b.n));
        ASSERT_TRUE(la && lb);
        EXPECT_TRUE(low.exact[*la][*lb]) << c.descriptor << " " << a.id << " -> " << b.id << " at " << i;
      }
    }
  }
}

TEST(Prism, Thomason) {
  std::mt19937 rng(7);
  for (const auto& c : prism_cases()) {
    auto t = tower(c.descriptor, c.depth);
    auto g = build_prism(t, c.primes, 2, c.depth);
    const std::size_t n = g.nodes.size();
    EXPECT_TRUE(is_thomason_closed(g, std::vector<std::size_t>{}));
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(is_thomason_closed(g, all));
    for (std::size_t v = 0; v < n; ++v) EXPECT_TRUE(is_thomason_closed(g, down_closure(g, {v})));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::size_t> s;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 4 == 0) s.push_back(v);
      EXPECT_EQ(is_thomason_closed(g, s), down_closure(g, s) == s) << c.descriptor;
    }
  }
  auto t = tower("Zp(2)", 3);
  auto g = build_prism(t, {2}, 3, 3);
  EXPECT_FALSE(is_thomason_closed(g, std::vector<std::string>{"C3|2|inf"}));
  EXPECT_TRUE(is_thomason_closed(g, std::vector<std::string>{"C0|2|inf"}));
}

TEST(Burnside, Examples) {
  auto trivial = burnside_spec(share(cyclic_group(1)), {2, 3});
  EXPECT_EQ(trivial.points.size(), 3u);
  EXPECT_EQ(trivial.edges.size(), 2u);

  auto cp = burnside_spec(share(cyclic_group(5)), {5, 2});
  EXPECT_EQ(cp.points.size(), 5u);
  EXPECT_EQ(cp.point_of(0, 5), cp.point_of(1, 5));
  EXPECT_NE(cp.point_of(0, 2), cp.point_of(1, 2));
  EXPECT_TRUE(cp.leq(cp.point_of(1, 0), cp.point_of(1, 5)));
  EXPECT_FALSE(cp.leq(cp.point_of(1, 5), cp.point_of(1, 0)));

  auto s3 = burnside_spec(share(symmetric_group(3)), {2, 3});
  // 4 classes at 0; O^2 lands on {e, C3}, O^3 on {e, C2, S3}
  EXPECT_EQ(s3.points.size(), 4u + 2u + 3u);
}

// ρ sends exact inclusions Q ⊆ P to ρ(P) ⊆ ρ(Q)
TEST(Burnside, RhoReversesInclusions) {
  for (const auto& c : prism_cases()) {
    auto t = tower(c.descriptor, c.depth);
    auto g = build_prism(t, c.primes, 3, c.depth);
    auto s = burnside_spec(t, c.depth, c.primes);
    for (const auto& v : g.nodes) EXPECT_LT(rho(s, v), s.points.size());
    for (const auto& e : g.edges)
      if (e.tag == PrismEdge::Tag::Exact)
        EXPECT_TRUE(s.leq(rho(s, g.nodes[e.dst]), rho(s, g.nodes[e.src])))
            << c.descriptor << " " << g.nodes[e.src].id << " " << g.nodes[e.dst].id;
  }
  auto t = tower("Z/1", 1);
  auto s = burnside_spec(t, 1, {3});
  EXPECT_EQ(rho(s, 0, 7, h(1)), s.point_of(0, 0));
  EXPECT_EQ(rho(s, 0, 3, kInf), s.point_of(0, 3));
}

TEST(RationalSpectrum, Examples) {
  auto z = tower("Zp(3)", 3);
  for (std::size_t i = 0; i <= 3; ++i) {
    auto r = rational_spectrum(z, i);
    EXPECT_EQ(r.size(), i + 1);
    EXPECT_EQ(r.clopen_count, std::to_string(1u << (i + 1)));
  }
  // 2Z/4 maps onto the trivial subgroup of Z/2
  EXPECT_EQ(rational_spectrum(z, 1).map_from_above, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_FALSE(rational_spectrum(z, 3).map_from_above.has_value());
  auto one = rational_spectrum(tower("Z/1", 1), 1);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.clopen_count, "2");
  EXPECT_EQ(rational_spectrum(tower("S3", 1), 1).clopen_count, "16");
  EXPECT_EQ(rational_spectrum(tower("S4", 1), 1).clopen_count, "2048");
  EXPECT_EQ(detail::pow2_decimal(70), "1180591620717411303424");
}
