#pragma once

// JSON views of the library objects. Keys are sorted (nlohmann's default
// object type is a std::map), so dumps are byte-stable. DOT is produced from
// the JSON only.

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "prott/burnside.hpp"
#include "prott/spectrum.hpp"
#include "prott/topology.hpp"
#include "prott/tower.hpp"

namespace prott {

using Json = nlohmann::json;

inline Json to_json(const ExtNat& v) { return v.infinite ? Json("inf") : Json(v.value); }

inline Json prime_json(std::uint64_t p) { return p == kNoPrime ? Json("dot") : Json(p); }

inline Json to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(Element(a), Element(b)));
    table.push_back(std::move(row));
  }
  return Json{{"order", g.order()}, {"labels", g.labels()}, {"table", std::move(table)}};
}

inline Json to_json(const SubgroupLattice& lat) {
  Json subs = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    subs.push_back(Json{{"bits", lat.subgroups[i].hex()}, {"order", lat.subgroups[i].size()}, {"class", lat.class_of[i]}});
  Json classes = Json::array();
  for (std::size_t c = 0; c < lat.num_classes(); ++c)
    classes.push_back(Json{{"label", class_label(c)}, {"members", lat.classes[c]}, {"order", lat.rep_set(c).size()}});
  return Json{{"group_order", lat.group->order()},
              {"subgroup_count", lat.size()},
              {"class_count", lat.num_classes()},
              {"subgroups", std::move(subs)},
              {"classes", std::move(classes)}};
}

inline Json to_json(const Tower& t) {
  Json levels = Json::array();
  for (std::size_t i = 0; i <= t.depth(); ++i) {
    Json lv{{"level", i}, {"order", t.group(i).order()}, {"abelian", t.group(i).is_abelian()},
            {"subgroup_count", t.lattice(i).size()}, {"class_count", t.lattice(i).num_classes()}};
    if (i > 0) lv["step"] = t.steps[i - 1].map;
    levels.push_back(std::move(lv));
  }
  Json out{{"depth", t.depth()}, {"levels", std::move(levels)}, {"order", order_supernatural(t).str()}};
  if (t.descriptor) out["descriptor"] = t.descriptor->str();
  return out;
}

inline Json to_json(const SubgroupThread& h) {
  Json chain = Json::array();
  for (const auto& s : h.chain) chain.push_back(s.hex());
  Json toks = Json::array();
  for (const auto& tok : h.tokens) toks.push_back(tok.str());
  return Json{{"tag", h.tag}, {"tokens", std::move(toks)}, {"chain", std::move(chain)}};
}

inline Json to_json(const BlueshiftResult& r) {
  Json out;
  switch (r.kind) {
    case BlueshiftResult::Kind::Exact:
      out["kind"] = "exact";
      out["value"] = to_json(r.lower);
      break;
    case BlueshiftResult::Kind::Bounds:
      out["kind"] = "bounds";
      out["bounds"] = Json::array({to_json(r.lower), to_json(r.upper)});
      break;
    case BlueshiftResult::Kind::Infinite:
      out["kind"] = "infinite";
      out["value"] = "inf";
      break;
  }
  out["provenance"] = r.provenance == BlueshiftResult::Provenance::AbelianTheorem ? "abelian-theorem" : "lower-upper-bounds";
  Json levels = Json::array();
  for (std::size_t i = 0; i < r.per_level.size(); ++i)
    levels.push_back(Json{{"level", i}, {"lower", to_json(r.per_level[i].lower)}, {"upper", to_json(r.per_level[i].upper)}});
  out["per_level"] = std::move(levels);
  return out;
}

inline Json to_json(const InclusionVerdict& v) {
  Json out{{"rule", v.rule}};
  if (v.kind == InclusionVerdict::Kind::Exact) {
    out["kind"] = "exact";
    out["value"] = v.value;
    out["decided_level"] = v.decided_level;
  } else {
    out["kind"] = "undetermined";
    auto [lo, hi] = v.bounds();
    out["bounds"] = Json::array({to_json(lo), to_json(hi)});
    Json w = Json::array();
    for (const auto& x : v.windows)
      w.push_back(Json{{"level", x.level}, {"lower", to_json(x.lower)}, {"upper", to_json(x.upper)}});
    out["windows"] = std::move(w);
  }
  return out;
}

inline const char* tag_name(PrismEdge::Tag t) { return t == PrismEdge::Tag::Exact ? "exact" : "possible"; }

inline Json to_json(const PrismGraph& g) {
  Json nodes = Json::array();
  for (const auto& v : g.nodes)
    nodes.push_back(Json{{"id", v.id},
                         {"subgroup_label", v.subgroup_label},
                         {"p", prime_json(v.p)},
                         {"n", to_json(v.n)},
                         {"level", g.level},
                         {"order", v.order},
                         {"trace", v.trace}});
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je{{"src", g.nodes[e.src].id},
            {"dst", g.nodes[e.dst].id},
            {"tag", tag_name(e.tag)},
            {"rule", e.rule},
            {"level", e.decided_level}};
    if (e.tag == PrismEdge::Tag::Possible) je["bounds"] = Json::array({to_json(e.lower), to_json(e.upper)});
    edges.push_back(std::move(je));
  }
  Json hasse = Json::array();
  for (auto [a, b] : g.hasse) hasse.push_back(Json{{"src", g.nodes[a].id}, {"dst", g.nodes[b].id}});
  return Json{{"level", g.level},   {"primes", g.primes}, {"n_max", g.n_max},
              {"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"hasse", std::move(hasse)}};
}

inline Json to_json(const BurnsideSpectrum& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(Json{{"id", p.id}, {"subgroup_label", class_label(p.cls)}, {"char", p.p}});
  Json edges = Json::array();
  for (auto [a, b] : s.edges) edges.push_back(Json{{"src", s.points[a].id}, {"dst", s.points[b].id}});
  return Json{{"characteristics", s.primes}, {"points", std::move(pts)}, {"edges", std::move(edges)}};
}

inline Json to_json(const RationalSpectrum& r) {
  Json pts = Json::array();
  for (std::size_t c = 0; c < r.orders.size(); ++c) pts.push_back(Json{{"label", class_label(c)}, {"order", r.orders[c]}});
  Json out{{"level", r.level}, {"points", std::move(pts)}, {"size", r.size()}, {"clopen_count", r.clopen_count}};
  out["map_from_above"] = r.map_from_above ? Json(*r.map_from_above) : Json(nullptr);
  return out;
}

inline Json to_json(const CBReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json jp{{"point", p.point}, {"status", status_name(p.status)}, {"fiber_history", p.fiber_history}};
    jp["isolation_level"] = p.isolation_level ? Json(*p.isolation_level) : Json(nullptr);
    pts.push_back(std::move(jp));
  }
  Json ranked = Json::array();
  for (const auto& x : r.ranked) ranked.push_back(Json{{"rank", x.rank}, {"level", x.level}, {"point", x.point}});
  Json out{{"horizon", r.horizon}, {"certified", r.certified}, {"points", std::move(pts)},
           {"derived", r.derived}, {"rank_kind", rank_kind_name(r.rank_kind)}, {"ranked", std::move(ranked)}};
  out["rank"] = r.rank_kind == CBReport::RankKind::Finite ? Json(r.rank)
                : r.rank_kind == CBReport::RankKind::Infinite ? Json("inf")
                                                              : Json(nullptr);
  return out;
}

inline Json to_json(const Verdict& v) {
  return Json{{"descriptor", v.descriptor},
              {"countable", tri_name(v.countable)},
              {"scattered", tri_name(v.scattered)},
              {"stratified", tri_name(v.stratified)},
              {"costratified", tri_name(v.costratified)},
              {"lgp", tri_name(v.lgp)},
              {"semi_artinian", tri_name(v.semi_artinian)},
              {"telescope", tri_name(v.telescope)},
              {"provenance", v.provenance}};
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
inline std::string json_scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }
}  // namespace detail

/// DOT for a prism: one rank per height, columns in class order, Hasse
/// edges of the exact relation solid and possible edges dashed.
inline std::string prism_dot(const Json& g) {
  std::ostringstream os;
  os << "digraph prism {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  std::map<std::string, std::vector<std::string>> by_height;  // ordered, "inf" after digits
  std::vector<std::string> heights;
  for (const auto& v : g.at("nodes")) {
    const std::string n = detail::json_scalar(v.at("n"));
    if (!by_height.count(n)) heights.push_back(n);
    by_height[n].push_back(v.at("id").get<std::string>());
    os << "  " << detail::dot_quote(v.at("id").get<std::string>()) << " [label="
       << detail::dot_quote(v.at("subgroup_label").get<std::string>() + " p=" + detail::json_scalar(v.at("p")) +
                            " n=" + n)
       << "];\n";
  }
  std::sort(heights.begin(), heights.end(), [](const std::string& a, const std::string& b) {
    if (a == "inf" || b == "inf") return b == "inf" && a != "inf";
    return std::stoull(a) < std::stoull(b);
  });
  for (const auto& h : heights) {
    os << "  { rank=same;";
    for (const auto& id : by_height[h]) os << " " << detail::dot_quote(id) << ";";
    os << " }\n";
  }
  for (const auto& e : g.at("hasse"))
    os << "  " << detail::dot_quote(e.at("src").get<std::string>()) << " -> "
       << detail::dot_quote(e.at("dst").get<std::string>()) << ";\n";
  for (const auto& e : g.at("edges"))
    if (e.at("tag") == "possible")
      os << "  " << detail::dot_quote(e.at("src").get<std::string>()) << " -> "
         << detail::dot_quote(e.at("dst").get<std::string>()) << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

inline std::string burnside_dot(const Json& s) {
  std::ostringstream os;
  os << "digraph burnside {\n  rankdir=BT;\n";
  for (const auto& p : s.at("points")) os << "  " << detail::dot_quote(p.at("id").get<std::string>()) << ";\n";
  for (const auto& e : s.at("edges"))
    os << "  " << detail::dot_quote(e.at("src").get<std::string>()) << " -> "
       << detail::dot_quote(e.at("dst").get<std::string>()) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace prott
