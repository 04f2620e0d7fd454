#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prott/burnside.hpp"
#include "prott/descriptor.hpp"
#include "prott/json.hpp"
#include "prott/spectrum.hpp"
#include "prott/topology.hpp"
#include "prott/tower.hpp"

namespace prott::cli {

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"subgroups", "prism", "blueshift", "burnside", "rational-spc", "cb", "verdict"};
  return v;
}

struct Command {
  std::string verb;
  std::string descriptor;
  std::size_t depth = kDefaultDepth;
  std::optional<std::vector<std::uint64_t>> primes;
  std::uint64_t nmax = 4;
  std::optional<std::size_t> level;  // defaults to depth
  std::string format = "json";
  std::string from = "e";
  std::string to = "full";
  std::optional<std::uint64_t> p;
  std::string m = "2";
  std::optional<std::string> n;  // set: inclusion query instead of blueshift
  std::size_t cap = kDefaultOrderBound;
};

enum Exit : int { kOk = 0, kError = 1, kOpen = 2 };

struct Result {
  int exit_code = kOk;
  std::string output;  // stdout payload
  std::string json;    // the JSON form, also when output is DOT
  std::string error;   // stderr payload, JSON
};

inline Height parse_height(const std::string& s) {
  if (s == "inf") return Height::inf();
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::BadArgument, "bad height '" + s + "'");
  if (v == 0) throw Error(ErrorCode::BadHeight, "heights start at 1");
  return Height::of(v);
}

inline std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(start, comma - start);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw Error(ErrorCode::BadArgument, "bad prime list '" + s + "'");
    if (!is_prime(v)) throw Error(ErrorCode::BadPrime, tok + " is not prime");
    out.push_back(v);
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline void validate(const Command& c) {
  bool known = false;
  for (const auto& v : verbs()) known = known || v == c.verb;
  if (!known) throw Error(ErrorCode::BadArgument, "unknown verb '" + c.verb + "'");
  if (c.format != "json" && c.format != "dot") throw Error(ErrorCode::BadArgument, "format must be json or dot");
  if (c.format == "dot" && c.verb != "prism" && c.verb != "burnside")
    throw Error(ErrorCode::BadArgument, "dot output is only available for prism and burnside");
  if (c.nmax < 1) throw Error(ErrorCode::BadHeight, "nmax must be at least 1");
  if (c.level && *c.level > c.depth)
    throw Error(ErrorCode::LevelOutOfRange,
                "level " + std::to_string(*c.level) + " beyond depth " + std::to_string(c.depth));
  if (c.primes)
    for (auto p : *c.primes)
      if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  if (c.p && !is_prime(*c.p)) throw Error(ErrorCode::BadPrime, std::to_string(*c.p) + " is not prime");
  parse_height(c.m);
  if (c.n) parse_height(*c.n);
}

inline std::vector<std::uint64_t> default_primes(const Tower& t) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : order_supernatural(t).exponents)
    if (e.infinite || e.value > 0) out.push_back(p);
  if (out.empty()) out.push_back(2);
  return out;
}

inline Json error_json(const Error& e) {
  Json j{{"code", error_code_name(e.code())}, {"message", e.what()}};
  if (e.offset()) j["offset"] = *e.offset();
  return Json{{"error", std::move(j)}};
}

inline Result dispatch(const Command& c) {
  Result r;
  const ProDescriptor d = parse_descriptor(c.descriptor);
  if (c.verb == "verdict") {
    Verdict v = countability_verdict(d);
    Json j = to_json(v);
    auto rank = cb_rank_descriptor(d);
    j["cb_rank"] = rank.kind == CBRankValue::Kind::Finite     ? Json(rank.value)
                   : rank.kind == CBRankValue::Kind::Infinite ? Json("inf")
                                                              : Json("unsupported");
    r.output = dump(j);
    if (v.countable == Tri::Unknown) r.exit_code = kOpen;
    return r;
  }

  const Tower t = realize(d, c.depth, c.cap);
  const std::size_t level = c.level.value_or(t.depth());
  const std::vector<std::uint64_t> primes = c.primes.value_or(default_primes(t));

  if (c.verb == "subgroups") {
    Json j{{"tower", to_json(t)}, {"level", level}, {"lattice", to_json(t.lattice(level))}};
    r.output = dump(j);
  } else if (c.verb == "prism") {
    Json j = to_json(build_prism(t, primes, c.nmax, level));
    r.json = dump(j);
    r.output = c.format == "dot" ? prism_dot(j) : r.json;
  } else if (c.verb == "burnside") {
    Json j = to_json(burnside_spec(t, level, primes));
    r.json = dump(j);
    r.output = c.format == "dot" ? burnside_dot(j) : r.json;
  } else if (c.verb == "rational-spc") {
    r.output = dump(to_json(rational_spectrum(t, level)));
  } else if (c.verb == "cb") {
    CBReport rep = cb_analyze(t);
    Json j = to_json(rep);
    j["descriptor"] = d.str();
    r.output = dump(j);
    if (rep.rank_kind == CBReport::RankKind::TruncationUnknown) r.exit_code = kOpen;
  } else if (c.verb == "blueshift") {
    const std::uint64_t p = c.p.value_or(primes.front());
    const Height m = parse_height(c.m);
    const SubgroupThread k = thread(t, c.from);
    const SubgroupThread h = thread(t, c.to);
    if (c.n) {
      PrimeData kd{k, p, parse_height(*c.n)};
      PrimeData hd{h, p, m};
      InclusionVerdict v = includes_levelwise(t, kd, hd);
      Json j = to_json(v);
      j["query"] = Json{{"from", c.from}, {"to", c.to}, {"p", p}, {"m", to_json(m)}, {"n", to_json(kd.n)}};
      r.output = dump(j);
      if (v.kind == InclusionVerdict::Kind::Undetermined) r.exit_code = kOpen;
    } else {
      BlueshiftResult b = blueshift(t, h, k, p, m);
      Json j = to_json(b);
      j["query"] = Json{{"from", c.from}, {"to", c.to}, {"p", p}, {"m", to_json(m)}};
      r.output = dump(j);
      if (b.kind == BlueshiftResult::Kind::Bounds && b.lower < b.upper) r.exit_code = kOpen;
    }
  }
  return r;
}

}  // namespace detail

/// Validates the flags, then computes. Output is a pure function of the
/// command; errors come back as JSON with a machine-readable code.
inline Result run(const Command& c) {
  try {
    detail::validate(c);
    Result r = detail::dispatch(c);
    if (r.json.empty()) r.json = r.output;
    return r;
  } catch (const Error& e) {
    Result r;
    r.exit_code = kError;
    r.error = dump(detail::error_json(e));
    return r;
  }
}

}  // namespace prott::cli
