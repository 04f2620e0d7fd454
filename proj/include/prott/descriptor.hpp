#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "prott/error.hpp"
#include "prott/group.hpp"
#include "prott/primes.hpp"

namespace prott {

/// One factor of a profinite group descriptor.
///
///   Fin     a finite group atom: Z/<n>, S<n>, Q8
///   Zp      the p-adic integers
///   FpInf   the countable product of copies of Z/p
///   SL      SL_N over the p-adic integers; recognised for the countability
///           lookup table only, never realised
struct ProFactor {
  enum class Kind { Fin, Zp, FpInf, SL };
  enum class FinKind { Cyclic, Symmetric, Quaternion };

  Kind kind = Kind::Fin;
  FinKind fin = FinKind::Cyclic;
  std::uint64_t n = 1;  // order (Cyclic), degree (Symmetric, SL)
  std::uint64_t p = 0;  // prime (Zp, FpInf, SL)

  static ProFactor cyclic(std::uint64_t n) { return {Kind::Fin, FinKind::Cyclic, n, 0}; }
  static ProFactor symmetric(std::uint64_t n) { return {Kind::Fin, FinKind::Symmetric, n, 0}; }
  static ProFactor quaternion() { return {Kind::Fin, FinKind::Quaternion, 8, 0}; }
  static ProFactor zp(std::uint64_t p) { return {Kind::Zp, FinKind::Cyclic, 0, p}; }
  static ProFactor fp_inf(std::uint64_t p) { return {Kind::FpInf, FinKind::Cyclic, 0, p}; }
  static ProFactor sl(std::uint64_t n, std::uint64_t p) { return {Kind::SL, FinKind::Cyclic, n, p}; }

  bool is_finite() const { return kind == Kind::Fin; }

  GroupAtom atom() const {
    switch (fin) {
      case FinKind::Cyclic: return GroupAtom{GroupAtom::Cyclic{n}};
      case FinKind::Symmetric: return GroupAtom{GroupAtom::Symmetric{n}};
      case FinKind::Quaternion: return GroupAtom{GroupAtom::Quaternion8{}};
    }
    return GroupAtom{GroupAtom::Cyclic{1}};
  }

  std::uint64_t finite_order() const {
    switch (fin) {
      case FinKind::Cyclic: return n;
      case FinKind::Symmetric: {
        std::uint64_t f = 1;
        for (std::uint64_t i = 2; i <= n; ++i) f *= i;
        return f;
      }
      case FinKind::Quaternion: return 8;
    }
    return 1;
  }

  bool finite_abelian() const {
    return fin == FinKind::Cyclic || (fin == FinKind::Symmetric && n <= 2);
  }

  std::string str() const {
    switch (kind) {
      case Kind::Fin:
        if (fin == FinKind::Cyclic) return "Z/" + std::to_string(n);
        if (fin == FinKind::Symmetric) return "S" + std::to_string(n);
        return "Q8";
      case Kind::Zp: return "Zp(" + std::to_string(p) + ")";
      case Kind::FpInf: return "FpInf(" + std::to_string(p) + ")";
      case Kind::SL: return "SL" + std::to_string(n) + "(Zp(" + std::to_string(p) + "))";
    }
    return "?";
  }

  auto key() const { return std::make_tuple(int(kind), int(fin), n, p); }
  friend bool operator==(const ProFactor& a, const ProFactor& b) { return a.key() == b.key(); }
  friend bool operator<(const ProFactor& a, const ProFactor& b) { return a.key() < b.key(); }
};

/// A descriptor is a flat product of factors; nested products are flattened,
/// which is harmless because the lexicographic element order of a direct
/// product is associative.
struct ProDescriptor {
  std::vector<ProFactor> factors;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " x ";
      out += factors[i].str();
    }
    return out;
  }

  bool all_finite() const {
    return std::all_of(factors.begin(), factors.end(), [](const ProFactor& f) { return f.is_finite(); });
  }
  bool has(ProFactor::Kind k) const {
    return std::any_of(factors.begin(), factors.end(), [k](const ProFactor& f) { return f.kind == k; });
  }

  /// Factors sorted into a canonical order.
  ProDescriptor normalized() const {
    ProDescriptor d = *this;
    std::stable_sort(d.factors.begin(), d.factors.end());
    return d;
  }

  friend bool operator==(const ProDescriptor& a, const ProDescriptor& b) { return a.factors == b.factors; }
};

namespace detail {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  ProDescriptor parse() {
    ProDescriptor d;
    expr(d);
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, text_[pos_]) + "'");
    return d;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg, std::size_t at) const {
    throw Error(code, msg + " at offset " + std::to_string(at), at);
  }
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { fail(code, msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view lit) {
    skip_ws();
    return text_.substr(pos_, lit.size()) == lit;
  }
  void expect(std::string_view lit) {
    if (!peek(lit)) fail(ErrorCode::SyntaxError, "expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - start >= 9) fail(ErrorCode::SyntaxError, "number too large", start);
      v = v * 10 + std::uint64_t(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail(ErrorCode::SyntaxError, "expected a number");
    return v;
  }
  std::uint64_t prime_arg() {
    expect("(");
    skip_ws();
    std::size_t at = pos_;
    auto p = number();
    if (!is_prime(p)) fail(ErrorCode::BadPrime, std::to_string(p) + " is not prime", at);
    expect(")");
    return p;
  }

  void expr(ProDescriptor& d) {
    term(d);
    while (peek("x")) {
      ++pos_;
      term(d);
    }
  }

  void term(ProDescriptor& d) {
    if (peek("(")) {
      ++pos_;
      expr(d);
      expect(")");
      return;
    }
    d.factors.push_back(atom());
  }

  ProFactor atom() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    if (peek("Zp")) {
      pos_ += 2;
      return ProFactor::zp(prime_arg());
    }
    if (peek("Z")) {
      ++pos_;
      expect("/");
      skip_ws();
      std::size_t nat = pos_;
      auto n = number();
      if (n == 0) fail(ErrorCode::SyntaxError, "cyclic order must be positive", nat);
      return ProFactor::cyclic(n);
    }
    if (peek("FpInf")) {
      pos_ += 5;
      return ProFactor::fp_inf(prime_arg());
    }
    if (peek("SL")) {
      pos_ += 2;
      auto n = number();
      if (n == 0) fail(ErrorCode::SyntaxError, "SL degree must be positive", at);
      expect("(");
      expect("Zp");
      auto p = prime_arg();
      expect(")");
      return ProFactor::sl(n, p);
    }
    if (peek("S")) {
      ++pos_;
      std::size_t nat = pos_;
      auto n = number();
      if (n == 0) fail(ErrorCode::SyntaxError, "symmetric degree must be positive", nat);
      return ProFactor::symmetric(n);
    }
    if (peek("Q8")) {
      pos_ += 2;
      return ProFactor::quaternion();
    }
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) fail(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, text_[pos_]) + "'");
    fail(ErrorCode::UnknownAtom, "unknown atom '" + std::string(text_.substr(pos_, end - pos_)) + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `Z/<n>`, `S<n>`, `Q8`, `Zp(<p>)`, `FpInf(<p>)` and `SL<N>(Zp(<p>))`
/// joined by the infix product `x`, with parentheses. Whitespace is ignored.
inline ProDescriptor parse_descriptor(std::string_view text) { return detail::DescriptorParser(text).parse(); }

}  // namespace prott
