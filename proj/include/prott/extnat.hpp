#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

namespace prott {

/// A value in N ∪ {∞}.
struct ExtNat {
  std::uint64_t value = 0;
  bool infinite = false;

  static constexpr ExtNat inf() { return ExtNat{0, true}; }
  static constexpr ExtNat of(std::uint64_t v) { return ExtNat{v, false}; }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend constexpr bool operator<(const ExtNat& a, const ExtNat& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend constexpr bool operator<=(const ExtNat& a, const ExtNat& b) { return !(b < a); }
  friend constexpr ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.value + b.value);
  }

  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline ExtNat max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }
inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }

}  // namespace prott
