#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace prott {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Exponent of p in n (n > 0).
inline int valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// log_p(n) when n is a power of p, otherwise nullopt. log_p(1) = 0.
inline std::optional<int> exact_log(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return std::nullopt;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return exact_log(n, p).has_value(); }

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace prott
