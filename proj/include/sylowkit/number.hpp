#pragma once

#include <cstdint>
#include <vector>

#include "sylowkit/error.hpp"

namespace sylowkit {

/// Trial division.
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Exponent of the largest power of p dividing u.
inline unsigned dlogn(std::uint64_t p, std::uint64_t u) {
  if (p < 2) throw error(ErrorKind::BadBase, "dlogn base must be >= 2", {{"p", static_cast<std::int64_t>(p)}});
  if (u == 0) throw error(ErrorKind::BadArg, "dlogn argument must be >= 1");
  unsigned e = 0;
  while (u % p == 0) {
    u /= p;
    ++e;
  }
  return e;
}

constexpr std::uint64_t expn(std::uint64_t p, unsigned e) noexcept {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

/// True iff n = p^a for some a >= 0.
inline bool is_power_of(std::uint64_t p, std::uint64_t n) {
  return n >= 1 && expn(p, dlogn(p, n)) == n;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && is_prime(d)) out.push_back(d);
  return out;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw error(ErrorKind::NotPrime, "p must be prime", {{"p", static_cast<std::int64_t>(p)}});
}

}  // namespace sylowkit
