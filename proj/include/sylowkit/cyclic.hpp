#pragma once

// Element powers, cyclic subgroups, element order and Euler's phi.

#include <cstdint>
#include <numeric>
#include <vector>

#include "sylowkit/carrier.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/number.hpp"
#include "sylowkit/verdict.hpp"

namespace sylowkit {

/// a^n by repeated left multiplication: a^0 = 1, a^(n+1) = a a^n.
inline elem gexpn(Group const& g, elem a, std::uint64_t n) {
  elem r = g.unit();
  for (std::uint64_t i = 0; i < n; ++i) r = g.mul(a, r);
  return r;
}

/// { a^n : n >= 0 }, iterating x -> a x from 1 with fuel card(G).
inline ElemSet cyclic(Group const& g, elem a) {
  ElemSet out(g.order());
  elem x = g.unit();
  for (std::size_t fuel = g.order(); fuel > 0 && !out.contains(x); --fuel) {
    out.insert(x);
    x = g.mul(a, x);
  }
  return out;
}

inline std::size_t order(Group const& g, elem a) { return cyclic(g, a).card(); }

/// Number of x in 0..n-1 with gcd(n, x) = 1; phi(0) = 0.
/// Evaluated through the factorisation n * prod (1 - 1/q) over primes q | n.
inline std::uint64_t phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

/// phi(mn) = phi(m) phi(n) for coprime m, n with mn <= bound, and
/// phi(p^(k+1)) = p^(k+1) - p^k for primes p with p^(k+1) <= bound.
inline Verdicts phi_theorem_checks(std::uint64_t bound) {
  if (bound < 2) throw error(ErrorKind::BadArg, "bound must be >= 2", {{"bound", static_cast<std::int64_t>(bound)}});
  std::vector<std::uint64_t> table(bound + 1);
  for (std::uint64_t n = 0; n <= bound; ++n) table[n] = phi(n);

  Witness mult, prime_k;
  std::int64_t mult_cases = 0, prime_cases = 0;
  for (std::uint64_t m = 1; m <= bound && mult.empty(); ++m) {
    for (std::uint64_t n = 1; m * n <= bound; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++mult_cases;
      if (table[m * n] != table[m] * table[n]) {
        mult = {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)}};
        break;
      }
    }
  }
  for (std::uint64_t p = 2; p <= bound && prime_k.empty(); ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t pk = 1;  // p^k
    for (unsigned k = 0; pk * p <= bound; ++k, pk *= p) {
      ++prime_cases;
      if (table[pk * p] != pk * p - pk) {
        prime_k = {{"p", static_cast<std::int64_t>(p)}, {"k", k}};
        break;
      }
    }
  }
  Verdict vm = holds("phi_mult", mult.empty(), mult);
  Verdict vp = holds("phi_prime_k", prime_k.empty(), prime_k);
  if (vm.pass) vm.lhs = vm.rhs = mult_cases;
  if (vp.pass) vp.lhs = vp.rhs = prime_cases;
  return {vm, vp};
}

}  // namespace sylowkit
