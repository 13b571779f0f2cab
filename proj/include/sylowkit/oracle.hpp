#pragma once

// Brute-force cross-checks. Everything here works directly on the
// multiplication table with plain containers and shares no code path with the
// subgroup, coset, action or Sylow machinery it is used to check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sylowkit/group.hpp"

namespace sylowkit::oracle {

using Members = std::vector<elem>;  // sorted

/// Smallest k >= 1 with a^k = 1.
inline std::size_t element_order(Group const& g, elem a) {
  std::size_t k = 1;
  for (elem x = a; x != g.unit(); x = g.mul(x, a)) ++k;
  return k;
}

/// Smallest-index element of order exactly p, or order() when none exists.
inline elem first_element_of_order(Group const& g, std::size_t p) {
  for (elem a = 0; a < g.order(); ++a)
    if (element_order(g, a) == p) return a;
  return static_cast<elem>(g.order());
}

inline bool is_closed(Group const& g, Members const& s) {
  std::vector<char> in(g.order(), 0);
  for (elem x : s) in[x] = 1;
  for (elem x : s)
    for (elem y : s)
      if (!in[g.mul(x, y)]) return false;
  return !s.empty();
}

/// Subgroup generated by `gens`, by saturating products until nothing new appears.
inline Members generate(Group const& g, Members const& gens) {
  std::vector<char> in(g.order(), 0);
  Members s{g.unit()};
  in[g.unit()] = 1;
  for (elem x : gens)
    if (!in[x]) {
      in[x] = 1;
      s.push_back(x);
    }
  for (bool grew = true; grew;) {
    grew = false;
    Members const snapshot = s;
    for (elem x : snapshot)
      for (elem y : snapshot) {
        elem const z = g.mul(x, y);
        if (!in[z]) {
          in[z] = 1;
          s.push_back(z);
          grew = true;
        }
      }
  }
  std::sort(s.begin(), s.end());
  return s;
}

/// Every multiplication-closed subset of size k containing the unit, by
/// scanning all C(n-1, k-1) candidates. In a finite group those are exactly
/// the subgroups of order k.
inline std::vector<Members> closed_subsets_of_size(Group const& g, std::size_t k) {
  std::vector<Members> out;
  std::size_t const n = g.order();
  if (k == 0 || k > n) return out;
  std::vector<elem> others;
  for (elem x = 0; x < n; ++x)
    if (x != g.unit()) others.push_back(x);
  std::vector<std::size_t> pick(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) pick[i] = i;
  std::vector<char> in(n, 0);
  while (true) {
    Members s{g.unit()};
    for (std::size_t i : pick) s.push_back(others[i]);
    for (elem x : s) in[x] = 1;
    bool closed = true;
    for (std::size_t a = 0; a < s.size() && closed; ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        if (!in[g.mul(s[a], s[b])]) {
          closed = false;
          break;
        }
    for (elem x : s) in[x] = 0;
    if (closed) {
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
    // next combination of k-1 out of n-1
    std::size_t i = k - 1;
    while (i > 0 && pick[i - 1] == others.size() - (k - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All subgroups whose order is a power of p, found by growing from the
/// trivial subgroup one generator at a time (every p-subgroup is reached
/// through a chain of p-subgroups).
inline std::vector<Members> p_subgroups(Group const& g, std::uint64_t p) {
  auto is_p_power = [p](std::size_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  std::set<Members> seen{Members{g.unit()}};
  std::vector<Members> frontier{Members{g.unit()}};
  while (!frontier.empty()) {
    std::vector<Members> next;
    for (auto const& s : frontier) {
      std::vector<char> in(g.order(), 0);
      for (elem x : s) in[x] = 1;
      for (elem x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        Members gens = s;
        gens.push_back(x);
        auto t = generate(g, gens);
        if (!is_p_power(t.size())) continue;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// All subgroups of order p^dlogn(p, |G|), i.e. the Sylow p-subgroups of G.
/// Uses the exhaustive closed-subset scan when it has at most `scan_limit`
/// candidates and the p-subgroup lattice search otherwise.
inline std::vector<Members> sylow_subgroups(Group const& g, std::uint64_t p, std::uint64_t scan_limit = 3'000'000) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  if (binomial(g.order() - 1, target - 1) <= scan_limit) return closed_subsets_of_size(g, target);
  std::vector<Members> out;
  for (auto& s : p_subgroups(g, p))
    if (s.size() == target) out.push_back(std::move(s));
  return out;
}

/// phi by counting residues coprime to n.
inline std::uint64_t phi_by_gcd_count(std::uint64_t n) {
  auto gcd = [](std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < n; ++x)
    if (gcd(n, x) == 1) ++c;
  return c;
}

}  // namespace sylowkit::oracle
