#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sylowkit/error.hpp"

namespace sylowkit::perm {

using Perm = std::vector<elem>;

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Position of p among all permutations of its size in lexicographic order.
inline std::size_t rank(Perm const& p) {
  std::size_t const n = p.size();
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

inline Perm unrank(std::size_t n, std::size_t r) {
  std::vector<elem> pool(n);
  std::iota(pool.begin(), pool.end(), elem{0});
  Perm p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t const f = factorial(n - 1 - i);
    std::size_t const k = r / f;
    r %= f;
    p.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return p;
}

/// (p o q)(i) = p(q(i)): q is applied first.
inline Perm compose(Perm const& p, Perm const& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// All permutations of 0..n-1 in lexicographic order.
inline std::vector<Perm> all(std::size_t n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), elem{0});
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace sylowkit::perm
