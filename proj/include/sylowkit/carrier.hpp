#pragma once

/**
 * @file carrier.hpp
 * @brief Enumerated finite carriers and indicator sets over them.
 *
 * A carrier of size n is the universe {0, ..., n-1}; points are identified with
 * their enumeration index, so equality of points is index equality. Subsets
 * are dense indicator bit-vectors. Because an indicator is canonical,
 * extensional equality of sets coincides with `operator==`.
 *
 * Canonical class representatives (`root`) are the minimum index of the class.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sylowkit/error.hpp"

namespace sylowkit {

/// A finite enumerated universe {0, ..., size-1}.
struct Carrier {
  std::size_t size = 0;

  [[nodiscard]] bool contains(std::size_t x) const noexcept { return x < size; }
  friend bool operator==(Carrier, Carrier) = default;
};

/// Indicator set over a carrier. Bit i is the membership of point i.
class ElemSet {
  using word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t carrier_size)
      : size_(carrier_size), words_((carrier_size + word_bits - 1) / word_bits, 0) {}
  explicit ElemSet(Carrier c) : ElemSet(c.size) {}

  static ElemSet empty(std::size_t n) { return ElemSet(n); }

  static ElemSet full(std::size_t n) {
    ElemSet s(n);
    std::fill(s.words_.begin(), s.words_.end(), ~word{0});
    s.trim();
    return s;
  }

  static ElemSet singleton(std::size_t n, elem x) {
    ElemSet s(n);
    s.insert(x);
    return s;
  }

  static ElemSet of(std::size_t n, std::initializer_list<elem> xs) {
    return of(n, std::span<elem const>(xs.begin(), xs.size()));
  }

  static ElemSet of(std::size_t n, std::span<elem const> xs) {
    ElemSet s(n);
    for (elem x : xs) s.insert(x);
    return s;
  }

  [[nodiscard]] Carrier carrier() const noexcept { return Carrier{size_}; }
  [[nodiscard]] std::size_t carrier_size() const noexcept { return size_; }

  [[nodiscard]] bool contains(elem x) const noexcept {
    return x < size_ && ((words_[x / word_bits] >> (x % word_bits)) & 1U);
  }
  bool operator()(elem x) const noexcept { return contains(x); }

  void insert(elem x) {
    check_point(x);
    words_[x / word_bits] |= word{1} << (x % word_bits);
  }

  void erase(elem x) {
    check_point(x);
    words_[x / word_bits] &= ~(word{1} << (x % word_bits));
  }

  /// Number of members (popcount of the indicator).
  [[nodiscard]] std::size_t card() const noexcept {
    std::size_t c = 0;
    for (word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool is_empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word w) { return w == 0; });
  }

  /// Smallest member, or carrier_size() when empty.
  [[nodiscard]] elem first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<elem>(i * word_bits + std::countr_zero(words_[i]));
    }
    return static_cast<elem>(size_);
  }

  /// Members in increasing index order.
  [[nodiscard]] std::vector<elem> members() const {
    std::vector<elem> out;
    out.reserve(card());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<elem>(i * word_bits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word w = words_[i];
      while (w != 0) {
        f(static_cast<elem>(i * word_bits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  ElemSet& operator&=(ElemSet const& o) {
    require_same_carrier(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator|=(ElemSet const& o) {
    require_same_carrier(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator-=(ElemSet const& o) {
    require_same_carrier(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, ElemSet const& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, ElemSet const& b) { return a |= b; }
  friend ElemSet operator-(ElemSet a, ElemSet const& b) { return a -= b; }

  /// True iff every member of *this is a member of o.
  [[nodiscard]] bool subset_of(ElemSet const& o) const {
    require_same_carrier(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(ElemSet const&, ElemSet const&) = default;

  /// Lexicographic order on the increasing member lists.
  friend std::strong_ordering operator<=>(ElemSet const& a, ElemSet const& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    auto const ma = a.members();
    auto const mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  void require_same_carrier(ElemSet const& o) const {
    if (o.size_ != size_) {
      throw error(ErrorKind::CarrierMismatch, "sets live on different carriers",
                  {{"lhs_size", static_cast<std::int64_t>(size_)},
                   {"rhs_size", static_cast<std::int64_t>(o.size_)}});
    }
  }

 private:
  void check_point(elem x) const {
    if (x >= size_) {
      throw error(ErrorKind::OutOfRange, "point outside carrier",
                  {{"point", x}, {"size", static_cast<std::int64_t>(size_)}});
    }
  }

  void trim() {
    if (size_ % word_bits != 0 && !words_.empty()) {
      words_.back() &= (word{1} << (size_ % word_bits)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<word> words_;
};

inline std::size_t card(ElemSet const& a) noexcept { return a.card(); }

inline bool subset(ElemSet const& a, ElemSet const& b) { return a.subset_of(b); }

inline ElemSet set_intersection(ElemSet const& a, ElemSet const& b) { return a & b; }

inline ElemSet set_union(ElemSet const& a, ElemSet const& b) { return a | b; }

/// { f(x) : x in A } on a carrier of `target_size` points.
template <typename F>
ElemSet image(F&& f, ElemSet const& a, std::size_t target_size) {
  ElemSet out(target_size);
  a.for_each([&](elem x) {
    auto const y = static_cast<std::size_t>(f(x));
    if (y >= target_size) {
      throw error(ErrorKind::OutOfRange, "map leaves the target carrier",
                  {{"x", x}, {"f(x)", static_cast<std::int64_t>(y)}});
    }
    out.insert(static_cast<elem>(y));
  });
  return out;
}

/// Image under a map into the same carrier.
template <typename F>
ElemSet image(F&& f, ElemSet const& a) {
  return image(std::forward<F>(f), a, a.carrier_size());
}

/// { x in 0..source_size-1 : f(x) in B }.
template <typename F>
ElemSet preimage(F&& f, ElemSet const& b, std::size_t source_size) {
  ElemSet out(source_size);
  for (std::size_t x = 0; x < source_size; ++x) {
    auto const y = static_cast<std::size_t>(f(static_cast<elem>(x)));
    if (y >= b.carrier_size()) {
      throw error(ErrorKind::OutOfRange, "map leaves the target carrier",
                  {{"x", static_cast<std::int64_t>(x)}, {"f(x)", static_cast<std::int64_t>(y)}});
    }
    if (b.contains(static_cast<elem>(y))) out.insert(static_cast<elem>(x));
  }
  return out;
}

/// Smallest-index y in 0..n-1 with rel(x, y). Falls back to x when nothing
/// relates; the coset relations used here are reflexive so that never happens.
template <typename Rel>
elem root(Rel&& rel, elem x, std::size_t n) {
  for (elem y = 0; y < static_cast<elem>(n); ++y) {
    if (rel(x, y)) return y;
  }
  return x;
}

/// Number of distinct roots among members of `domain`, i.e. the number of
/// classes an equivalence relation cuts the domain into.
template <typename Rel>
std::size_t n_comp(Rel&& rel, ElemSet const& domain) {
  ElemSet roots(domain.carrier_size());
  domain.for_each([&](elem x) { roots.insert(root(rel, x, domain.carrier_size())); });
  return roots.card();
}

}  // namespace sylowkit
