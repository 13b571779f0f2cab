#pragma once

/**
 * @file sylow.hpp
 * @brief Constructive Cauchy and Sylow theorems.
 *
 * cauchy() acts with the additive group Z_p by index rotation on
 *
 *     H* = { (prod(h)^-1, h_0, ..., h_{p-2}) : h in H^(p-1) },
 *
 * whose fixed points are the constant tuples (h, ..., h) with h^p = 1. The mod-p
 * counting lemma makes their number a multiple of p, so a non-unit one exists.
 *
 * sylow1() starts from a Cauchy subgroup of order p and grows it one factor p at
 * a time: the left-translation action of H_i on its own cosets in K has the
 * cosets of the normaliser N as fixed points, p divides |N/H_i|, and the
 * preimage of an order-p subgroup of N/H_i has order p^(i+1).
 *
 * sylow2() finds a coset xL fixed by H under left translation; then H is
 * contained in xLx^-1. syset() is the conjugation orbit of one Sylow subgroup.
 *
 * Every intermediate claim is checked; a failing check throws InternalInvariant.
 */

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sylowkit/action.hpp"
#include "sylowkit/carrier.hpp"
#include "sylowkit/catalog.hpp"
#include "sylowkit/conjnormal.hpp"
#include "sylowkit/cyclic.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/number.hpp"
#include "sylowkit/subgroup.hpp"
#include "sylowkit/verdict.hpp"

namespace sylowkit {

inline constexpr std::size_t default_max_tuple_carrier = 1'000'000;

/// The H* size cap: GRP_MAX_TUPLE_CARRIER when set to a positive integer, else 10^6.
inline std::size_t max_tuple_carrier_from_env() {
  if (char const* v = std::getenv("GRP_MAX_TUPLE_CARRIER")) {
    char* end = nullptr;
    auto const n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return default_max_tuple_carrier;
}

/// Length-p tuples over the members of H, addressed by mixed-radix rank.
/// H^p is indexed by all p components; H* by the last p-1 components, the
/// first being the inverse of their product.
class TupleCarrier {
 public:
  TupleCarrier(Group g, ElemSet const& h, std::size_t p)
      : g_(std::move(g)), members_(h.members()), pos_(g_.order(), npos), p_(p) {
    if (p_ < 1) throw error(ErrorKind::BadArg, "tuple length must be positive");
    for (std::size_t i = 0; i < members_.size(); ++i) pos_[members_[i]] = i;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  [[nodiscard]] std::size_t length() const noexcept { return p_; }
  [[nodiscard]] std::size_t base_card() const noexcept { return members_.size(); }

  /// |H|^k, or nullopt when it exceeds `limit`.
  [[nodiscard]] std::optional<std::size_t> power_size(std::size_t k, std::size_t limit) const {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (members_.size() != 0 && r > limit / members_.size()) return std::nullopt;
      r *= members_.size();
    }
    if (r > limit) return std::nullopt;
    return r;
  }

  /// Writes the p-tuple of H* with rank `idx` into out (size p).
  void star_tuple(std::size_t idx, std::span<elem> out) const {
    std::size_t const k = members_.size();
    elem prod = g_.unit();
    for (std::size_t i = p_ - 1; i >= 1; --i) {
      out[i] = members_[idx % k];
      idx /= k;
    }
    for (std::size_t i = 1; i < p_; ++i) prod = g_.mul(prod, out[i]);
    out[0] = g_.inv(prod);
  }

  [[nodiscard]] std::vector<elem> star_tuple(std::size_t idx) const {
    std::vector<elem> t(p_);
    star_tuple(idx, t);
    return t;
  }

  /// Rank within H* of a product-one tuple over H.
  [[nodiscard]] std::size_t star_index(std::span<elem const> t) const {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < p_; ++i) idx = idx * members_.size() + pos_[t[i]];
    return idx;
  }

  [[nodiscard]] std::vector<elem> power_tuple(std::size_t idx) const {
    std::vector<elem> t(p_);
    for (std::size_t i = p_; i-- > 0;) {
      t[i] = members_[idx % members_.size()];
      idx /= members_.size();
    }
    return t;
  }

  [[nodiscard]] bool in_power(std::span<elem const> t) const {
    if (t.size() != p_) return false;
    for (elem x : t)
      if (x >= pos_.size() || pos_[x] == npos) return false;
    return true;
  }

  [[nodiscard]] bool in_star(std::span<elem const> t) const {
    if (!in_power(t)) return false;
    elem prod = g_.unit();
    for (elem x : t) prod = g_.mul(prod, x);
    return prod == g_.unit();
  }

 private:
  Group g_;
  std::vector<elem> members_;
  std::vector<std::size_t> pos_;
  std::size_t p_;
};

struct CauchyResult {
  elem element = 0;
  bool constructive = true;
  std::size_t tuple_carrier = 0;  ///< |H*|, 0 on the fallback path
  std::size_t fixed_points = 0;   ///< |S0| of the rotation action
  std::vector<std::string> trace;
};

namespace detail {

inline std::string set_str(ElemSet const& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](elem x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  os << '}';
  return os.str();
}

[[noreturn]] inline void invariant_failed(std::string const& what, Witness w = {}) {
  throw error(ErrorKind::InternalInvariant, what, std::move(w));
}

}  // namespace detail

/// Cauchy with its construction log. Returns the smallest-index non-unit
/// h in H with h^p = 1, which has order exactly p.
inline CauchyResult cauchy_with_trace(Group const& g, ElemSet const& h, std::uint64_t p,
                                      std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  require_subgroup(g, h, "H");
  require_prime(p);
  if (h.card() % p != 0) {
    throw error(ErrorKind::DoesNotDivide, "p does not divide card(H)",
                {{"p", static_cast<std::int64_t>(p)}, {"card_H", static_cast<std::int64_t>(h.card())}});
  }
  CauchyResult res;
  TupleCarrier tuples(g, h, p);
  auto const star = tuples.power_size(p - 1, max_tuple_carrier);

  if (star) {
    res.tuple_carrier = *star;
    auto const zp = detail::cyclic_group(p);
    std::size_t const s = *star;
    std::vector<elem> table(p * s);
    std::vector<elem> t(p), rotated(p);
    for (std::size_t idx = 0; idx < s; ++idx) {
      tuples.star_tuple(idx, t);
      for (std::size_t n = 0; n < p; ++n) {
        for (std::size_t i = 0; i < p; ++i) rotated[i] = t[(i + n) % p];
        table[n * s + idx] = static_cast<elem>(tuples.star_index(rotated));
      }
    }
    auto const act = make_action(zp, zp.full_set(), s, std::move(table));
    auto const fixed = fixed_points(act);
    res.fixed_points = fixed.card();
    auto const mpl = mpl_check(act, p);
    if (!mpl.pass) detail::invariant_failed("mpl fails on the rotation action", mpl.witness);
    if (res.fixed_points % p != 0) {
      detail::invariant_failed("card(S0) is not a multiple of p", {{"card_S0", static_cast<std::int64_t>(res.fixed_points)}});
    }
    elem best = static_cast<elem>(g.order());
    fixed.for_each([&](elem idx) {
      tuples.star_tuple(idx, t);
      for (std::size_t i = 1; i < p; ++i)
        if (t[i] != t[0]) detail::invariant_failed("fixed tuple is not constant", {{"index", idx}});
      if (t[0] != g.unit()) best = std::min(best, t[0]);
    });
    if (best == g.order()) detail::invariant_failed("no non-unit constant tuple");
    res.element = best;
    std::ostringstream os;
    os << "cauchy: |H|=" << h.card() << " |H*|=" << s << " |S0|=" << res.fixed_points << " (" << s % p
       << " = " << res.fixed_points % p << " mod " << p << ") -> element " << best;
    res.trace.push_back(os.str());
  } else {
    res.constructive = false;
    elem found = static_cast<elem>(g.order());
    for (elem x : h.members()) {
      if (x != g.unit() && gexpn(g, x, p) == g.unit()) {
        found = x;
        break;
      }
    }
    if (found == g.order()) detail::invariant_failed("no element of order p");
    res.element = found;
    std::ostringstream os;
    os << "cauchy: |H|=" << h.card() << " |H|^(p-1) exceeds cap " << max_tuple_carrier
       << "; fallback order search -> element " << found;
    res.trace.push_back(os.str());
  }
  if (order(g, res.element) != p) {
    detail::invariant_failed("Cauchy element does not have order p", {{"element", res.element}});
  }
  return res;
}

/// An element of H of order exactly p.
inline elem cauchy(Group const& g, ElemSet const& h, std::uint64_t p,
                   std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  return cauchy_with_trace(g, h, p, max_tuple_carrier).element;
}

/// subgroup H, H inside K, card(H) = p^dlogn(p, card K).
inline bool is_sylow(Group const& g, ElemSet const& k, std::uint64_t p, ElemSet const& h) {
  require_prime(p);
  if (h.carrier_size() != k.carrier_size()) return false;
  return is_subgroup(g, h) && subset(h, k) && h.card() == expn(p, dlogn(p, k.card()));
}

struct SylowCertificate {
  ElemSet subgroup;
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<ElemSet> chain;  ///< H_1 < H_2 < ... < H_n, card(H_i) = p^i
  std::vector<std::string> trace;
};

namespace detail {

inline ElemSet sylow1_step(Group const& g, ElemSet const& k, std::uint64_t p, ElemSet const& hi, unsigned i,
                           std::size_t cap, std::vector<std::string>* trace) {
  require_subgroup(g, k, "K");
  require_prime(p);
  unsigned const n = dlogn(p, k.card());
  if (!(0 < i && i < n)) {
    throw error(ErrorKind::PreconditionViolation, "need 0 < i < dlogn(p, card K)", {{"i", i}, {"n", n}});
  }
  require_subgroup(g, hi, "H_i");
  require_subset(hi, k, "H_i must be contained in K");
  if (hi.card() != expn(p, i)) {
    throw error(ErrorKind::PreconditionViolation, "card(H_i) must be p^i",
                {{"card", static_cast<std::int64_t>(hi.card())}, {"i", i}});
  }

  auto const act = left_translation_action(g, hi, hi, k);
  auto const s0 = fixed_points(act);
  if (auto const v = mpl_check(act, p); !v.pass) invariant_failed("mpl fails on coset translation", v.witness);

  auto const norm = normaliser(g, hi, k);
  auto const idx_norm = lindex(g, hi, norm);
  if (s0.card() != idx_norm) {
    invariant_failed("card(S0) != lindex(H_i, N)",
                     {{"card_S0", static_cast<std::int64_t>(s0.card())}, {"lindex", static_cast<std::int64_t>(idx_norm)}});
  }
  s0.for_each([&](elem z) {
    if (!norm.contains(act.labels()[z])) invariant_failed("fixed coset outside the normaliser", {{"root", act.labels()[z]}});
  });
  if (s0.card() % p != 0) invariant_failed("p does not divide card(S0)", {{"card_S0", static_cast<std::int64_t>(s0.card())}});

  auto const q = quotient_group(g, hi, norm);
  auto const c = cauchy_with_trace(q.group(), q.group().full_set(), p, cap);
  auto const l1 = cyclic(q.group(), c.element);
  auto const next = preimage_subgroup(q, l1);

  if (!is_subgroup(g, next)) invariant_failed("lifted set is not a subgroup");
  if (next.card() != expn(p, i + 1)) invariant_failed("lifted subgroup has wrong order", {{"card", static_cast<std::int64_t>(next.card())}});
  if (!subset(hi, next) || !subset(next, k)) invariant_failed("lifted subgroup is not between H_i and K");
  if (!is_normal(g, hi, next)) invariant_failed("H_i is not normal in the lifted subgroup");

  if (trace) {
    std::ostringstream os;
    os << "step " << i << ": |H_i|=" << hi.card() << " cosets=" << act.points() << " |S0|=" << s0.card()
       << " |N|=" << norm.card() << " |N/H_i|=" << q.order() << " quotient element " << c.element
       << " (root " << q.root_of(c.element) << ")" << (c.constructive ? "" : " [fallback]") << " -> |H_"
       << (i + 1) << "|=" << next.card();
    trace->push_back(os.str());
  }
  return next;
}

}  // namespace detail

/// One inductive step: from H_i of order p^i inside K to H of order p^(i+1)
/// with H_i normal in H and H inside K.
inline ElemSet sylow1_rec(Group const& g, ElemSet const& k, std::uint64_t p, ElemSet const& hi, unsigned i,
                          std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  return detail::sylow1_step(g, k, p, hi, i, max_tuple_carrier, nullptr);
}

/// A Sylow p-subgroup of K built from Cauchy upward, with its chain and log.
inline SylowCertificate sylow1(Group const& g, ElemSet const& k, std::uint64_t p,
                               std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  require_subgroup(g, k, "K");
  require_prime(p);
  unsigned const n = dlogn(p, k.card());
  if (n == 0) {
    throw error(ErrorKind::PDoesNotDivide, "p does not divide card(K)",
                {{"p", static_cast<std::int64_t>(p)}, {"card_K", static_cast<std::int64_t>(k.card())}});
  }
  SylowCertificate cert;
  cert.p = p;
  cert.n = n;
  auto const c = cauchy_with_trace(g, k, p, max_tuple_carrier);
  cert.trace = c.trace;
  ElemSet h = cyclic(g, c.element);
  cert.trace.push_back("base: cyclic(" + std::to_string(c.element) + ") order " + std::to_string(h.card()));
  cert.chain.push_back(h);
  for (unsigned i = 1; i < n; ++i) {
    h = detail::sylow1_step(g, k, p, h, i, max_tuple_carrier, &cert.trace);
    cert.chain.push_back(h);
  }
  if (!is_sylow(g, k, p, h)) detail::invariant_failed("sylow1 result is not Sylow");
  cert.subgroup = std::move(h);
  return cert;
}

/// For a p-subgroup H of K and a Sylow p-subgroup L, some x in K with H
/// contained in xLx^-1 (equal when H is Sylow too). x is the root of the
/// smallest-index coset xL fixed by H.
inline elem sylow2(Group const& g, ElemSet const& k, std::uint64_t p, ElemSet const& h, ElemSet const& l) {
  require_subgroup(g, k, "K");
  require_prime(p);
  require_subgroup(g, h, "H");
  require_subset(h, k, "H must be contained in K");
  if (!is_power_of(p, h.card()) || dlogn(p, h.card()) > dlogn(p, k.card())) {
    throw error(ErrorKind::PreconditionViolation, "H must be a p-subgroup of K", {{"card_H", static_cast<std::int64_t>(h.card())}});
  }
  if (!is_sylow(g, k, p, l)) throw error(ErrorKind::PreconditionViolation, "L must be a Sylow p-subgroup of K");

  auto const act = left_translation_action(g, h, l, k);
  auto const s0 = fixed_points(act);
  if (auto const v = mpl_check(act, p); !v.pass) detail::invariant_failed("mpl fails on coset translation", v.witness);
  if (s0.card() % p == 0) detail::invariant_failed("card(S0) is a multiple of p", {{"card_S0", static_cast<std::int64_t>(s0.card())}});

  elem const x = act.labels()[s0.first()];
  auto const conj = conjsg(g, l, x);
  if (!subset(h, conj)) detail::invariant_failed("H not contained in xLx^-1", {{"x", x}});
  if (h.card() == l.card() && h != conj) detail::invariant_failed("H != xLx^-1 for Sylow H", {{"x", x}});
  return x;
}

/// The distinct conjugates xHx^-1, x in K, sorted.
inline std::vector<ElemSet> conjugates_in(Group const& g, ElemSet const& h, ElemSet const& k) {
  std::vector<ElemSet> out;
  k.for_each([&](elem x) { out.push_back(conjsg(g, h, x)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All Sylow p-subgroups of K: the conjugation orbit of sylow1's subgroup.
inline std::vector<ElemSet> syset(Group const& g, ElemSet const& k, std::uint64_t p,
                                  std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  return conjugates_in(g, sylow1(g, k, p, max_tuple_carrier).subgroup, k);
}

/// |syset| divides card(K), re-derived from the conjugation action of K on
/// syset: one orbit whose size is the index of a stabiliser.
inline Verdicts sylow3_div_check(Group const& g, ElemSet const& k, std::uint64_t p,
                                 std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  auto const sy = syset(g, k, p, max_tuple_carrier);
  auto const act = conjugation_action_on_subsets(g, k, sy);
  auto const orb = orbit(act, 0);
  auto const stab = stabiliser(act, 0);
  auto const count = static_cast<std::int64_t>(sy.size());
  auto const ck = static_cast<std::int64_t>(k.card());
  return {equality("syset_single_orbit", static_cast<std::int64_t>(orb.card()), count),
          equality("syset_card_orbit", count, static_cast<std::int64_t>(lindex(g, stab, k))),
          equality("sylow3_div", ck % count, 0, {{"card_syset", count}, {"card_K", ck}})};
}

/// |syset| = 1 mod p, re-derived from the conjugation action of a Sylow
/// subgroup H on syset: its only fixed point is H itself, then mpl.
inline Verdicts sylow3_mod_check(Group const& g, ElemSet const& k, std::uint64_t p,
                                 std::size_t max_tuple_carrier = max_tuple_carrier_from_env()) {
  auto const h = sylow1(g, k, p, max_tuple_carrier).subgroup;
  auto const sy = conjugates_in(g, h, k);
  auto const act = conjugation_action_on_subsets(g, h, sy);
  auto const s0 = fixed_points(act);
  auto const h_index = static_cast<elem>(std::find(sy.begin(), sy.end(), h) - sy.begin());

  Verdicts out;
  out.push_back(holds("sylow3_S0_is_H", s0 == ElemSet::singleton(sy.size(), h_index),
                      {{"card_S0", static_cast<std::int64_t>(s0.card())}}));
  Witness restrict_fail;
  unsigned const n = dlogn(p, k.card());
  s0.for_each([&](elem z) {
    auto const norm = normaliser(g, sy[z], k);
    if (dlogn(p, norm.card()) != n || !is_sylow(g, norm, p, h) || !is_sylow(g, norm, p, sy[z])) {
      if (restrict_fail.empty()) restrict_fail = {{"index", z}, {"card_N", static_cast<std::int64_t>(norm.card())}};
    }
  });
  out.push_back(holds("sylow_subset", restrict_fail.empty(), restrict_fail));
  out.push_back(mpl_check(act, p));
  auto const count = static_cast<std::int64_t>(sy.size());
  auto const pp = static_cast<std::int64_t>(p);
  out.push_back(equality("sylow3_mod", count % pp, 1, {{"card_syset", count}, {"p", pp}}));
  return out;
}

}  // namespace sylowkit
