#pragma once

/**
 * @file subgroup.hpp
 * @brief Subgroups as indicator sets: the subgroup predicate, generated
 *        closure, cosets, the left index and Lagrange's theorem.
 *
 * Cosets are canonically represented by their minimum-index member. The index
 * lindex(H, K) is obtained by counting those representatives inside K; it is
 * never computed as card(K) / card(H), so that Lagrange stays a checkable
 * statement rather than a tautology.
 */

#include <deque>
#include <span>
#include <string>
#include <vector>

#include "sylowkit/carrier.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/verdict.hpp"

namespace sylowkit {

/// H(1) and, for all x, y in H, y x^-1 in H (i.e. H is contained in every Hx).
inline bool is_subgroup(Group const& g, ElemSet const& h) {
  if (h.carrier_size() != g.order() || !h.contains(g.unit())) return false;
  auto const members = h.members();
  for (elem x : members) {
    elem const xi = g.inv(x);
    for (elem y : members) {
      if (!h.contains(g.mul(y, xi))) return false;
    }
  }
  return true;
}

/// Smallest set containing the unit and `gens` that is closed under
/// left multiplication by the generators. In a finite group this is the
/// generated subgroup.
inline ElemSet closure(Group const& g, std::span<elem const> gens) {
  ElemSet out = g.trivial_set();
  std::vector<elem> frontier{g.unit()};
  frontier.reserve(g.order());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    elem const x = frontier[i];
    for (elem s : gens) {
      elem const y = g.mul(s, x);
      if (!out.contains(y)) {
        out.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

inline ElemSet closure(Group const& g, std::initializer_list<elem> gens) {
  return closure(g, std::span<elem const>(gens.begin(), gens.size()));
}

/// aH = { x : a^-1 x in H }.
inline ElemSet lcoset(Group const& g, ElemSet const& h, elem a) {
  elem const ai = g.inv(a);
  ElemSet out(g.order());
  for (elem x = 0; x < g.order(); ++x)
    if (h.contains(g.mul(ai, x))) out.insert(x);
  return out;
}

/// Ha = { x : x a^-1 in H }.
inline ElemSet rcoset(Group const& g, ElemSet const& h, elem a) {
  elem const ai = g.inv(a);
  ElemSet out(g.order());
  for (elem x = 0; x < g.order(); ++x)
    if (h.contains(g.mul(x, ai))) out.insert(x);
  return out;
}

/// The left-coset relation as a binary predicate: y in xH.
inline auto lcoset_relation(Group const& g, ElemSet const& h) {
  return [&g, &h](elem x, elem y) { return h.contains(g.mul(g.inv(x), y)); };
}

inline auto rcoset_relation(Group const& g, ElemSet const& h) {
  return [&g, &h](elem x, elem y) { return h.contains(g.mul(y, g.inv(x))); };
}

/// root(lcoset H, x): the minimum member of xH for a subgroup H.
inline elem lcoset_root(Group const& g, ElemSet const& h, elem x) {
  elem best = g.mul(x, g.unit());
  h.for_each([&](elem k) { best = std::min(best, g.mul(x, k)); });
  return best;
}

/// lcoset_root for every point of the group at once.
inline std::vector<elem> lcoset_root_table(Group const& g, ElemSet const& h) {
  std::vector<elem> roots(g.order(), static_cast<elem>(g.order()));
  auto const hm = h.members();
  for (elem x = 0; x < g.order(); ++x) {
    if (roots[x] != g.order()) continue;
    elem best = x;
    for (elem k : hm) best = std::min(best, g.mul(x, k));
    for (elem k : hm) roots[g.mul(x, k)] = best;
  }
  return roots;
}

/// The canonical left-coset representatives of H that lie in K.
inline ElemSet lcoset_roots(Group const& g, ElemSet const& h, ElemSet const& k) {
  auto const roots = lcoset_root_table(g, h);
  ElemSet out(g.order());
  k.for_each([&](elem x) { out.insert(roots[x]); });
  return out;
}

inline void require_subgroup(Group const& g, ElemSet const& h, char const* what) {
  if (!is_subgroup(g, h)) {
    throw error(ErrorKind::InvalidSubgroup, std::string(what) + " is not a subgroup",
                {{"card", static_cast<std::int64_t>(h.card())}});
  }
}

inline void require_subset(ElemSet const& a, ElemSet const& b, char const* what) {
  if (!subset(a, b)) {
    ElemSet const extra = a - b;
    throw error(ErrorKind::InvalidSubgroup, std::string(what), {{"x", extra.first()}});
  }
}

/// Number of distinct left cosets of H that meet K.
inline std::size_t lindex(Group const& g, ElemSet const& h, ElemSet const& k) {
  require_subgroup(g, h, "H");
  require_subgroup(g, k, "K");
  require_subset(h, k, "H must be contained in K");
  return lcoset_roots(g, h, k).card();
}

/// Number of distinct right cosets of H that meet K.
inline std::size_t rindex(Group const& g, ElemSet const& h, ElemSet const& k) {
  require_subgroup(g, h, "H");
  require_subgroup(g, k, "K");
  require_subset(h, k, "H must be contained in K");
  ElemSet roots(g.order());
  auto const hm = h.members();
  k.for_each([&](elem x) {
    elem best = x;
    for (elem y : hm) best = std::min(best, g.mul(y, x));
    roots.insert(best);
  });
  return roots.card();
}

/// card(H) * lindex(H, K) = card(K), plus card(H) | card(K).
inline Verdicts lagrange_check(Group const& g, ElemSet const& h, ElemSet const& k) {
  auto const ch = static_cast<std::int64_t>(h.card());
  auto const ck = static_cast<std::int64_t>(k.card());
  auto const idx = static_cast<std::int64_t>(lindex(g, h, k));
  return {equality("lLaGrange", ch * idx, ck, {{"card_H", ch}, {"lindex", idx}}),
          equality("sugrp_divn", ck % ch, 0, {{"card_H", ch}, {"card_K", ck}})};
}

/// Right-coset version: card(H) * rindex(H, K) = card(K).
inline Verdict rlagrange_check(Group const& g, ElemSet const& h, ElemSet const& k) {
  auto const ch = static_cast<std::int64_t>(h.card());
  auto const idx = static_cast<std::int64_t>(rindex(g, h, k));
  return equality("rLaGrange", ch * idx, static_cast<std::int64_t>(k.card()), {{"card_H", ch}, {"rindex", idx}});
}

/// HK = { h k : h in H, k in K }.
inline ElemSet set_product(Group const& g, ElemSet const& h, ElemSet const& k) {
  ElemSet out(g.order());
  auto const km = k.members();
  h.for_each([&](elem x) {
    for (elem y : km) out.insert(g.mul(x, y));
  });
  return out;
}

/// For subgroups H, K: HK is a subgroup iff HK = KH, and subgrp(HK) = subgrp(KH).
inline Verdicts product_subgroup_check(Group const& g, ElemSet const& h, ElemSet const& k) {
  auto const hk = set_product(g, h, k);
  auto const kh = set_product(g, k, h);
  bool const hk_sub = is_subgroup(g, hk);
  bool const kh_sub = is_subgroup(g, kh);
  bool const commute = hk == kh;
  return {holds("subprod_sbgrp", !hk_sub || commute, {{"card_HK", static_cast<std::int64_t>(hk.card())}}),
          holds("sbgrp_subprod", !commute || hk_sub, {{"card_HK", static_cast<std::int64_t>(hk.card())}}),
          holds("sbgrphk_sbgrpkh", hk_sub == kh_sub,
                {{"HK_subgroup", hk_sub ? 1 : 0}, {"KH_subgroup", kh_sub ? 1 : 0}})};
}

/// Subgroups generated by every single element and every pair of elements of K,
/// deduplicated and sorted.
inline std::vector<ElemSet> generated_subgroup_sample(Group const& g, ElemSet const& k) {
  std::vector<ElemSet> out;
  auto const km = k.members();
  for (std::size_t i = 0; i < km.size(); ++i) {
    out.push_back(closure(g, {km[i]}));
    for (std::size_t j = i + 1; j < km.size(); ++j) out.push_back(closure(g, {km[i], km[j]}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sylowkit
