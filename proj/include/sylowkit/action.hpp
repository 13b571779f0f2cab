#pragma once

/**
 * @file action.hpp
 * @brief Validated group actions, orbits, stabilisers, fixed points and the
 *        mod-p counting lemma.
 *
 * An action is tabulated over all of G x S, but only the acting subgroup H is
 * constrained: to(x, .) must be a bijection of S for every x in H and
 * to(xy, z) = to(x, to(y, z)) for x, y in H. Rows for x outside H are
 * unconstrained.
 */

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sylowkit/carrier.hpp"
#include "sylowkit/conjnormal.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/number.hpp"
#include "sylowkit/subgroup.hpp"
#include "sylowkit/verdict.hpp"

namespace sylowkit {

class Action {
 public:
  [[nodiscard]] Group const& group() const noexcept { return group_; }
  [[nodiscard]] ElemSet const& acting() const noexcept { return acting_; }
  [[nodiscard]] std::size_t points() const noexcept { return points_; }
  [[nodiscard]] elem to(elem x, elem z) const noexcept { return table_[std::size_t{x} * points_ + z]; }

  /// Optional per-point label, e.g. the coset root a point stands for.
  [[nodiscard]] std::vector<elem> const& labels() const noexcept { return labels_; }

  friend Action make_action(Group const& g, ElemSet const& h, std::size_t points, std::vector<elem> table,
                            std::vector<elem> labels);

 private:
  Action(Group g, ElemSet h, std::size_t points, std::vector<elem> table, std::vector<elem> labels)
      : group_(std::move(g)), acting_(std::move(h)), points_(points), table_(std::move(table)),
        labels_(std::move(labels)) {}

  Group group_;
  ElemSet acting_;
  std::size_t points_;
  std::vector<elem> table_;
  std::vector<elem> labels_;
};

/// Validates a tabulated action (row-major, entry [x*points + z] = to(x, z)).
/// Throws NotBijective(x) or NotMorphism(x, y, z) for the first violation.
inline Action make_action(Group const& g, ElemSet const& h, std::size_t points, std::vector<elem> table,
                          std::vector<elem> labels = {}) {
  require_subgroup(g, h, "acting set");
  if (points == 0) throw error(ErrorKind::PreconditionViolation, "action needs at least one point");
  if (table.size() != g.order() * points) {
    throw error(ErrorKind::PreconditionViolation, "action table must cover G x S",
                {{"entries", static_cast<std::int64_t>(table.size())},
                 {"expected", static_cast<std::int64_t>(g.order() * points)}});
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= points) {
      throw error(ErrorKind::OutOfRange, "action maps outside the point set",
                  {{"x", static_cast<std::int64_t>(k / points)}, {"z", static_cast<std::int64_t>(k % points)}});
    }
  }
  auto const at = [&](elem x, elem z) { return table[std::size_t{x} * points + z]; };
  auto const hm = h.members();

  std::vector<char> hit(points);
  for (elem x : hm) {
    std::fill(hit.begin(), hit.end(), 0);
    for (elem z = 0; z < points; ++z) {
      if (hit[at(x, z)]) throw error(ErrorKind::NotBijective, "to(x, .) is not a bijection", {{"x", x}});
      hit[at(x, z)] = 1;
    }
  }
  for (elem x : hm) {
    for (elem y : hm) {
      elem const xy = g.mul(x, y);
      for (elem z = 0; z < points; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          throw error(ErrorKind::NotMorphism, "to(xy, z) != to(x, to(y, z))", {{"x", x}, {"y", y}, {"z", z}});
        }
      }
    }
  }
  for (elem z = 0; z < points; ++z) {
    if (at(g.unit(), z) != z) {
      throw error(ErrorKind::NotMorphism, "to(1, z) != z", {{"x", g.unit()}, {"y", g.unit()}, {"z", z}});
    }
  }
  return Action(g, h, points, std::move(table), std::move(labels));
}

/// Tabulates `to` over G x S and validates it.
template <typename F>
  requires std::invocable<F, elem, elem>
Action make_action(Group const& g, ElemSet const& h, std::size_t points, F&& to, std::vector<elem> labels = {}) {
  std::vector<elem> table(g.order() * points);
  for (elem x = 0; x < g.order(); ++x)
    for (elem z = 0; z < points; ++z) table[std::size_t{x} * points + z] = static_cast<elem>(to(x, z));
  return make_action(g, h, points, std::move(table), std::move(labels));
}

/// { to(x, a) : x in H }.
inline ElemSet orbit(Action const& a, elem z) {
  ElemSet out(a.points());
  a.acting().for_each([&](elem x) { out.insert(a.to(x, z)); });
  return out;
}

/// { x in H : to(x, a) = a }.
inline ElemSet stabiliser(Action const& a, elem z) {
  ElemSet out(a.group().order());
  a.acting().for_each([&](elem x) {
    if (a.to(x, z) == z) out.insert(x);
  });
  return out;
}

/// S0: the points every element of H fixes.
inline ElemSet fixed_points(Action const& a) {
  ElemSet out = ElemSet::full(a.points());
  a.acting().for_each([&](elem x) {
    for (elem z = 0; z < a.points(); ++z)
      if (a.to(x, z) != z) out.erase(z);
  });
  return out;
}

/// card(orbit a) = lindex(stabiliser a, H), and card(orbit a) | card(H).
inline Verdicts orbit_stabilizer_check(Action const& a, elem z) {
  auto const co = static_cast<std::int64_t>(orbit(a, z).card());
  auto const idx = static_cast<std::int64_t>(lindex(a.group(), stabiliser(a, z), a.acting()));
  auto const ch = static_cast<std::int64_t>(a.acting().card());
  return {equality("card_orbit", co, idx, {{"point", z}}),
          equality("card_orbit_div", ch % co, 0, {{"point", z}, {"card_orbit", co}, {"card_H", ch}})};
}

/// card(S) mod p = card(S0) mod p, for H of order p^alpha.
inline Verdict mpl_check(Action const& a, std::uint64_t p) {
  require_prime(p);
  auto const ch = a.acting().card();
  if (!is_power_of(p, ch)) {
    throw error(ErrorKind::NotPPower, "acting subgroup order is not a power of p",
                {{"card_H", static_cast<std::int64_t>(ch)}, {"p", static_cast<std::int64_t>(p)}});
  }
  auto const s = static_cast<std::int64_t>(a.points());
  auto const s0 = static_cast<std::int64_t>(fixed_points(a).card());
  auto const pp = static_cast<std::int64_t>(p);
  return equality("mpl", s % pp, s0 % pp, {{"card_S", s}, {"card_S0", s0}, {"p", pp}});
}

/// H acting on the left cosets of L in K by x . yL = (xy)L. Points are the
/// coset roots in increasing order; labels() holds the roots. Rows of x whose
/// translate leaves K act as the identity (they are outside the constrained
/// subgroup anyway).
inline Action left_translation_action(Group const& g, ElemSet const& h, ElemSet const& l, ElemSet const& k) {
  require_subgroup(g, h, "H");
  require_subgroup(g, l, "L");
  require_subgroup(g, k, "K");
  require_subset(h, k, "H must be contained in K");
  require_subset(l, k, "L must be contained in K");
  auto const root = lcoset_root_table(g, l);
  std::vector<elem> roots;
  std::vector<elem> index_of(g.order(), static_cast<elem>(g.order()));
  k.for_each([&](elem x) {
    if (root[x] == x) {
      index_of[x] = static_cast<elem>(roots.size());
      roots.push_back(x);
    }
  });
  std::size_t const s = roots.size();
  std::vector<elem> table(g.order() * s);
  for (elem x = 0; x < g.order(); ++x) {
    for (elem z = 0; z < s; ++z) {
      elem const target = index_of[root[g.mul(x, roots[z])]];
      table[std::size_t{x} * s + z] = target < s ? target : z;
    }
  }
  return make_action(g, h, s, std::move(table), std::move(roots));
}

/// H acting on its own group by conjugation, x . y = x y x^-1.
inline Action conjugation_action(Group const& g, ElemSet const& h) {
  return make_action(g, h, g.order(), [&](elem x, elem y) { return conjg(g, g.inv(x), y); });
}

/// H acting on a family of subsets by L -> x L x^-1. The family must be closed
/// under conjugation by H (FamilyNotClosed otherwise); rows for x outside H
/// fall back to the identity where the conjugate leaves the family.
inline Action conjugation_action_on_subsets(Group const& g, ElemSet const& h, std::vector<ElemSet> const& family) {
  require_subgroup(g, h, "H");
  std::size_t const s = family.size();
  auto const find = [&](ElemSet const& c) -> std::size_t {
    for (std::size_t i = 0; i < s; ++i)
      if (family[i] == c) return i;
    return s;
  };
  std::vector<elem> table(g.order() * s);
  for (elem x = 0; x < g.order(); ++x) {
    for (elem i = 0; i < s; ++i) {
      auto const j = find(conjsg(g, family[i], x));
      if (j == s && h.contains(x)) {
        throw error(ErrorKind::FamilyNotClosed, "conjugate leaves the family", {{"x", x}, {"index", i}});
      }
      table[std::size_t{x} * s + i] = static_cast<elem>(j < s ? j : i);
    }
  }
  return make_action(g, h, s, std::move(table));
}

/// The orbit partition as a list of orbits, ordered by smallest member.
inline std::vector<ElemSet> orbit_partition(Action const& a) {
  std::vector<ElemSet> out;
  ElemSet seen(a.points());
  for (elem z = 0; z < a.points(); ++z) {
    if (seen.contains(z)) continue;
    auto o = orbit(a, z);
    seen |= o;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace sylowkit
