#pragma once

/**
 * @file conjnormal.hpp
 * @brief Conjugation, normality, normalisers and quotient groups.
 *
 * Convention: y^x = x^-1 y x, and conjsg(H, x) = { y : y^x in H } = x H x^-1.
 */

#include <string>
#include <utility>
#include <vector>

#include "sylowkit/carrier.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/subgroup.hpp"
#include "sylowkit/verdict.hpp"

namespace sylowkit {

/// y^x = x^-1 y x.
inline elem conjg(Group const& g, elem x, elem y) { return g.mul(g.inv(x), y, x); }

/// x H x^-1 = { y : x^-1 y x in H }.
inline ElemSet conjsg(Group const& g, ElemSet const& h, elem x) {
  ElemSet out(g.order());
  for (elem y = 0; y < g.order(); ++y)
    if (h.contains(conjg(g, x, y))) out.insert(y);
  return out;
}

/// For every x in K, H is contained in x H x^-1.
inline bool is_normal(Group const& g, ElemSet const& h, ElemSet const& k) {
  auto const hm = h.members();
  bool ok = true;
  k.for_each([&](elem x) {
    if (!ok) return;
    for (elem y : hm) {
      if (!h.contains(conjg(g, x, y))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

/// { x in K : x H x^-1 agrees with H on every z in K }.
inline ElemSet normaliser(Group const& g, ElemSet const& h, ElemSet const& k) {
  require_subgroup(g, h, "H");
  require_subgroup(g, k, "K");
  require_subset(h, k, "H must be contained in K");
  auto const km = k.members();
  ElemSet out(g.order());
  for (elem x : km) {
    bool stable = true;
    for (elem z : km) {
      if (h.contains(conjg(g, x, z)) != h.contains(z)) {
        stable = false;
        break;
      }
    }
    if (stable) out.insert(x);
  }
  return out;
}

/// K/H realised on the canonical left-coset representatives of H inside K.
/// Quotient element q corresponds to the base point root_of(q); roots are
/// enumerated in increasing base index.
class QuotientGroup {
 public:
  [[nodiscard]] Group const& base() const noexcept { return base_; }
  [[nodiscard]] ElemSet const& normal_sub() const noexcept { return h_; }
  [[nodiscard]] ElemSet const& ambient() const noexcept { return k_; }
  [[nodiscard]] Group const& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t order() const noexcept { return group_.order(); }

  /// The base-group root representing quotient element q.
  [[nodiscard]] elem root_of(elem q) const { return roots_.at(q); }
  [[nodiscard]] std::vector<elem> const& roots() const noexcept { return roots_; }

  /// Quotient homomorphism K -> K/H; x must lie in K.
  [[nodiscard]] elem proj(elem x) const {
    if (!k_.contains(x)) throw error(ErrorKind::OutOfRange, "proj is defined on K only", {{"x", x}});
    return proj_[x];
  }

  friend QuotientGroup quotient_group(Group const& g, ElemSet const& h, ElemSet const& k);

 private:
  QuotientGroup(Group base, ElemSet h, ElemSet k, std::vector<elem> roots, std::vector<elem> proj, Group group)
      : base_(std::move(base)), h_(std::move(h)), k_(std::move(k)), roots_(std::move(roots)),
        proj_(std::move(proj)), group_(std::move(group)) {}

  Group base_;
  ElemSet h_;
  ElemSet k_;
  std::vector<elem> roots_;
  std::vector<elem> proj_;
  Group group_;
};

/// Builds K/H with mult(a, b) = root(ab), inv(a) = root(a^-1), and runs the
/// full group validator on the resulting table.
inline QuotientGroup quotient_group(Group const& g, ElemSet const& h, ElemSet const& k) {
  require_subgroup(g, h, "H");
  require_subgroup(g, k, "K");
  require_subset(h, k, "H must be contained in K");
  if (!is_normal(g, h, k)) throw error(ErrorKind::NotNormal, "H is not normal in K");

  auto const root = lcoset_root_table(g, h);
  std::vector<elem> roots;
  std::vector<elem> proj(g.order(), static_cast<elem>(g.order()));
  std::vector<elem> index_of(g.order(), static_cast<elem>(g.order()));
  k.for_each([&](elem x) {
    if (root[x] == x) {
      index_of[x] = static_cast<elem>(roots.size());
      roots.push_back(x);
    }
  });
  k.for_each([&](elem x) { proj[x] = index_of[root[x]]; });

  std::size_t const m = roots.size();
  std::vector<elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = index_of[root[g.mul(roots[a], roots[b])]];

  auto quotient = Group::from_cayley_table(m, table);
  if (quotient.unit() != index_of[root[g.unit()]]) {
    throw error(ErrorKind::InternalInvariant, "quotient unit is not the coset of 1");
  }
  for (elem a = 0; a < m; ++a) {
    if (quotient.inv(a) != index_of[root[g.inv(roots[a])]]) {
      throw error(ErrorKind::InternalInvariant, "quotient inverse is not the coset of the inverse", {{"q", a}});
    }
  }
  return QuotientGroup(g, h, k, std::move(roots), std::move(proj), std::move(quotient));
}

/// proj(xy) = proj(x) proj(y) on K, proj(h) = 1 on H, and proj(x) in xH.
inline Verdicts quotient_morphism_check(QuotientGroup const& q) {
  auto const& g = q.base();
  auto const km = q.ambient().members();
  Witness morph, one, coset;
  for (elem x : km) {
    for (elem y : km) {
      if (q.proj(g.mul(x, y)) != q.group().mul(q.proj(x), q.proj(y))) {
        morph = {{"x", x}, {"y", y}};
        break;
      }
    }
    if (!morph.empty()) break;
  }
  q.normal_sub().for_each([&](elem h) {
    if (one.empty() && q.proj(h) != q.group().unit()) one = {{"h", h}};
  });
  for (elem x : km) {
    if (!q.normal_sub().contains(g.mul(g.inv(x), q.root_of(q.proj(x))))) {
      coset = {{"x", x}};
      break;
    }
  }
  return {holds("quotient_morph", morph.empty(), morph), holds("quotient1", one.empty(), one),
          holds("quotient_lcoset", coset.empty(), coset)};
}

/// proj(L) for H <= L <= K.
inline ElemSet image_subgroup(QuotientGroup const& q, ElemSet const& l) {
  auto const& g = q.base();
  require_subgroup(g, l, "L");
  require_subset(q.normal_sub(), l, "H must be contained in L");
  require_subset(l, q.ambient(), "L must be contained in K");
  return image([&](elem x) { return q.proj(x); }, l, q.order());
}

/// { x in K : proj(x) in L1 } for a subgroup L1 of the quotient.
inline ElemSet preimage_subgroup(QuotientGroup const& q, ElemSet const& l1) {
  require_subgroup(q.group(), l1, "L1");
  ElemSet out(q.base().order());
  q.ambient().for_each([&](elem x) {
    if (l1.contains(q.proj(x))) out.insert(x);
  });
  return out;
}

}  // namespace sylowkit
