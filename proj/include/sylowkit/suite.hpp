#pragma once

/**
 * @file suite.hpp
 * @brief Report builders behind the `grp` commands: the full theorem suite
 *        (`verify`) and the single-purpose sylow / cauchy / orbits / quotient
 *        reports.
 *
 * Subgroups are addressed by generator lists and materialised by closure. The
 * verify suite draws its subgroups from every single generator and every pair
 * of generators.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sylowkit/action.hpp"
#include "sylowkit/carrier.hpp"
#include "sylowkit/conjnormal.hpp"
#include "sylowkit/cyclic.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/oracle.hpp"
#include "sylowkit/report.hpp"
#include "sylowkit/subgroup.hpp"
#include "sylowkit/sylow.hpp"

namespace sylowkit {

struct SuiteOptions {
  bool oracle = false;
  std::uint64_t phi_bound = 100;
  std::size_t max_tuple_carrier = max_tuple_carrier_from_env();
};

/// A subgroup together with the generators it was first produced from.
struct LabeledSubgroup {
  ElemSet set;
  std::vector<elem> gens;

  [[nodiscard]] std::string label() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::to_string(gens[i]);
    return s + ">";
  }
};

/// Subgroups of K generated by one or two elements, deduplicated, in set order.
inline std::vector<LabeledSubgroup> subgroup_catalog(Group const& g, ElemSet const& k) {
  std::map<ElemSet, std::vector<elem>> found;
  auto const km = k.members();
  for (elem a : km) found.try_emplace(closure(g, {a}), std::vector<elem>{a});
  for (std::size_t i = 0; i < km.size(); ++i)
    for (std::size_t j = i + 1; j < km.size(); ++j)
      found.try_emplace(closure(g, {km[i], km[j]}), std::vector<elem>{km[i], km[j]});
  std::vector<LabeledSubgroup> out;
  for (auto& [s, gens] : found) out.push_back({s, gens});
  return out;
}

/// Parses "3,5" (or an empty string) into a generator list on a group of order n.
inline std::vector<elem> parse_gens(std::string_view text, std::size_t n) {
  std::vector<elem> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto const tok = text.substr(pos, comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw error(ErrorKind::ParseError, "bad generator list '" + std::string(text) + "'",
                  {{"line", 1}, {"col", static_cast<std::int64_t>(pos + 1)}});
    }
    auto const v = std::stoull(std::string(tok));
    if (v >= n) {
      throw error(ErrorKind::OutOfRange, "generator outside the group",
                  {{"generator", static_cast<std::int64_t>(v)}, {"order", static_cast<std::int64_t>(n)}});
    }
    out.push_back(static_cast<elem>(v));
    pos = comma + 1;
  }
  return out;
}

namespace detail {

inline std::string p_ctx(std::uint64_t p) { return "p=" + std::to_string(p); }

/// Collapses the per-point orbit-stabiliser verdicts of one action into one entry.
inline Verdict orbit_stabilizer_all(std::string name, Action const& act) {
  std::int64_t ok = 0;
  for (elem z = 0; z < act.points(); ++z) {
    auto const vs = orbit_stabilizer_check(act, z);
    if (!all_pass(vs)) {
      auto const bad = std::find_if(vs.begin(), vs.end(), [](Verdict const& v) { return !v.pass; });
      Verdict v = *bad;
      v.name = std::move(name) + ":" + v.name;
      return v;
    }
    ++ok;
  }
  return equality(std::move(name), ok, static_cast<std::int64_t>(act.points()));
}

inline std::vector<elem> to_vec(ElemSet const& s) { return s.members(); }

inline bool p_power_order(ElemSet const& h, std::uint64_t& p) {
  auto const c = h.card();
  if (c < 2) return false;
  auto const ps = prime_divisors(c);
  if (ps.size() != 1) return false;
  p = ps.front();
  return true;
}

inline void action_checks(Report& r, std::string const& ctx, Action const& act) {
  auto const t0 = std::chrono::steady_clock::now();
  Verdicts vs{orbit_stabilizer_all("orbit_stabilizer_check", act)};
  std::uint64_t p = 0;
  if (p_power_order(act.acting(), p)) vs.push_back(mpl_check(act, p));
  auto const t1 = std::chrono::steady_clock::now();
  r.add(vs, ctx, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

inline void quotient_checks(Report& r, Group const& g, LabeledSubgroup const& h, ElemSet const& k,
                            std::vector<LabeledSubgroup> const& sample) {
  auto const ctx = "K/" + h.label();
  r.timed(ctx, [&] {
    Verdicts vs;
    auto const q = quotient_group(g, h.set, k);
    vs.push_back(equality("card_root_group", static_cast<std::int64_t>(q.order()),
                          static_cast<std::int64_t>(lindex(g, h.set, k))));
    append(vs, quotient_morphism_check(q));

    Witness idx_fail, pre_fail;
    for (auto const& l : sample) {
      if (!subset(h.set, l.set) || !subset(l.set, k)) continue;
      auto const img = image_subgroup(q, l.set);
      if (!is_subgroup(q.group(), img) || img.card() != lindex(g, h.set, l.set)) {
        if (idx_fail.empty()) idx_fail = {{"L_first_gen", l.gens.front()}, {"card_image", static_cast<std::int64_t>(img.card())}};
      }
      if (preimage_subgroup(q, img) != l.set && pre_fail.empty()) pre_fail = {{"L_first_gen", l.gens.front()}};
    }
    vs.push_back(holds("quotient_index", idx_fail.empty(), idx_fail));
    vs.push_back(holds("quotient_preimage_image", pre_fail.empty(), pre_fail));

    Witness ip_fail;
    for (auto const& l1 : subgroup_catalog(q.group(), q.group().full_set())) {
      auto const pre = preimage_subgroup(q, l1.set);
      bool ok = is_subgroup(g, pre) && subset(h.set, pre) && subset(pre, k) && image_subgroup(q, pre) == l1.set;
      if (!ok && ip_fail.empty()) ip_fail = {{"L1_first_gen", l1.gens.front()}};
    }
    vs.push_back(holds("quotient_image_preimage", ip_fail.empty(), ip_fail));
    return vs;
  });
}

inline void sylow_checks(Report& r, Group const& g, ElemSet const& k, std::uint64_t p, SuiteOptions const& opt,
                         bool with_pairs) {
  auto const ctx = p_ctx(p);
  auto const cres = cauchy_with_trace(g, k, p, opt.max_tuple_carrier);
  r.certificates.push_back({"cauchy", p, 1, to_vec(cyclic(g, cres.element)), cres.trace});
  r.timed(ctx, [&] {
    Verdicts vs{equality("cauchy", static_cast<std::int64_t>(order(g, cres.element)), static_cast<std::int64_t>(p),
                         {{"element", cres.element}})};
    if (opt.oracle) {
      vs.push_back(holds("cauchy_oracle", oracle::element_order(g, cres.element) == p &&
                                              oracle::first_element_of_order(g, p) < g.order()));
    }
    return vs;
  });

  auto const cert = sylow1(g, k, p, opt.max_tuple_carrier);
  r.certificates.push_back({"sylow", p, cert.n, to_vec(cert.subgroup), cert.trace});
  auto const sy = conjugates_in(g, cert.subgroup, k);
  r.timed(ctx, [&] {
    Verdicts vs{holds("sylow1", is_sylow(g, k, p, cert.subgroup))};
    Witness chain_fail;
    for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
      auto const& a = cert.chain[i];
      auto const& b = cert.chain[i + 1];
      if (b.card() != p * a.card() || !subset(a, b) || !is_normal(g, a, b)) {
        chain_fail = {{"step", static_cast<std::int64_t>(i + 1)}};
        break;
      }
    }
    vs.push_back(holds("sylow1_rec_chain", chain_fail.empty() && cert.chain.size() == cert.n, chain_fail));

    Witness conj_fail;
    k.for_each([&](elem x) {
      if (conj_fail.empty() && !is_sylow(g, k, p, conjsg(g, cert.subgroup, x))) conj_fail = {{"x", x}};
    });
    vs.push_back(holds("sylow_conjsg", conj_fail.empty(), conj_fail));
    if (opt.oracle) {
      auto const expected = oracle::sylow_subgroups(g, p);
      std::vector<oracle::Members> got;
      for (auto const& s : sy) got.push_back(s.members());
      vs.push_back(equality("syset_oracle", static_cast<std::int64_t>(sy.size()), static_cast<std::int64_t>(expected.size())));
      vs.push_back(holds("syset_oracle_sets", got == expected));
    }
    return vs;
  });

  if (with_pairs) {
    r.timed(ctx, [&] {
      std::int64_t ok = 0, total = 0;
      Witness fail;
      for (std::size_t i = 0; i < sy.size(); ++i) {
        for (std::size_t j = 0; j < sy.size(); ++j) {
          ++total;
          elem const x = sylow2(g, k, p, sy[j], sy[i]);
          if (k.contains(x) && conjsg(g, sy[i], x) == sy[j]) ++ok;
          else if (fail.empty()) fail = {{"L1", static_cast<std::int64_t>(i)}, {"L2", static_cast<std::int64_t>(j)}, {"x", x}};
        }
      }
      Verdict v = equality("sylow2_cor", ok, total, fail);
      return Verdicts{v};
    });
  }
  r.timed(ctx, [&] { return sylow3_div_check(g, k, p, opt.max_tuple_carrier); });
  r.timed(ctx, [&] { return sylow3_mod_check(g, k, p, opt.max_tuple_carrier); });
}

}  // namespace detail

/// The full theorem suite over one group.
inline Report verify(Group const& g, std::string name, SuiteOptions const& opt = {}) {
  Report r;
  r.group = std::move(name);
  r.order = g.order();
  auto const k = g.full_set();

  r.timed("", [&] {
    Verdicts vs;
    bool ok = true;
    try {
      (void)Group::from_cayley_table(g.order(), g.table());
    } catch (error const&) {
      ok = false;
    }
    vs.push_back(holds("axiom_roundtrip", ok));
    append(vs, check_identities(g));
    return vs;
  });

  auto const sample = subgroup_catalog(g, k);
  for (auto const& h : sample) {
    auto const ctx = "H=" + h.label();
    r.timed(ctx, [&] {
      Verdicts vs{holds("finstbl_sbgrp", is_subgroup(g, h.set))};
      append(vs, lagrange_check(g, h.set, k));
      vs.push_back(rlagrange_check(g, h.set, k));
      return vs;
    });
    detail::action_checks(r, "conj by " + h.label(), conjugation_action(g, h.set));
    if (is_normal(g, h.set, k)) detail::quotient_checks(r, g, h, k, sample);
  }
  for (auto const& h : sample)
    for (auto const& l : sample)
      detail::action_checks(r, h.label() + " on cosets of " + l.label(),
                            left_translation_action(g, h.set, l.set, k));

  r.timed("bound=" + std::to_string(opt.phi_bound), [&] {
    Verdicts vs = phi_theorem_checks(opt.phi_bound);
    if (opt.oracle) {
      Witness w;
      for (std::uint64_t n = 0; n <= opt.phi_bound && w.empty(); ++n)
        if (phi(n) != oracle::phi_by_gcd_count(n)) w = {{"n", static_cast<std::int64_t>(n)}};
      vs.push_back(holds("phi_oracle", w.empty(), w));
    }
    return vs;
  });

  for (auto p : prime_divisors(g.order())) detail::sylow_checks(r, g, k, p, opt, true);
  return r;
}

/// `sylow`: certificate, Sylow count and the Sylow 3 congruences for one prime.
inline Report sylow_report(Group const& g, std::string name, std::uint64_t p, SuiteOptions const& opt = {}) {
  Report r;
  r.group = std::move(name);
  r.order = g.order();
  auto const k = g.full_set();
  require_prime(p);
  detail::sylow_checks(r, g, k, p, opt, true);
  auto const cert = sylow1(g, k, p, opt.max_tuple_carrier);
  auto const sy = conjugates_in(g, cert.subgroup, k);
  std::ostringstream a, b, c;
  a << "Sylow " << p << "-subgroup of size " << cert.subgroup.card() << ": " << detail::set_str(cert.subgroup);
  b << "count " << sy.size();
  c << sy.size() << " ≡ " << sy.size() % p << " (mod " << p << "), " << sy.size() << " | " << g.order();
  r.summary = {a.str(), b.str(), c.str()};
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (auto const& s : sy) list.push_back(s.members());
  r.extra["sylow_subgroups"] = list;
  return r;
}

/// `cauchy`: the element of order p and its construction log.
inline Report cauchy_report(Group const& g, std::string name, std::uint64_t p, SuiteOptions const& opt = {}) {
  Report r;
  r.group = std::move(name);
  r.order = g.order();
  auto const res = cauchy_with_trace(g, g.full_set(), p, opt.max_tuple_carrier);
  auto const cyc = cyclic(g, res.element);
  r.certificates.push_back({"cauchy", p, 1, cyc.members(), res.trace});
  r.timed(detail::p_ctx(p), [&] {
    Verdicts vs{equality("cauchy", static_cast<std::int64_t>(order(g, res.element)), static_cast<std::int64_t>(p),
                         {{"element", res.element}})};
    if (res.constructive) {
      vs.push_back(equality("cauchy_S0_mod_p", static_cast<std::int64_t>(res.fixed_points % p), 0));
    }
    if (opt.oracle) {
      vs.push_back(equality("cauchy_oracle_order", static_cast<std::int64_t>(oracle::element_order(g, res.element)),
                            static_cast<std::int64_t>(p)));
    }
    return vs;
  });
  r.summary = {"element " + std::to_string(res.element) + ", order " + std::to_string(cyc.card()) +
               (res.constructive ? "" : " (fallback search)")};
  r.extra["element"] = res.element;
  return r;
}

/// Action grammar for `orbits`:
///   conj               G acting on itself by conjugation
///   conj:<gens>        <gens> acting on G by conjugation
///   ltrans:<h>/<l>     <h> acting on the left cosets of <l> by translation
///   sylow:<p>          G acting on its Sylow p-subgroups by conjugation
inline Action parse_action(Group const& g, std::string_view spec, SuiteOptions const& opt = {}) {
  auto const bad = [&](std::string const& msg) {
    return error(ErrorKind::ParseError, "action '" + std::string(spec) + "': " + msg, {{"line", 1}, {"col", 1}});
  };
  if (spec == "conj") return conjugation_action(g, g.full_set());
  if (spec.starts_with("conj:")) return conjugation_action(g, closure(g, parse_gens(spec.substr(5), g.order())));
  if (spec.starts_with("ltrans:")) {
    auto const rest = spec.substr(7);
    auto const slash = rest.find('/');
    if (slash == std::string_view::npos) throw bad("expected ltrans:<h gens>/<l gens>");
    auto const h = closure(g, parse_gens(rest.substr(0, slash), g.order()));
    auto const l = closure(g, parse_gens(rest.substr(slash + 1), g.order()));
    return left_translation_action(g, h, l, g.full_set());
  }
  if (spec.starts_with("sylow:")) {
    auto const digits = spec.substr(6);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw bad("expected sylow:<p>");
    auto const p = std::stoull(std::string(digits));
    auto const k = g.full_set();
    return conjugation_action_on_subsets(g, k, syset(g, k, p, opt.max_tuple_carrier));
  }
  throw bad("unknown action kind");
}

inline Report orbits_report(Group const& g, std::string name, std::string const& spec, SuiteOptions const& opt = {}) {
  Report r;
  r.group = std::move(name);
  r.order = g.order();
  auto const act = parse_action(g, spec, opt);
  auto const parts = orbit_partition(act);
  detail::action_checks(r, spec, act);
  auto const s0 = fixed_points(act);
  r.timed(spec, [&] {
    std::int64_t total = 0;
    for (auto const& o : parts) total += static_cast<std::int64_t>(o.card());
    Verdicts vs{equality("orbit_partition", total, static_cast<std::int64_t>(act.points()))};
    Witness w;
    for (elem z = 0; z < act.points(); ++z)
      if (s0.contains(z) != (orbit(act, z) == ElemSet::singleton(act.points(), z)) && w.empty()) w = {{"point", z}};
    vs.push_back(holds("S0P", w.empty(), w));
    if (opt.oracle) {
      // Union-find over the edges z -> to(x, z), x in H.
      std::vector<elem> parent(act.points());
      std::iota(parent.begin(), parent.end(), elem{0});
      auto find = [&](elem z) {
        while (parent[z] != z) z = parent[z] = parent[parent[z]];
        return z;
      };
      act.acting().for_each([&](elem x) {
        for (elem z = 0; z < act.points(); ++z) {
          auto const a = find(z), b = find(act.to(x, z));
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      });
      std::set<elem> classes;
      for (elem z = 0; z < act.points(); ++z) classes.insert(find(z));
      vs.push_back(equality("orbits_oracle", static_cast<std::int64_t>(parts.size()),
                            static_cast<std::int64_t>(classes.size())));
    }
    return vs;
  });
  nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
  for (auto const& o : parts) orbits.push_back(o.members());
  r.extra["points"] = act.points();
  if (!act.labels().empty()) r.extra["labels"] = act.labels();
  r.extra["orbits"] = orbits;
  r.extra["fixed_points"] = s0.members();
  std::ostringstream os;
  os << act.points() << " points, " << parts.size() << " orbits, " << s0.card() << " fixed";
  r.summary.push_back(os.str());
  for (auto const& o : parts) r.summary.push_back("  orbit " + detail::set_str(o));
  return r;
}

/// `quotient`: K/H for H = <gens> and K = <ambient> (the whole group when empty).
inline Report quotient_report(Group const& g, std::string name, std::vector<elem> const& gens,
                              std::vector<elem> const& ambient_gens = {}, SuiteOptions const& opt = {}) {
  Report r;
  r.group = std::move(name);
  r.order = g.order();
  auto const h = closure(g, gens);
  auto const k = ambient_gens.empty() ? g.full_set() : closure(g, ambient_gens);
  auto const q = quotient_group(g, h, k);
  r.timed("", [&] {
    Verdicts vs{equality("card_root_group", static_cast<std::int64_t>(q.order()),
                         static_cast<std::int64_t>(lindex(g, h, k)))};
    append(vs, quotient_morphism_check(q));
    if (opt.oracle) {
      std::set<std::vector<elem>> cosets;
      k.for_each([&](elem x) {
        std::vector<elem> c;
        h.for_each([&](elem y) { c.push_back(g.mul(x, y)); });
        std::sort(c.begin(), c.end());
        cosets.insert(c);
      });
      vs.push_back(equality("quotient_oracle_cosets", static_cast<std::int64_t>(q.order()),
                            static_cast<std::int64_t>(cosets.size())));
    }
    return vs;
  });
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  std::vector<std::size_t> orders;
  for (elem a = 0; a < q.order(); ++a) {
    auto const row = q.group().row(a);
    table.push_back(std::vector<elem>(row.begin(), row.end()));
    orders.push_back(order(q.group(), a));
  }
  r.extra["quotient"] = {{"order", q.order()}, {"roots", q.roots()}, {"element_orders", orders}, {"table", table}};
  r.summary.push_back("quotient of order " + std::to_string(q.order()) + " (|H|=" + std::to_string(h.card()) +
                      ", |K|=" + std::to_string(k.card()) + ")");
  std::ostringstream os;
  os << "roots " << detail::set_str(ElemSet::of(g.order(), std::span<elem const>(q.roots())));
  r.summary.push_back(os.str());
  for (elem a = 0; a < q.order(); ++a) {
    std::ostringstream line;
    line << "  ";
    for (elem b = 0; b < q.order(); ++b) line << (b ? " " : "") << q.group().mul(a, b);
    r.summary.push_back(line.str());
  }
  return r;
}

}  // namespace sylowkit
