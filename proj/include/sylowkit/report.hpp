#pragma once

// Machine-readable reports. JSON layout:
//   { "group": str, "order": int,
//     "checks": [ { "name", "status": "pass"|"fail", "lhs", "rhs", "witness": obj|null, "ms" } ],
//     "certificates": [ { "kind": "sylow"|"cauchy", "p", "n", "elements": [int], "trace": [str] } ] }
// Everything except the "ms" timing fields is a pure function of the inputs.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sylowkit/verdict.hpp"

namespace sylowkit {

struct CheckEntry {
  Verdict verdict;
  double ms = 0.0;
};

struct Certificate {
  std::string kind;  // "sylow" | "cauchy"
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<elem> elements;
  std::vector<std::string> trace;
};

struct Report {
  std::string group;
  std::size_t order = 0;
  std::vector<CheckEntry> checks;
  std::vector<Certificate> certificates;
  /// Command-specific payload (orbit partition, quotient table), emitted after
  /// the standard fields.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  /// Human-readable headline lines for text output.
  std::vector<std::string> summary;

  [[nodiscard]] bool all_pass() const {
    for (auto const& c : checks)
      if (!c.verdict.pass) return false;
    return true;
  }

  void add(Verdict v, double ms = 0.0) { checks.push_back({std::move(v), ms}); }

  void add(Verdicts const& vs, std::string const& context, double ms = 0.0) {
    for (auto v : vs) {
      if (!context.empty()) v.name += "(" + context + ")";
      add(std::move(v), ms / static_cast<double>(vs.empty() ? 1 : vs.size()));
    }
  }

  /// Runs f() -> Verdicts, timing it, and records the results under `context`.
  template <typename F>
  void timed(std::string const& context, F&& f) {
    auto const t0 = std::chrono::steady_clock::now();
    Verdicts vs = f();
    auto const t1 = std::chrono::steady_clock::now();
    add(vs, context, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
};

inline nlohmann::ordered_json to_json(Value const& v) {
  if (auto const* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<std::string>(v);
}

inline nlohmann::ordered_json to_json(Report const& r, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  auto checks = nlohmann::ordered_json::array();
  for (auto const& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.verdict.name;
    e["status"] = c.verdict.pass ? "pass" : "fail";
    e["lhs"] = to_json(c.verdict.lhs);
    e["rhs"] = to_json(c.verdict.rhs);
    if (c.verdict.witness.empty()) {
      e["witness"] = nullptr;
    } else {
      nlohmann::ordered_json w;
      for (auto const& [k, v] : c.verdict.witness) w[k] = v;
      e["witness"] = w;
    }
    if (with_timing) e["ms"] = c.ms;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  auto certs = nlohmann::ordered_json::array();
  for (auto const& c : r.certificates) {
    nlohmann::ordered_json e;
    e["kind"] = c.kind;
    e["p"] = c.p;
    e["n"] = c.n;
    e["elements"] = c.elements;
    e["trace"] = c.trace;
    certs.push_back(std::move(e));
  }
  j["certificates"] = std::move(certs);
  for (auto const& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

inline std::string value_str(Value const& v) {
  if (auto const* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

inline void print_text(std::ostream& os, Report const& r) {
  os << "group " << r.group << " (order " << r.order << ")\n";
  for (auto const& line : r.summary) os << line << '\n';
  std::size_t failed = 0;
  for (auto const& c : r.checks) {
    auto const& v = c.verdict;
    if (!v.pass) ++failed;
    os << (v.pass ? "  pass  " : "  FAIL  ") << v.name << "  " << value_str(v.lhs) << " = " << value_str(v.rhs);
    if (!v.witness.empty()) {
      os << "  witness:";
      for (auto const& [k, x] : v.witness) os << ' ' << k << '=' << x;
    }
    os << '\n';
  }
  for (auto const& c : r.certificates) {
    os << c.kind << " certificate p=" << c.p << " n=" << c.n << " |elements|=" << c.elements.size() << " {";
    for (std::size_t i = 0; i < c.elements.size(); ++i) os << (i ? "," : "") << c.elements[i];
    os << "}\n";
    for (auto const& t : c.trace) os << "    " << t << '\n';
  }
  os << r.checks.size() - failed << '/' << r.checks.size() << " checks passed\n";
}

}  // namespace sylowkit
