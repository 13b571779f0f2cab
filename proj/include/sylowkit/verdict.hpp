#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sylowkit/error.hpp"

namespace sylowkit {

using Value = std::variant<std::int64_t, std::string>;

/// Outcome of one theorem check: both sides of the asserted equation and, on
/// failure, a concrete counterexample.
struct Verdict {
  std::string name;
  bool pass = true;
  Value lhs = std::int64_t{0};
  Value rhs = std::int64_t{0};
  Witness witness;

  explicit operator bool() const noexcept { return pass; }
};

using Verdicts = std::vector<Verdict>;

inline Verdict equality(std::string name, std::int64_t lhs, std::int64_t rhs, Witness on_fail = {}) {
  Verdict v{std::move(name), lhs == rhs, lhs, rhs, {}};
  if (!v.pass) {
    v.witness = std::move(on_fail);
    v.witness.emplace_back("lhs", lhs);
    v.witness.emplace_back("rhs", rhs);
  }
  return v;
}

inline Verdict holds(std::string name, bool ok, Witness on_fail = {}) {
  Verdict v{std::move(name), ok, std::string(ok ? "true" : "false"), std::string("true"), {}};
  if (!ok) {
    v.witness = std::move(on_fail);
    if (v.witness.empty()) v.witness.emplace_back("violated", 1);
  }
  return v;
}

inline bool all_pass(Verdicts const& vs) {
  return std::all_of(vs.begin(), vs.end(), [](Verdict const& v) { return v.pass; });
}

inline void append(Verdicts& into, Verdicts const& more) {
  into.insert(into.end(), more.begin(), more.end());
}

}  // namespace sylowkit
