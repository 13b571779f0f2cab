#pragma once

// Fixtures shared by the unit suites.

#include <string>
#include <vector>

#include "sylowkit/catalog.hpp"
#include "sylowkit/group.hpp"

namespace fixtures {

using sylowkit::elem;
using sylowkit::ElemSet;
using sylowkit::Group;

inline Group make(std::string const& ref) { return sylowkit::build(sylowkit::parse_group_ref(ref)); }

// S3 in lexicographic rank order: 0=e, 1=(12), 2=(01), 3=(012), 4=(021), 5=(02).
namespace s3 {
inline constexpr elem e = 0, t12 = 1, t01 = 2, c3a = 3, c3b = 4, t02 = 5;
}

inline ElemSet set(Group const& g, std::initializer_list<elem> xs) { return ElemSet::of(g.order(), xs); }

/// Catalog groups small enough for the exhaustive per-test sweeps.
inline std::vector<std::string> small_catalog() {
  std::vector<std::string> out;
  for (auto const& ref : sylowkit::standard_catalog())
    if (make(ref).order() <= 24) out.push_back(ref);
  return out;
}

}  // namespace fixtures
