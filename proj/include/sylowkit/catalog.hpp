#pragma once

/**
 * @file catalog.hpp
 * @brief Concrete groups: cyclic, dihedral, symmetric, Q8, direct products and
 *        Cayley-table files, plus the textual group-ref grammar used by the CLI.
 *
 * Enumeration conventions:
 *  - cyclic(n): 0..n-1, mul = addition mod n.
 *  - dihedral(n): order 2n; r^i is index i, s r^i is index n+i, with s r = r^-1 s.
 *  - symmetric(n): permutations of 0..n-1 in lexicographic rank order;
 *    mul(p, q) = p o q, i.e. q is applied first.
 *  - q8: 1, -1, i, -i, j, -j, k, -k.
 *  - product(A, B): pair (a, b) is index a*|B| + b.
 */

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

#include "sylowkit/cayley_io.hpp"
#include "sylowkit/error.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/permutation.hpp"

namespace sylowkit {

inline constexpr std::size_t max_symmetric_degree = 6;

struct GroupSpec;

namespace spec {
struct Cyclic { std::size_t n; };
struct Dihedral { std::size_t n; };
struct Symmetric { std::size_t n; };
struct Quaternion8 {};
struct Product {
  std::shared_ptr<GroupSpec const> left;
  std::shared_ptr<GroupSpec const> right;
};
struct CayleyFile { std::filesystem::path path; };
}  // namespace spec

struct GroupSpec {
  std::variant<spec::Cyclic, spec::Dihedral, spec::Symmetric, spec::Quaternion8, spec::Product, spec::CayleyFile> v;

  static GroupSpec cyclic(std::size_t n) { return {spec::Cyclic{n}}; }
  static GroupSpec dihedral(std::size_t n) { return {spec::Dihedral{n}}; }
  static GroupSpec symmetric(std::size_t n) { return {spec::Symmetric{n}}; }
  static GroupSpec quaternion8() { return {spec::Quaternion8{}}; }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    return {spec::Product{std::make_shared<GroupSpec const>(std::move(a)),
                          std::make_shared<GroupSpec const>(std::move(b))}};
  }
  static GroupSpec cayley_file(std::filesystem::path p) { return {spec::CayleyFile{std::move(p)}}; }
};

namespace detail {

inline void require_positive(std::size_t n, char const* what) {
  if (n == 0) throw error(ErrorKind::Unsupported, std::string(what) + " parameter must be positive");
}

inline Group cyclic_group(std::size_t n) {
  require_positive(n, "cyclic");
  std::vector<elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<elem>((i + j) % n);
  return Group::from_table_unvalidated(n, std::move(t));
}

inline Group dihedral_group(std::size_t n) {
  require_positive(n, "dihedral");
  std::size_t const m = 2 * n;
  std::vector<elem> t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t const i = a % n, j = b % n;
      bool const sa = a >= n, sb = b >= n;
      std::size_t r;
      if (!sa && !sb) r = (i + j) % n;                // r^i r^j
      else if (!sa && sb) r = n + (j + n - i) % n;    // r^i s r^j = s r^(j-i)
      else if (sa && !sb) r = n + (i + j) % n;        // s r^i r^j
      else r = (j + n - i) % n;                       // s r^i s r^j = r^(j-i)
      t[a * m + b] = static_cast<elem>(r);
    }
  }
  return Group::from_table_unvalidated(m, std::move(t));
}

inline Group symmetric_group(std::size_t n) {
  require_positive(n, "symmetric");
  if (n > max_symmetric_degree) {
    throw error(ErrorKind::Unsupported, "symmetric(n) supports n <= 6", {{"n", static_cast<std::int64_t>(n)}});
  }
  auto const perms = perm::all(n);
  std::size_t const m = perms.size();
  std::vector<elem> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<elem>(perm::rank(perm::compose(perms[a], perms[b])));
  return Group::from_table_unvalidated(m, std::move(t));
}

inline Group quaternion8_group() {
  // unit u in {1,i,j,k} = {0,1,2,3}; element index 2u + negative.
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<elem> t(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int const ua = a / 2, ub = b / 2;
      int sign = sign_mul[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      t[static_cast<std::size_t>(a * 8 + b)] = static_cast<elem>(2 * unit_mul[ua][ub] + (sign < 0 ? 1 : 0));
    }
  }
  return Group::from_table_unvalidated(8, std::move(t));
}

inline Group product_group(Group const& a, Group const& b) {
  std::size_t const na = a.order(), nb = b.order(), m = na * nb;
  std::vector<elem> t(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      auto const l = a.mul(static_cast<elem>(x / nb), static_cast<elem>(y / nb));
      auto const r = b.mul(static_cast<elem>(x % nb), static_cast<elem>(y % nb));
      t[x * m + y] = static_cast<elem>(l * nb + r);
    }
  return Group::from_table_unvalidated(m, std::move(t));
}

}  // namespace detail

inline Group build(GroupSpec const& s) {
  return std::visit(
      [](auto const& v) -> Group {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) return detail::cyclic_group(v.n);
        else if constexpr (std::is_same_v<T, spec::Dihedral>) return detail::dihedral_group(v.n);
        else if constexpr (std::is_same_v<T, spec::Symmetric>) return detail::symmetric_group(v.n);
        else if constexpr (std::is_same_v<T, spec::Quaternion8>) return detail::quaternion8_group();
        else if constexpr (std::is_same_v<T, spec::Product>) return detail::product_group(build(*v.left), build(*v.right));
        else return parse_cayley_file(v.path);
      },
      s.v);
}

inline std::string describe(GroupSpec const& s) {
  return std::visit(
      [](auto const& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) return "cyclic:" + std::to_string(v.n);
        else if constexpr (std::is_same_v<T, spec::Dihedral>) return "dihedral:" + std::to_string(v.n);
        else if constexpr (std::is_same_v<T, spec::Symmetric>) return "symmetric:" + std::to_string(v.n);
        else if constexpr (std::is_same_v<T, spec::Quaternion8>) return "q8";
        else if constexpr (std::is_same_v<T, spec::Product>) return "product:(" + describe(*v.left) + "," + describe(*v.right) + ")";
        else return v.path.string();
      },
      s.v);
}

namespace detail {

class RefParser {
 public:
  explicit RefParser(std::string_view s) : s_(s) {}

  GroupSpec parse_all() {
    auto g = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  GroupSpec parse() {
    auto const word = ident();
    if (word == "product") {
      expect(':');
      expect('(');
      auto a = parse();
      expect(',');
      auto b = parse();
      expect(')');
      return GroupSpec::product(std::move(a), std::move(b));
    }
    if (word == "q8") return GroupSpec::quaternion8();
    if (word == "cyclic" || word == "dihedral" || word == "symmetric") {
      expect(':');
      auto const n = number();
      if (word == "cyclic") return GroupSpec::cyclic(n);
      if (word == "dihedral") return GroupSpec::dihedral(n);
      return GroupSpec::symmetric(n);
    }
    // Short aliases: sN = symmetric:N, zN = cyclic:N, dN = dihedral:N.
    if (word.size() >= 2 && (word[0] == 's' || word[0] == 'z' || word[0] == 'd') && all_digits(word.substr(1))) {
      auto const n = std::stoul(std::string(word.substr(1)));
      if (word[0] == 's') return GroupSpec::symmetric(n);
      if (word[0] == 'z') return GroupSpec::cyclic(n);
      return GroupSpec::dihedral(n);
    }
    fail("unknown group '" + std::string(word) + "'");
  }

  static bool all_digits(std::string_view w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  std::string_view ident() {
    auto const start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a group name");
    return s_.substr(start, pos_ - start);
  }

  std::size_t number() {
    auto const start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(std::string const& msg) const {
    throw error(ErrorKind::ParseError, "group ref '" + std::string(s_) + "': " + msg,
                {{"line", 1}, {"col", static_cast<std::int64_t>(pos_ + 1)}});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Resolves `cyclic:n`, `dihedral:n`, `symmetric:n`, `q8`, `product:(a,b)`,
/// the aliases sN/zN/dN, or else an existing file path.
inline GroupSpec parse_group_ref(std::string_view ref) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::filesystem::path(ref), ec)) return GroupSpec::cayley_file(std::filesystem::path(ref));
  return detail::RefParser(ref).parse_all();
}

/// The builtin catalog: the refs `catalog` lists and the acceptance suite sweeps.
inline std::vector<std::string> standard_catalog() {
  std::vector<std::string> refs;
  for (int n = 1; n <= 24; ++n) refs.push_back("cyclic:" + std::to_string(n));
  for (int n = 1; n <= 12; ++n) refs.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) refs.push_back("symmetric:" + std::to_string(n));
  refs.emplace_back("q8");
  for (char const* p : {
           "product:(cyclic:2,cyclic:2)", "product:(cyclic:2,cyclic:3)", "product:(cyclic:2,cyclic:4)",
           "product:(cyclic:3,cyclic:3)", "product:(cyclic:2,cyclic:6)", "product:(cyclic:4,cyclic:4)",
           "product:(cyclic:2,product:(cyclic:2,cyclic:2))", "product:(cyclic:2,symmetric:3)",
           "product:(cyclic:3,symmetric:3)", "product:(cyclic:4,symmetric:3)", "product:(symmetric:3,symmetric:3)",
           "product:(cyclic:2,q8)", "product:(cyclic:3,q8)", "product:(cyclic:2,dihedral:4)",
           "product:(dihedral:4,cyclic:3)", "product:(cyclic:2,dihedral:6)", "product:(cyclic:2,symmetric:4)",
           "product:(q8,symmetric:3)"}) {
    refs.emplace_back(p);
  }
  return refs;
}

}  // namespace sylowkit
