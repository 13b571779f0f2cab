#pragma once

// Cayley table text format:
//   line 1       n
//   next n lines n whitespace-separated indices in [0, n); row i column j = i*j
// '#' comments run to end of line and blank lines are ignored.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sylowkit/error.hpp"
#include "sylowkit/group.hpp"

namespace sylowkit {

namespace detail {

struct Token {
  std::size_t line;
  std::size_t col;
  std::string_view text;
};

inline std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t const start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i > start) out.push_back({line_no, start + 1, line.substr(start, i - start)});
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t col, std::string const& msg) {
  throw error(ErrorKind::ParseError, msg,
              {{"line", static_cast<std::int64_t>(line)}, {"col", static_cast<std::int64_t>(col)}});
}

inline std::uint64_t parse_index(Token const& t) {
  std::uint64_t v = 0;
  auto const* first = t.text.data();
  auto const* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v, 10);
  if (ec != std::errc{} || ptr != last) parse_fail(t.line, t.col, "expected a base-10 index, got '" + std::string(t.text) + "'");
  return v;
}

}  // namespace detail

/// Parses Cayley-table text into a square table. Range and shape problems are
/// ParseErrors; group axioms are not checked here.
inline std::vector<std::vector<elem>> parse_cayley_rows(std::string_view text) {
  std::vector<std::vector<detail::Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const nl = text.find('\n', pos);
    auto const end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    auto toks = detail::tokenize_line(text.substr(pos, end - pos), line_no);
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) detail::parse_fail(line_no, 1, "missing order line");
  auto const& header = lines.front();
  if (header.size() != 1) detail::parse_fail(header[1].line, header[1].col, "order line must hold a single integer");
  auto const n = detail::parse_index(header[0]);
  if (n == 0) detail::parse_fail(header[0].line, header[0].col, "order must be positive");
  if (n > 100000) detail::parse_fail(header[0].line, header[0].col, "order too large");
  if (lines.size() - 1 < n) detail::parse_fail(line_no, 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  if (lines.size() - 1 > n) {
    auto const& extra = lines[n + 1].front();
    detail::parse_fail(extra.line, extra.col, "unexpected data after " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<elem>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto const& toks = lines[i + 1];
    if (toks.size() != n) {
      auto const& t = toks.size() > n ? toks[n] : toks.back();
      detail::parse_fail(t.line, t.col, "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
    }
    rows[i].reserve(n);
    for (auto const& t : toks) {
      auto const v = detail::parse_index(t);
      if (v >= n) detail::parse_fail(t.line, t.col, "entry " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
      rows[i].push_back(static_cast<elem>(v));
    }
  }
  return rows;
}

inline Group parse_cayley_text(std::string_view text) {
  return Group::from_cayley_table(parse_cayley_rows(text));
}

inline Group parse_cayley_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw error(ErrorKind::ParseError, "cannot open " + path.string(), {{"line", 0}, {"col", 0}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_cayley_text(ss.str());
}

inline std::string write_cayley(Group const& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (elem x = 0; x < g.order(); ++x) {
    auto const r = g.row(x);
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << '\n';
  }
  return os.str();
}

}  // namespace sylowkit
