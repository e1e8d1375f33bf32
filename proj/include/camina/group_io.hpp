#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "camina/error.hpp"
#include "camina/group.hpp"

namespace camina {

/// Group files are line oriented; '#' starts a comment. Two formats:
///
///   cayley <n>            perm <degree>
///   label <name>          label <name>
///   <n rows of n ids>     <one generator per line in cycle notation>
///
/// The label line is optional. Permutation points are 1..degree; the group
/// is the closure of the generators, with elements numbered in BFS order.
struct LoadOptions {
  std::size_t max_order = 4096;
};

namespace detail {

struct Lines {
  std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, content)

  explicit Lines(std::istream& in) {
    std::string s;
    std::size_t no = 0;
    while (std::getline(in, s)) {
      ++no;
      if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = s.find_last_not_of(" \t\r");
      lines.emplace_back(no, s.substr(b, e - b + 1));
    }
  }
};

inline std::size_t parse_count(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a nonnegative integer, got '" + token + "'", line);
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range: " + token, line);
  }
}

// Product of cycles written left to right, applied right to left as functions.
inline std::vector<std::uint32_t> parse_cycles(const std::string& text, std::size_t degree, std::size_t line) {
  std::vector<std::uint32_t> perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", line);
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unterminated cycle", line);
    std::istringstream items(text.substr(i + 1, close - i - 1));
    std::vector<std::uint32_t> cycle;
    std::string tok;
    while (items >> tok) {
      const auto pt = parse_count(tok, line);
      if (pt == 0 || pt > degree) throw ParseError("point " + tok + " outside 1.." + std::to_string(degree), line);
      for (auto c : cycle)
        if (c == pt - 1) throw ParseError("point " + tok + " repeated in a cycle", line);
      cycle.push_back(static_cast<std::uint32_t>(pt - 1));
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint32_t> c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = static_cast<std::uint32_t>(x);
    for (std::size_t k = 0; k < it->size(); ++k) c[(*it)[k]] = (*it)[(k + 1) % it->size()];
    std::vector<std::uint32_t> next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = c[perm[x]];
    perm = std::move(next);
  }
  return perm;
}

inline Group closure_of_permutations(const std::vector<std::vector<std::uint32_t>>& gens, std::size_t degree,
                                     std::string label, std::size_t max_order) {
  std::vector<std::uint32_t> id(degree);
  for (std::size_t x = 0; x < degree; ++x) id[x] = static_cast<std::uint32_t>(x);
  std::vector<std::vector<std::uint32_t>> elems{id};
  std::map<std::vector<std::uint32_t>, Element> index{{id, 0}};
  auto compose = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto y = compose(elems[i], g);
      if (index.count(y)) continue;
      if (elems.size() == max_order)
        throw BoundExceeded("permutation closure exceeds order bound " + std::to_string(max_order));
      index.emplace(y, static_cast<Element>(elems.size()));
      elems.push_back(std::move(y));
    }
  return Group::from_operation(
      elems.size(), [&](Element a, Element b) { return index.at(compose(elems[a], elems[b])); }, std::move(label));
}

}  // namespace detail

inline Group read_group(std::istream& in, const std::string& default_label = "G", const LoadOptions& opts = {}) {
  const detail::Lines src(in);
  if (src.lines.empty()) throw ParseError("empty group file", 1);
  std::istringstream head(src.lines[0].second);
  std::string kind, count, extra;
  head >> kind >> count;
  const auto head_line = src.lines[0].first;
  if ((kind != "cayley" && kind != "perm") || count.empty() || (head >> extra))
    throw ParseError("header must be 'cayley <n>' or 'perm <degree>'", head_line);
  const auto n = detail::parse_count(count, head_line);
  if (n == 0) throw ParseError("size must be positive", head_line);

  std::size_t at = 1;
  std::string label = default_label;
  if (at < src.lines.size() && src.lines[at].second.rfind("label", 0) == 0) {
    const auto& s = src.lines[at].second;
    if (s.size() > 5 && s[5] != ' ' && s[5] != '\t') throw ParseError("malformed label line", src.lines[at].first);
    label = s.size() > 6 ? s.substr(6) : std::string{};
    if (label.empty()) throw ParseError("empty label", src.lines[at].first);
    ++at;
  }

  if (kind == "perm") {
    std::vector<std::vector<std::uint32_t>> gens;
    for (; at < src.lines.size(); ++at) gens.push_back(detail::parse_cycles(src.lines[at].second, n, src.lines[at].first));
    return detail::closure_of_permutations(gens, n, std::move(label), opts.max_order);
  }

  if (n > opts.max_order) throw BoundExceeded("cayley table exceeds order bound " + std::to_string(opts.max_order));
  if (src.lines.size() - at != n)
    throw ParseError("expected " + std::to_string(n) + " table rows, found " + std::to_string(src.lines.size() - at),
                     src.lines.back().first);
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r, ++at) {
    std::istringstream row(src.lines[at].second);
    std::string tok;
    std::size_t cols = 0;
    while (row >> tok) {
      const auto v = detail::parse_count(tok, src.lines[at].first);
      if (v >= n) throw ParseError("entry " + tok + " out of range", src.lines[at].first);
      table.push_back(static_cast<Element>(v));
      ++cols;
    }
    if (cols != n)
      throw ParseError("row has " + std::to_string(cols) + " entries, expected " + std::to_string(n), src.lines[at].first);
  }
  try {
    return Group::from_table(std::move(table), n, std::move(label));
  } catch (const InvalidGroup& e) {
    throw ParseError(std::string("not a group: ") + e.what(), head_line);
  }
}

inline void write_group(std::ostream& out, const Group& G) {
  const auto n = G.order();
  out << "cayley " << n << '\n';
  if (!G.label().empty()) out << "label " << G.label() << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << G.mul(a, b);
    out << '\n';
  }
}

/// Matrices over GF(p), one per line, n*n entries in row-major order.
inline std::vector<std::vector<std::uint32_t>> read_matrices(std::istream& in, std::uint32_t p, std::uint32_t n) {
  const detail::Lines src(in);
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& [no, text] : src.lines) {
    std::istringstream row(text);
    std::vector<std::uint32_t> m;
    std::string tok;
    while (row >> tok) {
      const auto v = detail::parse_count(tok, no);
      if (v >= p) throw ParseError("entry " + tok + " is not reduced mod " + std::to_string(p), no);
      m.push_back(static_cast<std::uint32_t>(v));
    }
    if (m.size() != static_cast<std::size_t>(n) * n)
      throw ParseError("matrix has " + std::to_string(m.size()) + " entries, expected " + std::to_string(n * n), no);
    out.push_back(std::move(m));
  }
  return out;
}

inline Group load_group(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  auto stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return read_group(in, stem.empty() ? "G" : stem, opts);
}

inline void save_group(const Group& G, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_group(out, G);
}

}  // namespace camina
