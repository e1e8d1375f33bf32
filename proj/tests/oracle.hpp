// Brute-force reference computations used only by the tests. Nothing here
// calls into the algorithms it is used to check.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "camina/group.hpp"

namespace oracle {

using camina::Element;
using camina::Group;

using ElementSet = std::vector<Element>;  // sorted

inline bool conjugate(const Group& G, Element a, Element b) {
  for (Element h = 0; h < G.order(); ++h)
    if (G.mul(G.mul(h, a), G.inv(h)) == b) return true;
  return false;
}

/// Class sizes by pairwise conjugacy tests, sorted ascending.
inline std::vector<std::size_t> class_sizes(const Group& G) {
  const auto n = G.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (Element a = 0; a < n; ++a) {
    if (label[a] >= 0) continue;
    label[a] = next;
    for (Element b = a + 1; b < n; ++b)
      if (label[b] < 0 && conjugate(G, a, b)) label[b] = next;
    ++next;
  }
  std::vector<std::size_t> sizes(next, 0);
  for (auto l : label) ++sizes[l];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Closure by repeated squaring of the set until it stops growing.
inline ElementSet closure(const Group& G, ElementSet s) {
  s.push_back(0);
  std::set<Element> cur(s.begin(), s.end());
  while (true) {
    std::set<Element> next = cur;
    for (auto a : cur)
      for (auto b : cur) next.insert(G.mul(a, b));
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return ElementSet(cur.begin(), cur.end());
}

inline bool is_subgroup(const Group& G, const ElementSet& s) {
  if (s.empty() || s.front() != 0) return false;
  std::set<Element> in(s.begin(), s.end());
  for (auto a : s)
    for (auto b : s)
      if (!in.count(G.mul(a, b))) return false;
  return true;
}

inline bool is_normal(const Group& G, const ElementSet& s) {
  std::set<Element> in(s.begin(), s.end());
  for (Element g = 0; g < G.order(); ++g)
    for (auto x : s)
      if (!in.count(G.mul(G.mul(g, x), G.inv(g)))) return false;
  return true;
}

/// All normal subgroups by testing every subset of the conjugacy classes.
/// Only for groups with few classes.
inline std::vector<ElementSet> normal_subgroups_by_class_unions(const Group& G) {
  const auto n = G.order();
  std::vector<int> label(n, -1);
  std::vector<ElementSet> classes;
  for (Element a = 0; a < n; ++a) {
    if (label[a] >= 0) continue;
    ElementSet c;
    for (Element b = 0; b < n; ++b)
      if (conjugate(G, a, b)) {
        label[b] = static_cast<int>(classes.size());
        c.push_back(b);
      }
    classes.push_back(c);
  }
  const std::size_t r = classes.size();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); mask += 2) {  // class of 0 always in
    ElementSet s;
    for (std::size_t c = 0; c < r; ++c)
      if (mask >> c & 1) s.insert(s.end(), classes[c].begin(), classes[c].end());
    std::sort(s.begin(), s.end());
    if (G.order() % s.size() == 0 && is_subgroup(G, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline bool is_p_power(std::size_t n, std::size_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Largest normal subgroup whose order satisfies pred.
template <class Pred>
inline ElementSet largest_normal(const Group& G, Pred pred) {
  ElementSet best{0};
  for (const auto& N : normal_subgroups_by_class_unions(G))
    if (pred(N.size()) && N.size() > best.size()) best = N;
  return best;
}

/// Preimage under G -> G/K of the largest normal subgroup of G/K (tested
/// via cosets) satisfying pred on |M/K|.
template <class Pred>
inline ElementSet preimage_of_largest(const Group& G, const ElementSet& K, Pred pred) {
  ElementSet best = K;
  for (const auto& M : normal_subgroups_by_class_unions(G)) {
    if (!std::includes(M.begin(), M.end(), K.begin(), K.end())) continue;
    if (pred(M.size() / K.size()) && M.size() > best.size()) best = M;
  }
  return best;
}

/// <chi, psi> computed in floating point from per-element complex values.
inline std::complex<double> inner(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s / static_cast<double>(a.size());
}

/// Class-sum structure constants over the group's own class ordering:
/// a[i][j][k] = #{(x, y) in C_i x C_j : xy = z_k} for a fixed z_k in C_k.
inline std::vector<std::vector<std::vector<std::int64_t>>> structure_constants(const Group& G) {
  const auto& cc = G.classes();
  const std::size_t r = cc.count();
  std::vector<std::vector<std::vector<std::int64_t>>> a(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const Element z = cc.representative[k];
        for (auto x : cc.members[i])
          for (auto y : cc.members[j])
            if (G.mul(x, y) == z) ++a[i][j][k];
      }
  return a;
}

inline bool is_kernel_element(const std::vector<std::complex<double>>& chi, std::size_t g) {
  return std::abs(chi[g] - chi[0]) < 1e-9;
}

}  // namespace oracle
