#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "camina/finite_field.hpp"
#include "camina/group.hpp"
#include "camina/number_theory.hpp"

namespace camina {

inline Group cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic(0)");
  return Group::from_operation(n, [n](Element a, Element b) { return (a + b) % n; }, "C" + std::to_string(n));
}

/// Direct product; (a, b) has id a * |B| + b.
inline Group direct_product(const Group& A, const Group& B, std::string label = {}) {
  const auto nb = B.order();
  if (label.empty()) label = A.label() + "x" + B.label();
  return Group::from_operation(
      A.order() * nb,
      [&](Element x, Element y) { return A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb); },
      std::move(label));
}

/// Product of cyclic groups of the given orders.
inline Group abelian(const std::vector<std::size_t>& orders) {
  if (orders.empty()) return cyclic(1);
  Group G = cyclic(orders.front());
  std::string label = "C" + std::to_string(orders.front());
  for (std::size_t i = 1; i < orders.size(); ++i) {
    label += "xC" + std::to_string(orders[i]);
    G = direct_product(G, cyclic(orders[i]), label);
  }
  return G.with_label(label);
}

/// A x| B where action[b] is the automorphism of A (as a permutation of A's
/// ids) by which b acts. (a, b) has id b * |A| + a and
/// (a, b)(a', b') = (a * action[b](a'), b b').
inline Group semidirect_product(const Group& A, const Group& B, const std::vector<std::vector<Element>>& action,
                                std::string label = {}) {
  const auto na = A.order();
  const auto nb = B.order();
  if (action.size() != nb) throw InvalidAction("action table must have one automorphism per element of B");
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& f = action[b];
    if (f.size() != na) throw InvalidAction("automorphism table has wrong length");
    std::vector<std::uint8_t> hit(na, 0);
    for (auto x : f) {
      if (x >= na || hit[x]++) throw InvalidAction("action[" + std::to_string(b) + "] is not a permutation");
    }
    for (Element x = 0; x < na; ++x)
      for (Element y = 0; y < na; ++y)
        if (f[A.mul(x, y)] != A.mul(f[x], f[y]))
          throw InvalidAction("action[" + std::to_string(b) + "] is not an automorphism");
  }
  for (Element x = 0; x < na; ++x)
    if (action[0][x] != x) throw InvalidAction("identity of B must act trivially");
  for (Element b = 0; b < nb; ++b)
    for (Element c = 0; c < nb; ++c)
      for (Element x = 0; x < na; ++x)
        if (action[B.mul(b, c)][x] != action[b][action[c][x]])
          throw InvalidAction("action is not a homomorphism into Aut(A)");
  if (label.empty()) label = A.label() + ":" + B.label();
  return Group::from_operation(
      na * nb,
      [&](Element x, Element y) {
        const Element a = x % na, b = x / na, a2 = y % na, b2 = y / na;
        return B.mul(b, b2) * na + A.mul(a, action[b][a2]);
      },
      std::move(label));
}

/// Dihedral group of order 2n: r^i s^j has id i + n j.
inline Group dihedral(std::size_t n) {
  if (n == 0) throw InvalidGroup("dihedral(0)");
  return Group::from_operation(
      2 * n,
      [n](Element x, Element y) {
        const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
        const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
        return rot + n * ((j + l) % 2);
      },
      "D" + std::to_string(2 * n));
}

/// Generalized quaternion group of order 2^k, k >= 3: a^i b^j has id i + m j
/// with m = order/2, b^2 = a^(m/2), b a b^-1 = a^-1.
inline Group generalized_quaternion(std::size_t order) {
  const auto [p, k] = prime_power(order);
  if (p != 2 || k < 3) throw InvalidGroup("generalized_quaternion: order must be 2^k with k >= 3");
  const std::size_t m = order / 2;
  return Group::from_operation(
      order,
      [m](Element x, Element y) {
        const std::size_t i = x % m, j = x / m, kk = y % m, l = y / m;
        std::size_t rot = j == 0 ? (i + kk) % m : (i + m - kk) % m;
        std::size_t s = j + l;
        if (s == 2) {
          rot = (rot + m / 2) % m;
          s = 0;
        }
        return rot + m * s;
      },
      "Q" + std::to_string(order));
}

namespace detail {

inline Group permutation_group_from_list(std::vector<std::vector<std::uint32_t>> perms, std::string label) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<std::uint32_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Element>(i));
  const std::size_t deg = perms.front().size();
  return Group::from_operation(
      perms.size(),
      [&](Element a, Element b) {
        // (ab)(x) = a(b(x))
        std::vector<std::uint32_t> c(deg);
        for (std::size_t x = 0; x < deg; ++x) c[x] = perms[a][perms[b][x]];
        return index.at(c);
      },
      std::move(label));
}

inline bool is_even(const std::vector<std::uint32_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace detail

/// Symmetric group on n <= 5 points; permutations in lexicographic order.
inline Group sym(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidGroup("sym(n) supports 1 <= n <= 5");
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::permutation_group_from_list(std::move(all), "S" + std::to_string(n));
}

inline Group alt(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidGroup("alt(n) supports 1 <= n <= 5");
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> all;
  do
    if (detail::is_even(p)) all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::permutation_group_from_list(std::move(all), "A" + std::to_string(n));
}

/// A matrix group over GF(p) materialized by closure, together with its
/// matrices (id i is matrices[i]; the identity matrix is id 0).
struct MatrixGroup {
  MatrixSpace space;
  std::vector<MatrixSpace::Matrix> matrices;
  Group group;
};

inline MatrixGroup matrix_group(std::uint32_t p, std::uint32_t n, const std::vector<MatrixSpace::Matrix>& gens,
                                std::string label, std::size_t bound = 2000) {
  MatrixSpace S{p, n};
  for (const auto& g : gens)
    if (g.size() != n * n || S.det(g) == 0) throw InvalidGroup("matrix generator is not invertible");
  std::map<MatrixSpace::Matrix, Element> index;
  std::vector<MatrixSpace::Matrix> elems{S.identity()};
  index.emplace(elems[0], 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto m = S.mul(elems[i], g);
      if (index.emplace(m, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(m));
        if (elems.size() > bound) throw BoundExceeded("matrix_group: closure exceeds bound");
      }
    }
  MatrixGroup out{S, elems, Group{}};
  out.group = Group::from_operation(
      elems.size(), [&](Element a, Element b) { return index.at(S.mul(elems[a], elems[b])); }, std::move(label));
  return out;
}

/// The additive group of GF(p)^n (vector encoding as ids) extended by a
/// matrix group acting naturally.
inline Group affine_group(const MatrixGroup& H, std::string label) {
  const auto& S = H.space;
  const auto nv = S.vector_count();
  std::vector<std::size_t> dims(S.n, S.p);
  // Ids of GF(p)^n are the vector encodings; build the table directly so
  // that encoding and id agree.
  Group V = Group::from_operation(nv, [&](Element a, Element b) { return static_cast<Element>(S.add(a, b)); },
                                  "V" + std::to_string(nv));
  std::vector<std::vector<Element>> action(H.group.order(), std::vector<Element>(nv));
  for (std::size_t h = 0; h < H.group.order(); ++h)
    for (Element v = 0; v < nv; ++v) action[h][v] = static_cast<Element>(S.apply(H.matrices[h], v));
  return semidirect_product(V, H.group, action, std::move(label));
}

/// Affine group x -> a x + b of GF(q); (a, b) has id (index of a) * q + b
/// where nonzero field elements are indexed by increasing encoding.
inline Group agl1(std::uint64_t q) {
  if (q > 512) throw BoundExceeded("agl1: q exceeds 512");
  const GaloisField F(q);
  const std::size_t n = q * (q - 1);
  return Group::from_operation(
      n,
      [&](Element x, Element y) {
        const std::uint64_t a = x / q + 1, b = x % q, c = y / q + 1, d = y % q;
        const std::uint64_t ac = F.mul(a, c);
        const std::uint64_t shift = F.add(F.mul(a, d), b);
        return (ac - 1) * q + shift;
      },
      "AGL1(" + std::to_string(q) + ")");
}

/// Central product of two groups with centers of order 2, amalgamating the
/// centers: the quotient of A x B by {(1,1), (zA, zB)}.
inline Group central_product_2(const Group& A, const Group& B, std::string label) {
  auto central_involution = [](const Group& G) {
    for (Element g = 1; g < G.order(); ++g) {
      bool central = G.element_order(g) == 2;
      for (Element h = 0; h < G.order() && central; ++h)
        if (G.mul(g, h) != G.mul(h, g)) central = false;
      if (central) return g;
    }
    throw InvalidGroup("central_product_2: no central involution");
  };
  const Element za = central_involution(A), zb = central_involution(B);
  Group P = direct_product(A, B);
  const Element zz = static_cast<Element>(za * B.order() + zb);
  auto K = Subgroup::from_closed(P, {0, zz});
  auto Q = quotient(P, K, label);
  return Q.image;
}

/// Extraspecial 2-group of order 2^(2m+1): central product of m copies of D8
/// (sign '+') or m-1 copies of D8 and one Q8 (sign '-').
inline Group extraspecial_2(unsigned m, char sign) {
  if (m < 1) throw InvalidGroup("extraspecial_2: m must be >= 1");
  if (sign != '+' && sign != '-') throw InvalidGroup("extraspecial_2: sign must be + or -");
  const std::string label = std::string("2^(1+") + std::to_string(2 * m) + ")" + sign;
  Group G = sign == '+' ? dihedral(4) : generalized_quaternion(8);
  for (unsigned i = 1; i < m; ++i) G = central_product_2(G, dihedral(4), label);
  return G.with_label(label);
}

/// Heisenberg group of order p^3: (a, b, c) with id a + p b + p^2 c and
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
inline Group heisenberg(std::uint32_t p) {
  const std::uint32_t n = p * p * p;
  return Group::from_operation(
      n,
      [p](Element x, Element y) {
        const std::uint32_t a = x % p, b = (x / p) % p, c = x / (p * p);
        const std::uint32_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
        return ((a + a2) % p) + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
      },
      "Heis(" + std::to_string(p) + ")");
}

/// Heisenberg group extended by the cyclic group generated by
/// (a, b, c) -> (a, t b, t c), with t of multiplicative order k mod p. The
/// extension acts on the center through t.
inline Group heisenberg_torus(std::uint32_t p, std::uint32_t t) {
  const Group H = heisenberg(p);
  std::uint32_t k = 1;
  for (std::uint64_t x = t % p; x != 1; x = x * t % p) ++k;
  const Group C = cyclic(k);
  std::vector<std::vector<Element>> action(k, std::vector<Element>(H.order()));
  std::uint64_t tj = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    for (Element x = 0; x < H.order(); ++x) {
      const std::uint32_t a = x % p, b = (x / p) % p, c = x / (p * p);
      action[j][x] = static_cast<Element>(a + p * (b * tj % p) + p * p * (c * tj % p));
    }
    tj = tj * t % p;
  }
  return semidirect_product(H, C, action, "Heis(" + std::to_string(p) + "):C" + std::to_string(k));
}

/// (C3 x C3) x| Q8 with Q8 <= GL(2,3) acting fixed-point-freely.
inline Group frobenius72_quaternion() {
  const auto Q = matrix_group(3, 2, {{0, 2, 1, 0}, {1, 1, 1, 2}}, "Q8");
  return affine_group(Q, "(C3xC3):Q8");
}

/// Q8 x| C3 with C3 acting by conjugation with an order-3 element of SL(2,3);
/// isomorphic to SL(2,3).
inline Group sl23_semidirect() {
  const auto Q = matrix_group(3, 2, {{0, 2, 1, 0}, {1, 1, 1, 2}}, "Q8");
  const MatrixSpace& S = Q.space;
  const MatrixSpace::Matrix t{1, 1, 0, 1};
  const MatrixSpace::Matrix tinv{1, 2, 0, 1};
  std::map<MatrixSpace::Matrix, Element> index;
  for (std::size_t i = 0; i < Q.matrices.size(); ++i) index.emplace(Q.matrices[i], static_cast<Element>(i));
  std::vector<std::vector<Element>> action(3, std::vector<Element>(8));
  MatrixSpace::Matrix tj = S.identity(), tjinv = S.identity();
  for (int j = 0; j < 3; ++j) {
    for (Element x = 0; x < 8; ++x) action[j][x] = index.at(S.mul(S.mul(tj, Q.matrices[x]), tjinv));
    tj = S.mul(tj, t);
    tjinv = S.mul(tinv, tjinv);
  }
  return semidirect_product(Q.group, cyclic(3), action, "Q8:C3");
}

/// Inversion automorphism of an abelian group, as a permutation of ids.
inline std::vector<Element> inversion_automorphism(const Group& A) {
  std::vector<Element> f(A.order());
  for (Element x = 0; x < A.order(); ++x) f[x] = A.inv(x);
  return f;
}

/// Automorphism x -> x^k of a cyclic group C_n (ids are exponents).
inline std::vector<Element> power_automorphism(std::size_t n, std::size_t k) {
  std::vector<Element> f(n);
  for (Element x = 0; x < n; ++x) f[x] = static_cast<Element>((x * k) % n);
  return f;
}

/// Action table of C_m on C_n through x -> x^(k^j) for the j-th element.
inline std::vector<std::vector<Element>> cyclic_power_action(std::size_t n, std::size_t m, std::size_t k) {
  std::vector<std::vector<Element>> action;
  std::size_t kj = 1;
  for (std::size_t j = 0; j < m; ++j) {
    action.push_back(power_automorphism(n, kj));
    kj = kj * k % n;
  }
  return action;
}

}  // namespace camina
