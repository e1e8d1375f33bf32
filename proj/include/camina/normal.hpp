#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "camina/group.hpp"
#include "camina/number_theory.hpp"

namespace camina {

inline bool is_p_group(const Subgroup& H, std::uint64_t p) { return is_p_power(H.order(), p); }

inline bool is_elementary_abelian(const Group& G) {
  if (G.order() == 1) return true;
  const auto [p, k] = prime_power(G.order());
  if (p == 0 || !G.is_abelian()) return false;
  for (Element g = 1; g < G.order(); ++g)
    if (G.element_order(g) != p) return false;
  return true;
}

inline bool is_elementary_abelian(const Subgroup& H) {
  const auto& G = H.parent();
  if (H.order() == 1) return true;
  const auto [p, k] = prime_power(H.order());
  if (p == 0) return false;
  for (auto a : H.elements()) {
    if (a != 0 && G.element_order(a) != p) return false;
    for (auto b : H.elements())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  }
  return true;
}

/// All normal subgroups, sorted by (order, elements). Every normal subgroup
/// is a product of normal closures of single classes, so the lattice is
/// generated from those closures by products.
inline std::vector<Subgroup> normal_subgroups(const Group& G, const Bounds& bounds = {}) {
  if (G.order() > bounds.subgroup_lattice)
    throw BoundExceeded("normal_subgroups: |G| = " + std::to_string(G.order()) + " exceeds bound " +
                        std::to_string(bounds.subgroup_lattice));
  const auto& sets = G.normal_sets([&G] {
    const auto& cc = G.classes();
    std::set<std::vector<Element>> closure_keys;
    std::vector<Subgroup> closures;
    for (std::size_t c = 1; c < cc.count(); ++c) {
      auto K = generate(G, cc.members[c]);
      std::vector<Element> key(K.elements().begin(), K.elements().end());
      if (closure_keys.insert(key).second) closures.push_back(std::move(K));
    }
    std::set<std::vector<Element>> seen;
    std::vector<Subgroup> found{trivial_subgroup(G)};
    seen.insert({0});
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto& K : closures) {
        if (K.is_subset_of(found[i])) continue;
        auto J = product(found[i], K);
        std::vector<Element> key(J.elements().begin(), J.elements().end());
        if (seen.insert(key).second) found.push_back(std::move(J));
      }
    }
    std::vector<std::vector<Element>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  });
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(Subgroup::from_closed_normal(G, s));
  return out;
}

/// Smallest normal subgroup containing H.
inline Subgroup normal_closure(const Subgroup& H) {
  const auto& G = H.parent();
  std::vector<Element> gens;
  for (Element g = 0; g < G.order(); ++g)
    for (auto h : H.elements()) gens.push_back(G.conj(g, h));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generate(G, gens);
}

/// A chief factor upper/lower realized as a quotient of the standalone upper group.
struct ChiefFactor {
  Subgroup lower;
  Subgroup upper;
  QuotientMap factor;

  std::size_t order() const { return upper.order() / lower.order(); }
};

/// Chief series 1 = K0 < K1 < ... < G, each step minimal normal over the
/// previous one (least order, then least element list).
inline std::vector<ChiefFactor> chief_series(const Group& G, const Bounds& bounds = {}) {
  const auto normals = normal_subgroups(G, bounds);
  std::vector<ChiefFactor> out;
  Subgroup K = normals.front();
  while (!K.is_whole()) {
    const Subgroup* next = nullptr;
    for (const auto& M : normals)
      if (M.order() > K.order() && K.is_subset_of(M)) {
        next = &M;
        break;
      }
    if (next == nullptr) throw ContractViolation("chief_series: no normal subgroup above current term");
    auto emb = materialize(*next);
    auto lower_in_upper = emb.pull(K);
    ChiefFactor f{K, *next, quotient(emb.group, lower_in_upper)};
    out.push_back(std::move(f));
    K = *next;
  }
  return out;
}

/// Whether a chief factor is elementary abelian.
inline bool chief_factor_is_elementary(const ChiefFactor& f) { return is_elementary_abelian(f.factor.image); }

inline bool is_solvable(const Group& G, const Bounds& bounds = {}) {
  for (const auto& f : chief_series(G, bounds))
    if (!chief_factor_is_elementary(f)) return false;
  return true;
}

/// Supersolvable iff solvable with every chief factor of prime order (checked
/// on one computed chief series).
inline bool is_supersolvable(const Group& G, const Bounds& bounds = {}) {
  for (const auto& f : chief_series(G, bounds))
    if (!chief_factor_is_elementary(f) || !is_prime(f.order())) return false;
  return true;
}

inline std::vector<Subgroup> minimal_normal_subgroups(const Group& G, const Bounds& bounds = {}) {
  const auto normals = normal_subgroups(G, bounds);
  std::vector<Subgroup> out;
  for (std::size_t i = 1; i < normals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < normals.size() && minimal; ++j)
      if (j != i && normals[j].order() < normals[i].order() && normals[j].is_subset_of(normals[i])) minimal = false;
    if (minimal) out.push_back(normals[i]);
  }
  if (is_solvable(G, bounds))
    for (const auto& M : out)
      if (!is_elementary_abelian(M))
        throw ContractViolation("minimal normal subgroup of a solvable group is not elementary abelian");
  return out;
}

struct Radicals {
  Subgroup O_p;        // largest normal p-subgroup
  Subgroup O_pprime;   // largest normal p'-subgroup
  Subgroup O_upper_pprime;  // O^{p'}: generated by the p-elements
  Subgroup fitting;
};

namespace detail {

inline Subgroup largest_normal_where(const std::vector<Subgroup>& normals, auto&& pred) {
  const Subgroup* best = &normals.front();
  for (const auto& N : normals)
    if (pred(N.order()) && N.order() > best->order()) best = &N;
  // Uniqueness: the product of two such subgroups is again one.
  for (const auto& N : normals)
    if (pred(N.order()) && !N.is_subset_of(*best))
      throw ContractViolation("largest normal subgroup with the property is not unique");
  return *best;
}

}  // namespace detail

inline Subgroup upper_pprime(const Group& G, std::uint64_t p) {
  std::vector<Element> pelts;
  for (Element g = 0; g < G.order(); ++g)
    if (is_p_power(G.element_order(g), p)) pelts.push_back(g);
  return generate(G, pelts);
}

inline Radicals radicals(const Group& G, std::uint64_t p, const Bounds& bounds = {}) {
  if (!is_prime(p)) throw ContractViolation("radicals: p must be prime");
  const auto normals = normal_subgroups(G, bounds);
  Radicals r;
  r.O_p = detail::largest_normal_where(normals, [p](std::uint64_t n) { return is_p_power(n, p); });
  r.O_pprime = detail::largest_normal_where(normals, [p](std::uint64_t n) { return n % p != 0; });
  r.O_upper_pprime = upper_pprime(G, p);
  Subgroup F = trivial_subgroup(G);
  for (auto q : prime_divisors(G.order())) {
    auto Oq = detail::largest_normal_where(normals, [q](std::uint64_t n) { return is_p_power(n, q); });
    F = product(F, Oq);
  }
  r.fitting = F;
  if (!r.O_p.is_normal() || !r.O_pprime.is_normal() || !r.O_upper_pprime.is_normal() || !r.fitting.is_normal())
    throw ContractViolation("radicals: computed radical is not normal");
  return r;
}

inline Subgroup fitting_subgroup(const Group& G, const Bounds& bounds = {}) {
  return radicals(G, prime_divisors(std::max<std::size_t>(G.order(), 2)).front(), bounds).fitting;
}

inline bool is_nilpotent(const Group& G, const Bounds& bounds = {}) {
  if (G.order() == 1) return true;
  return fitting_subgroup(G, bounds).is_whole();
}

struct IteratedSeries {
  Subgroup O_p;
  Subgroup O_p_pprime;
  Subgroup O_p_pprime_p;
};

/// O_p <= O_{p,p'} <= O_{p,p',p}, each the preimage of the next radical of
/// the quotient by the previous term.
inline IteratedSeries iterated_series(const Group& G, std::uint64_t p, const Bounds& bounds = {}) {
  IteratedSeries s;
  s.O_p = radicals(G, p, bounds).O_p;

  auto q1 = quotient(G, s.O_p);
  auto top1 = radicals(q1.image, p, bounds).O_pprime;
  s.O_p_pprime = q1.preimage(top1);

  auto q2 = quotient(G, s.O_p_pprime);
  auto top2 = radicals(q2.image, p, bounds).O_p;
  s.O_p_pprime_p = q2.preimage(top2);

  if (!s.O_p_pprime.is_normal() || !s.O_p_pprime_p.is_normal())
    throw ContractViolation("iterated_series: term is not normal");
  if (!(q1.image_of(s.O_p_pprime) == top1) || !(q2.image_of(s.O_p_pprime_p) == top2))
    throw ContractViolation("iterated_series: quotient identity failed");
  if (!s.O_p.is_subset_of(s.O_p_pprime) || !s.O_p_pprime.is_subset_of(s.O_p_pprime_p))
    throw ContractViolation("iterated_series: terms are not nested");
  return s;
}

/// Bounded subgroup generation: stops and returns nullopt once more than
/// `limit` elements are produced.
inline std::optional<Subgroup> generate_bounded(const Group& G, std::span<const Element> gens, std::size_t limit) {
  std::vector<std::uint8_t> in(G.order(), 0);
  std::vector<Element> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      const Element y = G.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
        if (elems.size() > limit) return std::nullopt;
      }
    }
  return Subgroup::from_closed(G, std::move(elems));
}

/// Every subgroup of G, sorted by (order, elements). Built from the cyclic
/// subgroups by repeated joins.
inline std::vector<Subgroup> all_subgroups(const Group& G, const Bounds& bounds = {}) {
  if (G.order() > bounds.subgroup_lattice) throw BoundExceeded("all_subgroups: group exceeds bound");
  std::set<std::vector<Element>> cyclic_keys;
  std::vector<Subgroup> cyclic;
  for (Element g = 0; g < G.order(); ++g) {
    auto C = generate(G, {g});
    std::vector<Element> key(C.elements().begin(), C.elements().end());
    if (cyclic_keys.insert(key).second) cyclic.push_back(std::move(C));
  }
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found;
  for (const auto& C : cyclic) {
    seen.insert(std::vector<Element>(C.elements().begin(), C.elements().end()));
    found.push_back(C);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& C : cyclic) {
      if (C.is_subset_of(found[i])) continue;
      auto J = join(found[i], C);
      std::vector<Element> key(J.elements().begin(), J.elements().end());
      if (seen.insert(key).second) found.push_back(std::move(J));
    }
  std::sort(found.begin(), found.end());
  return found;
}

struct FrobeniusCheck {
  bool is_frobenius = false;
  std::optional<Subgroup> complement;

  explicit operator bool() const { return is_frobenius; }
};

/// Whether G is a Frobenius group with kernel N: no nonidentity element of N
/// has a centralizer leaving N, and no element outside N centralizes a
/// nonidentity element of N. A complement is located when true.
inline FrobeniusCheck is_frobenius_with_kernel(const Group& G, const Subgroup& N, const Bounds& bounds = {}) {
  FrobeniusCheck r;
  if (!N.is_normal() || N.is_trivial() || N.is_whole()) return r;
  for (auto x : N.elements()) {
    if (x == 0) continue;
    for (Element h = 0; h < G.order(); ++h)
      if (!N.contains(h) && G.mul(h, x) == G.mul(x, h)) return r;
  }
  for (Element g = 0; g < G.order(); ++g) {
    if (N.contains(g)) continue;
    for (auto x : N.elements())
      if (x != 0 && G.conj(g, x) == x) return r;
  }
  r.is_frobenius = true;

  const auto m = N.index();
  auto is_complement = [&](const Subgroup& H) { return H.order() == m && intersection(H, N).is_trivial(); };
  std::vector<Element> cand;
  for (Element g = 0; g < G.order(); ++g)
    if (!N.contains(g) && m % G.element_order(g) == 0) cand.push_back(g);

  for (auto g : cand) {
    auto H = generate(G, {g});
    if (is_complement(H)) {
      r.complement = H;
      return r;
    }
  }
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      const Element pair[] = {cand[i], cand[j]};
      auto H = generate_bounded(G, pair, m);
      if (H && is_complement(*H)) {
        r.complement = *H;
        return r;
      }
    }
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      for (std::size_t k = j + 1; k < cand.size(); ++k) {
        const Element triple[] = {cand[i], cand[j], cand[k]};
        auto H = generate_bounded(G, triple, m);
        if (H && is_complement(*H)) {
          r.complement = *H;
          return r;
        }
      }
  for (const auto& H : all_subgroups(G, bounds))
    if (is_complement(H)) {
      r.complement = H;
      return r;
    }
  throw ContractViolation("is_frobenius_with_kernel: no complement found");
}

/// Whether every nonidentity element of order coprime to p fixes no
/// nonidentity element of N under conjugation.
inline bool pprime_elements_fpf(const Group& G, const Subgroup& N, std::uint64_t p) {
  if (!N.is_normal() || !is_p_group(N, p)) throw ContractViolation("pprime_elements_fpf: N must be a normal p-subgroup");
  for (Element g = 1; g < G.order(); ++g) {
    if (G.element_order(g) % p == 0) continue;
    for (auto x : N.elements())
      if (x != 0 && G.mul(g, x) == G.mul(x, g)) return false;
  }
  return true;
}

/// Elementary divisors (prime powers, ascending) of an abelian group.
inline std::vector<std::uint64_t> abelian_invariants(const Group& G) {
  if (!G.is_abelian()) throw ContractViolation("abelian_invariants: group is not abelian");
  std::vector<std::uint64_t> out;
  for (auto [p, a] : factorize(G.order())) {
    // count[k] = #{g : g^(p^k) = 1}
    std::vector<std::uint64_t> count{1};
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      std::uint64_t c = 0;
      for (Element g = 0; g < G.order(); ++g)
        if (pk % G.element_order(g) == 0) ++c;
      count.push_back(c);
    }
    // rank_ge[k] = number of cyclic factors of order >= p^k
    std::vector<unsigned> rank_ge(a + 2, 0);
    for (unsigned k = 1; k <= a; ++k) {
      std::uint64_t ratio = count[k] / count[k - 1];
      unsigned r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      rank_ge[k] = r;
    }
    std::uint64_t q = 1;
    for (unsigned k = 1; k <= a; ++k) {
      q *= p;
      for (unsigned t = 0; t < rank_ge[k] - rank_ge[k + 1]; ++t) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace camina
