#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "camina/character_table.hpp"
#include "camina/normal.hpp"

namespace camina {

/// Whether N lies in the kernel of chi, read off the eigenvalue-1 data.
inline bool contains_in_kernel(const Character& chi, const Subgroup& N) {
  const auto& cls = chi.group.classes().class_of;
  for (auto x : N.elements())
    if (chi.trivial_multiplicity[cls[x]] != chi.degree) return false;
  return true;
}

/// Irr(G|N): rows whose kernel does not contain N.
inline std::vector<std::size_t> irr_over(const CharacterTable& T, const Subgroup& N) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (!contains_in_kernel(T.row(i), N)) out.push_back(i);
  return out;
}

inline std::vector<std::int64_t> degrees_over(const CharacterTable& T, const Subgroup& N) {
  std::vector<std::int64_t> d;
  for (auto i : irr_over(T, N)) d.push_back(T.row(i).degree);
  return d;
}

namespace detail {

inline bool pairwise_distinct(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline void require_proper_normal(const Subgroup& N, const char* who) {
  if (!N.is_normal()) throw NotNormal(std::string(who) + ": subgroup is not normal");
  if (N.is_trivial() || N.is_whole()) throw ContractViolation(std::string(who) + ": N must be nontrivial and proper");
}

}  // namespace detail

inline bool has_property_D(const CharacterTable& T, const Subgroup& N) {
  return detail::pairwise_distinct(degrees_over(T, N));
}

/// |C_G(x)| = |C_{G/N}(xN)| for one x per class outside N.
inline bool is_camina_centralizer(const Group& G, const Subgroup& N) {
  detail::require_proper_normal(N, "is_camina_centralizer");
  const auto q = quotient(G, N);
  const auto& cc = G.classes();
  const auto& qc = q.image.classes();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const Element x = cc.representative[c];
    if (N.contains(x)) continue;
    const auto cg = G.order() / cc.size(c);
    const auto cq = q.image.order() / qc.size(qc.class_of[q.projection[x]]);
    if (cg != cq) return false;
  }
  return true;
}

/// Every member of Irr(G|N) vanishes off N.
inline bool is_camina_vanishing(const CharacterTable& T, const Subgroup& N) {
  detail::require_proper_normal(N, "is_camina_vanishing");
  const auto& cc = T.classes();
  for (auto i : irr_over(T, N))
    for (std::size_t c = 0; c < cc.count(); ++c)
      if (!N.contains(cc.representative[c]) && !T.row(i).on_class(c).is_zero()) return false;
  return true;
}

/// Both Camina checks; they must agree.
inline bool is_camina_pair(const CharacterTable& T, const Subgroup& N) {
  const bool a = is_camina_centralizer(T.group(), N);
  const bool b = is_camina_vanishing(T, N);
  if (a != b)
    throw ContractViolation("Camina checks disagree on " + T.group().label() + " |N|=" + std::to_string(N.order()));
  return a;
}

enum class TheoremAType { NotApplicable, NotD, Type1, Type2, Type3 };
enum class KuischCase { none, i, ii, iii };

inline const char* to_string(TheoremAType t) {
  switch (t) {
    case TheoremAType::NotApplicable: return "NotApplicable";
    case TheoremAType::NotD: return "NotD";
    case TheoremAType::Type1: return "Type1";
    case TheoremAType::Type2: return "Type2";
    default: return "Type3";
  }
}

inline const char* to_string(KuischCase k) {
  switch (k) {
    case KuischCase::i: return "i";
    case KuischCase::ii: return "ii";
    case KuischCase::iii: return "iii";
    default: return "none";
  }
}

/// Ordered key/value evidence attached to a verdict.
using Evidence = std::vector<std::pair<std::string, std::string>>;

struct KuischResult {
  KuischCase kase = KuischCase::none;
  Evidence evidence;
};

struct PairReport {
  std::string group_label;
  std::size_t group_order = 0;
  std::vector<Element> normal;
  std::size_t normal_order = 0;
  std::uint64_t p = 0;  // 0 when |N| is not a prime power
  unsigned n = 0;
  bool property_D = false;
  std::optional<bool> camina_centralizer;  // unset for N = G
  std::optional<bool> camina_vanishing;
  bool unique_minimal_normal = false;
  bool o_p_prime_trivial = false;
  bool pprime_fpf = false;
  TheoremAType type = TheoremAType::NotApplicable;
  std::optional<KuischCase> kuisch;
  std::vector<std::int64_t> degrees;  // over Irr(G|N)
  Evidence evidence;
};

namespace detail {

inline std::string pair_name(const Group& G, const Subgroup& N) {
  return G.label() + " (|G|=" + std::to_string(G.order()) + ", |N|=" + std::to_string(N.order()) + ")";
}

inline void require(bool ok, const std::string& claim, const Group& G, const Subgroup& N, const std::string& detail = {}) {
  if (!ok) throw TheoremViolation(claim, pair_name(G, N) + (detail.empty() ? "" : ": " + detail));
}

inline bool is_cyclic(const Group& G) {
  for (Element g = 0; g < G.order(); ++g)
    if (G.element_order(g) == G.order()) return true;
  return false;
}

/// G conjugation-transitive on the nonidentity elements of N.
inline bool transitive_on_nonidentity(const Group& G, const Subgroup& N) {
  if (N.order() < 2) return false;
  Element x = N.elements()[1];
  return G.order() / centralizer(G, x).order() == N.order() - 1;
}

/// Faithful rows of the table.
inline std::vector<std::size_t> faithful_rows(const CharacterTable& T) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (is_faithful(T.row(i))) out.push_back(i);
  return out;
}

/// Q8 x C_m with m odd: the 2-elements form a quaternion group of order 8,
/// the odd-order elements a cyclic subgroup, and the two commute.
inline bool is_quaternion_times_odd_cyclic(const Group& Q) {
  std::vector<Element> two, odd;
  for (Element g = 0; g < Q.order(); ++g) {
    const auto o = Q.element_order(g);
    if (is_p_power(o, 2)) two.push_back(g);
    if (o % 2 == 1) odd.push_back(g);
  }
  if (two.size() != 8 || two.size() * odd.size() != Q.order()) return false;
  std::size_t involutions = 0;
  bool has_order_8 = false;
  for (auto g : two) {
    involutions += Q.element_order(g) == 2;
    has_order_8 = has_order_8 || Q.element_order(g) == 8;
  }
  if (involutions != 1 || has_order_8) return false;
  std::vector<std::uint8_t> in_two(Q.order(), 0), in_odd(Q.order(), 0);
  for (auto a : two) in_two[a] = 1;
  for (auto b : odd) in_odd[b] = 1;
  for (auto a : two)
    for (auto b : two)
      if (!in_two[Q.mul(a, b)]) return false;
  bool cyclic = false;
  for (auto b : odd) {
    cyclic = cyclic || Q.element_order(b) == odd.size();
    for (auto c : odd)
      if (!in_odd[Q.mul(b, c)]) return false;
    for (auto a : two)
      if (Q.mul(a, b) != Q.mul(b, a)) return false;
  }
  return cyclic;
}

/// Subgroup of J generated by L and all commutators [x, k], x in J, k in K.
inline Subgroup commutators_mod(const Group& J, const Subgroup& K, const Subgroup& L) {
  std::vector<Element> gens(L.elements().begin(), L.elements().end());
  std::vector<std::uint8_t> seen(J.order(), 0);
  for (auto g : gens) seen[g] = 1;
  for (Element x = 0; x < J.order(); ++x)
    for (auto k : K.elements()) {
      const auto c = J.commutator(x, k);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return generate(J, gens);
}

}  // namespace detail

/// Kuisch's trichotomy for a Camina pair (G, N) with G solvable and N a
/// p-group. Returns `none` when those hypotheses fail.
inline KuischResult kuisch_case(const CharacterTable& T, const Subgroup& N, const Bounds& bounds = {}) {
  const auto& G = T.group();
  KuischResult r;
  const auto [p, n] = prime_power(N.order());
  if (p == 0 || N.is_whole() || !is_solvable(G, bounds) || !is_camina_pair(T, N)) return r;

  const auto rad = radicals(G, p, bounds);
  detail::require(rad.O_pprime.is_trivial(), "Camina pair with p-group N has O_p'(G) = 1", G, N);
  const auto& Jsub = rad.O_upper_pprime;
  r.evidence.push_back({"J-order", std::to_string(Jsub.order())});
  if (!N.is_subset_of(Jsub)) throw ContractViolation("kuisch_case: N not inside O^p'(G)");
  const auto Jemb = materialize(Jsub, G.label() + ".J");
  const auto& J = Jemb.group;
  const auto NJ = Jemb.pull(N);
  if (!NJ.is_whole()) {
    const auto TJ = compute_table(J, bounds);
    detail::require(is_camina_pair(TJ, NJ), "(J, N) is a Camina pair", G, N);
  }

  if (Jsub.order() == p_part(G.order(), p)) {
    r.kase = KuischCase::i;
    r.evidence.push_back({"J-sylow", "true"});
    return r;
  }
  r.evidence.push_back({"J-sylow", "false"});

  const auto s = iterated_series(J, p, bounds);
  const auto& L = s.O_p;
  const auto& K = s.O_p_pprime;
  const bool op_equal = L.order() == rad.O_p.order();
  const bool top = s.O_p_pprime_p.is_whole();
  const auto Kemb = materialize(K, J.label() + ".K");
  const auto KL = quotient(Kemb.group, Kemb.pull(L)).image;
  const auto JK = quotient(J, K).image;
  r.evidence.push_back({"O_p(J)=O_p(G)", op_equal ? "true" : "false"});
  r.evidence.push_back({"O_p,p',p(J)=J", top ? "true" : "false"});
  r.evidence.push_back({"K/L-order", std::to_string(KL.order())});
  r.evidence.push_back({"J/K-order", std::to_string(JK.order())});

  if (op_equal && top && JK.is_abelian()) {
    if (is_p_power(JK.order(), p) && KL.order() % 2 == 1 && detail::is_cyclic(KL)) {
      bool fpf = true;
      for (Element x = 0; x < J.order() && fpf; ++x) {
        if (K.contains(x)) continue;
        for (auto k : K.elements())
          if (!L.contains(k) && L.contains(J.commutator(x, k))) {
            fpf = false;
            break;
          }
      }
      r.evidence.push_back({"J/K-fixed-point-free", fpf ? "true" : "false"});
      if (fpf) {
        r.kase = KuischCase::ii;
        return r;
      }
    }
    if (p == 3 && detail::is_quaternion_times_odd_cyclic(KL) && detail::commutators_mod(J, K, L) == K) {
      r.kase = KuischCase::iii;
      return r;
    }
  }
  detail::require(false, "Camina pair falls under one of Kuisch's cases", G, N);
  return r;
}

/// Classifies (G, N) under Theorem A, verifying every conclusion the
/// theorem draws for the type found.
inline PairReport classify_theorem_A(const CharacterTable& T, const Subgroup& N, const Bounds& bounds = {}) {
  const auto& G = T.group();
  if (!N.parent().same_table(G)) throw ContractViolation("classify_theorem_A: subgroup of a different group");
  if (!N.is_normal()) throw NotNormal("classify_theorem_A: subgroup is not normal");
  PairReport r;
  r.group_label = G.label();
  r.group_order = G.order();
  r.normal.assign(N.elements().begin(), N.elements().end());
  r.normal_order = N.order();
  const auto [p, n] = prime_power(N.order());
  r.p = p;
  r.n = n;
  r.degrees = degrees_over(T, N);
  r.property_D = detail::pairwise_distinct(r.degrees);
  if (!N.is_trivial() && !N.is_whole()) {
    r.camina_centralizer = is_camina_centralizer(G, N);
    r.camina_vanishing = is_camina_vanishing(T, N);
    if (*r.camina_centralizer != *r.camina_vanishing)
      throw ContractViolation("Camina checks disagree on " + detail::pair_name(G, N));
  }

  const bool solvable = is_solvable(G, bounds);
  const auto mins = minimal_normal_subgroups(G, bounds);
  const bool minimal = std::find(mins.begin(), mins.end(), N) != mins.end();
  r.unique_minimal_normal = mins.size() == 1 && minimal;
  if (p != 0) {
    const auto rad = radicals(G, p, bounds);
    r.o_p_prime_trivial = rad.O_pprime.is_trivial();
    r.pprime_fpf = pprime_elements_fpf(G, N, p);
    r.evidence.push_back({"O_p-order", std::to_string(rad.O_p.order())});
    r.evidence.push_back({"O_p'-order", std::to_string(rad.O_pprime.order())});
    r.evidence.push_back({"O^p'-order", std::to_string(rad.O_upper_pprime.order())});
    r.evidence.push_back({"fitting-order", std::to_string(rad.fitting.order())});
  }

  if (!r.property_D) {
    r.type = TheoremAType::NotD;
    return r;
  }
  if (G.is_abelian() || !solvable || !minimal) return r;

  // The theorem's common conclusions.
  detail::require(r.camina_centralizer.value_or(false), "(G, N) is a Camina pair", G, N);
  detail::require(r.unique_minimal_normal, "N is the unique minimal normal subgroup", G, N);
  detail::require(r.o_p_prime_trivial, "O_p'(G) = 1", G, N);
  detail::require(r.pprime_fpf, "p'-elements act fixed-point-freely on N", G, N);
  detail::require(N.is_subset_of(derived_subgroup(G)), "N lies in G'", G, N);
  const auto faithful = detail::faithful_rows(T);
  // Irr(G|N) is exactly the set of faithful characters.
  std::vector<std::size_t> over = irr_over(T, N);
  detail::require(over == faithful, "Irr(G|N) consists of the faithful characters", G, N);

  auto k = kuisch_case(T, N, bounds);
  r.kuisch = k.kase;
  for (auto& e : k.evidence) r.evidence.push_back(std::move(e));

  if (is_nilpotent(G, bounds)) {
    r.type = TheoremAType::Type1;
    const auto [q, a] = prime_power(G.order());
    detail::require(q == 2 && a % 2 == 1, "type (1): G is a 2-group of order 2^(2m+1)", G, N);
    const unsigned m = (a - 1) / 2;
    detail::require(N == center(G) && N.order() == 2, "type (1): N = Z(G) of order 2", G, N);
    detail::require(faithful.size() == 1 && T.row(faithful[0]).degree == (std::int64_t{1} << m),
                    "type (1): unique faithful character of degree 2^m", G, N, "m=" + std::to_string(m));
    r.evidence.push_back({"m", std::to_string(m)});
    r.evidence.push_back({"faithful-degree", std::to_string(T.row(faithful[0]).degree)});
    return r;
  }

  const auto frob = is_frobenius_with_kernel(G, N, bounds);
  if (frob) {
    r.type = TheoremAType::Type2;
    const auto pn1 = static_cast<std::int64_t>(N.order()) - 1;
    detail::require(static_cast<std::int64_t>(N.index()) == pn1, "type (2): complement of order p^n - 1", G, N);
    detail::require(detail::transitive_on_nonidentity(G, N), "type (2): transitive on the nonidentity elements of N", G,
                    N);
    detail::require(faithful.size() == 1 && T.row(faithful[0]).degree == pn1,
                    "type (2): unique faithful character of degree p^n - 1", G, N);
    r.evidence.push_back({"complement-order", std::to_string(frob.complement ? frob.complement->order() : 0)});
    r.evidence.push_back({"faithful-degree", std::to_string(T.row(faithful[0]).degree)});
    return r;
  }

  r.type = TheoremAType::Type3;
  detail::require(center(G).is_trivial(), "type (3): Z(G) = 1", G, N);
  detail::require(k.kase != KuischCase::none, "type (3): Kuisch case applies", G, N);
  if (k.kase == KuischCase::i) {
    // J is a Sylow p-subgroup P.
    const auto P = p_part(G.order(), p);
    std::uint64_t root = 0;
    const bool square = exact_sqrt(P / N.order(), root);
    const auto expect = static_cast<std::int64_t>((N.order() - 1) * root);
    detail::require(square && over.size() == 1 && T.row(over[0]).degree == expect,
                    "type (3) with J Sylow: single character of degree (p^n - 1)(|P|/p^n)^(1/2)", G, N);
    r.evidence.push_back({"corollary-degree", std::to_string(expect)});
  }
  return r;
}

enum class BchBucket { not_distinct, extraspecial_2, frobenius_cyclic, frobenius_quaternion };

inline const char* to_string(BchBucket b) {
  switch (b) {
    case BchBucket::extraspecial_2: return "extraspecial-2";
    case BchBucket::frobenius_cyclic: return "frobenius-cyclic";
    case BchBucket::frobenius_quaternion: return "frobenius-quaternion";
    default: return "not-distinct";
  }
}

struct BchReport {
  bool distinct = false;
  BchBucket bucket = BchBucket::not_distinct;
  std::vector<std::int64_t> nonlinear_degrees;
  Evidence evidence;
};

inline bool is_extraspecial_2(const Group& G) {
  if (!is_p_power(G.order(), 2) || G.order() < 8) return false;
  const auto D = derived_subgroup(G);
  const auto Z = center(G);
  return D.order() == 2 && D == Z && is_elementary_abelian(quotient(G, Z).image);
}

/// Nonabelian groups whose nonlinear degrees are pairwise distinct are
/// extraspecial 2-groups or doubly transitive Frobenius groups with cyclic
/// complement or of order 72 with quaternion complement.
inline BchReport bch_scan(const CharacterTable& T, const Bounds& bounds = {}) {
  const auto& G = T.group();
  if (G.is_abelian()) throw ContractViolation("bch_scan: group is abelian");
  BchReport r;
  for (const auto& row : T.rows())
    if (row.degree > 1) r.nonlinear_degrees.push_back(row.degree);
  r.distinct = detail::pairwise_distinct(r.nonlinear_degrees);
  if (!r.distinct) return r;

  if (is_extraspecial_2(G)) {
    r.bucket = BchBucket::extraspecial_2;
    return r;
  }
  for (const auto& N : normal_subgroups(G, bounds)) {
    if (N.is_trivial() || N.is_whole()) continue;
    const auto f = is_frobenius_with_kernel(G, N, bounds);
    if (!f || !f.complement) continue;
    const auto& H = *f.complement;
    if (H.order() != N.order() - 1 || !detail::transitive_on_nonidentity(G, N)) continue;
    r.evidence.push_back({"kernel-order", std::to_string(N.order())});
    r.evidence.push_back({"complement-order", std::to_string(H.order())});
    const auto Hg = materialize(H).group;
    if (detail::is_cyclic(Hg)) {
      r.bucket = BchBucket::frobenius_cyclic;
      return r;
    }
    if (G.order() == 72 && detail::is_quaternion_times_odd_cyclic(Hg) && Hg.order() == 8) {
      r.bucket = BchBucket::frobenius_quaternion;
      return r;
    }
  }
  throw TheoremViolation("distinct nonlinear degrees force one of the three shapes", G.label());
}

}  // namespace camina
