#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "camina/character_table.hpp"
#include "camina/normal.hpp"

namespace camina {

namespace detail {

/// Image of a cyclotomic value in F_q, where `root` is a primitive E-th root
/// of unity mod q and the value's conductor divides E.
inline std::uint64_t reduce_mod(const Cyclotomic& v, std::uint64_t q, std::uint64_t root, std::uint32_t E) {
  const auto e = v.conductor();
  if (E % e != 0) throw ContractViolation("reduce_mod: conductor does not divide the exponent");
  const std::uint64_t w = modp::pow(root, E / e, q);
  std::uint64_t acc = 0, wi = 1;
  for (auto c : v.coeffs()) {
    const std::int64_t r = c % static_cast<std::int64_t>(q);
    const std::uint64_t cm = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
    acc = (acc + modp::mul(cm, wi, q)) % q;
    wi = modp::mul(wi, w, q);
  }
  return acc;
}

}  // namespace detail

/// A normal subgroup N of G with both character tables and the restriction
/// multiplicities <chi|_N, theta> for every pair of rows. Copies share data.
class Section {
 public:
  Section(CharacterTable table, const Subgroup& N, const Bounds& bounds = {}) {
    if (!N.parent().same_table(table.group())) throw ContractViolation("Section: subgroup of a different group");
    if (!N.is_normal()) throw NotNormal("Section: subgroup is not normal");
    auto d = std::make_shared<Data>();
    d->table = std::move(table);
    d->N = N;
    d->emb = materialize(N);
    d->normal_table = compute_table(d->emb.group, bounds);
    build(*d);
    data_ = std::move(d);
  }

  static Section of(const Group& G, const Subgroup& N, const Bounds& bounds = {}) {
    return Section(compute_table(G, bounds), N, bounds);
  }

  const Group& group() const { return data_->table.group(); }
  const Subgroup& normal() const { return data_->N; }
  const Embedding& embedding() const { return data_->emb; }
  const CharacterTable& table() const { return data_->table; }
  const CharacterTable& normal_table() const { return data_->normal_table; }

  /// <chi|_N, theta> for row chi of G and row theta of N.
  std::int64_t multiplicity(std::size_t chi, std::size_t theta) const {
    return data_->mult[chi * data_->normal_table.size() + theta];
  }

  /// Class of N containing g x g^-1, for x in the class c of N.
  std::size_t conjugate_class(Element g, std::size_t c) const { return data_->class_action[g * data_->n_classes + c]; }

 private:
  struct Data {
    CharacterTable table;
    Subgroup N;
    Embedding emb;
    CharacterTable normal_table;
    std::vector<std::int64_t> mult;
    std::size_t n_classes = 0;
    std::vector<std::size_t> class_action;
  };

  static void build(Data& d) {
    const auto& G = d.table.group();
    const auto& H = d.emb.group;
    const auto& hc = H.classes();
    const std::size_t r = hc.count();
    d.n_classes = r;
    d.class_action.resize(G.order() * r);
    for (Element g = 0; g < G.order(); ++g)
      for (std::size_t c = 0; c < r; ++c) {
        const Element x = d.emb.to_parent[hc.representative[c]];
        d.class_action[g * r + c] = hc.class_of[d.emb.from_parent[G.conj(g, x)]];
      }

    // Multiplicities lie in [0, chi(1)] and q > 2|G|, so F_q arithmetic
    // recovers them exactly.
    const std::uint64_t q = d.table.prime();
    const std::uint32_t E = d.table.exponent();
    const std::uint64_t root = modp::pow(modp::primitive_root(q), (q - 1) / E, q);
    std::vector<std::size_t> inv_class(r);
    for (std::size_t c = 0; c < r; ++c) inv_class[c] = hc.class_of[H.inv(hc.representative[c])];
    const auto& rowsN = d.normal_table.rows();
    std::vector<std::vector<std::uint64_t>> thetas;
    for (const auto& th : rowsN) {
      std::vector<std::uint64_t> v(r);
      for (std::size_t c = 0; c < r; ++c) v[c] = modp::mul(hc.size(c) % q, detail::reduce_mod(th.values[inv_class[c]], q, root, E), q);
      thetas.push_back(std::move(v));
    }
    const std::uint64_t inv_n = modp::inv(H.order() % q, q);
    d.mult.assign(d.table.size() * rowsN.size(), 0);
    for (std::size_t i = 0; i < d.table.size(); ++i) {
      const auto& chi = d.table.row(i);
      std::vector<std::uint64_t> res(r);
      for (std::size_t c = 0; c < r; ++c) res[c] = detail::reduce_mod(chi.at(d.emb.to_parent[hc.representative[c]]), q, root, E);
      std::int64_t deg = 0;
      for (std::size_t t = 0; t < rowsN.size(); ++t) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < r; ++c) acc = (acc + modp::mul(res[c], thetas[t][c], q)) % q;
        const auto m = static_cast<std::int64_t>(modp::mul(acc, inv_n, q));
        if (m > chi.degree) throw NonIntegral("Section: restriction multiplicity out of range");
        d.mult[i * rowsN.size() + t] = m;
        deg += m * rowsN[t].degree;
      }
      if (deg != chi.degree) throw NonIntegral("Section: restricted degree mismatch");
    }
  }

  std::shared_ptr<const Data> data_;
};

/// Index of the row of T equal to the class function chi.
inline std::size_t row_of(const CharacterTable& T, const Character& chi) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.row(i).values == chi.values) return i;
  throw ContractViolation("row_of: class function is not an irreducible character");
}

/// theta^g(x) = theta(g x g^-1), expressed on N's classes.
inline Character conjugate_character(const Section& S, std::size_t theta, Element g) {
  const auto& th = S.normal_table().row(theta);
  Character out = th;
  for (std::size_t c = 0; c < out.values.size(); ++c) {
    out.values[c] = th.values[S.conjugate_class(g, c)];
    out.trivial_multiplicity[c] = th.trivial_multiplicity[S.conjugate_class(g, c)];
  }
  return out;
}

inline std::size_t conjugate_row(const Section& S, std::size_t theta, Element g) {
  return row_of(S.normal_table(), conjugate_character(S, theta, g));
}

inline bool fixes(const Section& S, std::size_t theta, Element g) {
  const auto& v = S.normal_table().row(theta).values;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!(v[S.conjugate_class(g, c)] == v[c])) return false;
  return true;
}

/// G(theta) = {g : theta^g = theta}.
inline Subgroup stabilizer_of(const Section& S, std::size_t theta) {
  const auto& G = S.group();
  std::vector<Element> st;
  for (Element g = 0; g < G.order(); ++g)
    if (fixes(S, theta, g)) st.push_back(g);
  auto T = Subgroup::from_closed(G, std::move(st));
  if (!S.normal().is_subset_of(T)) throw ContractViolation("stabilizer_of: N not contained in the stabilizer");
  return T;
}

/// The G-orbit of theta as sorted row indices of N's table.
inline std::vector<std::size_t> orbit_of(const Section& S, std::size_t theta) {
  std::vector<std::size_t> orbit{theta};
  std::vector<std::uint8_t> seen(S.normal_table().size(), 0);
  seen[theta] = 1;
  const auto& gens = S.group().generators();
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (auto g : gens) {
      const auto t = conjugate_row(S, orbit[i], g);
      if (!seen[t]) {
        seen[t] = 1;
        orbit.push_back(t);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline bool is_invariant(const Section& S, std::size_t theta) { return orbit_of(S, theta).size() == 1; }

struct Above {
  std::size_t row;
  std::int64_t multiplicity;  // common value of <chi|_N, theta^g>
};

/// Rows of Irr(G) over the G-orbit of theta, with Clifford homogeneity checked.
inline std::vector<Above> irr_above(const Section& S, std::size_t theta) {
  const auto orbit = orbit_of(S, theta);
  std::vector<std::uint8_t> in_orbit(S.normal_table().size(), 0);
  for (auto t : orbit) in_orbit[t] = 1;
  std::vector<Above> out;
  for (std::size_t i = 0; i < S.table().size(); ++i) {
    const auto e = S.multiplicity(i, theta);
    if (e == 0) continue;
    for (std::size_t t = 0; t < S.normal_table().size(); ++t) {
      const auto m = S.multiplicity(i, t);
      if (in_orbit[t] ? m != e : m != 0)
        throw ContractViolation("irr_above: restriction of row " + std::to_string(i) + " is not homogeneous on one orbit");
    }
    const auto theta1 = S.normal_table().row(theta).degree;
    if (static_cast<std::int64_t>(orbit.size()) * e * theta1 != S.table().row(i).degree)
      throw ContractViolation("irr_above: degree bookkeeping failed for row " + std::to_string(i));
    out.push_back({i, e});
  }
  return out;
}

/// (G, N, theta) with the data of Clifford's theorem.
struct CharacterTriple {
  Section section;
  std::size_t theta;
  Subgroup stabilizer;
  std::vector<std::size_t> orbit;
  std::vector<Above> above;

  const Character& theta_char() const { return section.normal_table().row(theta); }
  bool invariant() const { return orbit.size() == 1; }
};

inline CharacterTriple make_triple(const Section& S, std::size_t theta) {
  CharacterTriple t{S, theta, stabilizer_of(S, theta), orbit_of(S, theta), irr_above(S, theta)};
  if (t.stabilizer.index() != t.orbit.size()) throw ContractViolation("make_triple: orbit length differs from stabilizer index");
  return t;
}

enum class QuotientClass { supersolvable, odd, other };

inline const char* to_string(QuotientClass c) {
  switch (c) {
    case QuotientClass::supersolvable: return "supersolvable";
    case QuotientClass::odd: return "odd";
    default: return "other";
  }
}

inline QuotientClass quotient_class(const Section& S, const Bounds& bounds = {}) {
  const auto Q = quotient(S.group(), S.normal()).image;
  if (is_supersolvable(Q, bounds)) return QuotientClass::supersolvable;
  if (Q.order() % 2 == 1) return QuotientClass::odd;
  return QuotientClass::other;
}

/// Per-section memo for the triple checks: the class of G/N and the
/// sections over N of the stabilizers met so far.
/// Materialized subgroups of one group with their tables, by element set.
using SubgroupTables = std::map<std::vector<Element>, std::pair<Embedding, CharacterTable>>;

struct SectionCache {
  std::optional<QuotientClass> quotient;
  std::map<std::vector<Element>, std::pair<Embedding, Section>> stabilizers;
  SubgroupTables* tables = nullptr;  // may be shared by the sections of one group
};

struct Ramification {
  bool fully_ramified = false;
  std::int64_t e = 0;  // ramification index when fully ramified
  explicit operator bool() const { return fully_ramified; }
};

namespace detail {

inline Ramification ramification_of(const std::vector<Above>& above, std::size_t index) {
  if (above.size() != 1) return {};
  const auto e = above[0].multiplicity;
  if (static_cast<std::uint64_t>(e * e) != index) return {};
  return {true, e};
}

}  // namespace detail

/// The Section for (G(theta), N) with theta's row index in its own table.
inline std::pair<Section, std::size_t> stabilizer_section(const CharacterTriple& t, const Bounds& bounds = {},
                                                          SectionCache* cache = nullptr) {
  if (t.invariant()) return {t.section, t.theta};
  const std::vector<Element> key(t.stabilizer.elements().begin(), t.stabilizer.elements().end());
  auto build = [&] {
    if (cache && cache->tables) {
      auto it = cache->tables->find(key);
      if (it == cache->tables->end()) {
        auto emb = materialize(t.stabilizer);
        auto table = compute_table(emb.group, bounds);
        it = cache->tables->emplace(key, std::pair<Embedding, CharacterTable>(std::move(emb), std::move(table))).first;
      }
      const auto& [emb, table] = it->second;
      return std::pair<Embedding, Section>(emb, Section(table, emb.pull(t.section.normal()), bounds));
    }
    auto emb = materialize(t.stabilizer);
    Section S(compute_table(emb.group, bounds), emb.pull(t.section.normal()), bounds);
    return std::pair<Embedding, Section>(std::move(emb), std::move(S));
  };
  std::optional<std::pair<Embedding, Section>> local;
  const std::pair<Embedding, Section>* entry = nullptr;
  if (cache) {
    auto it = cache->stabilizers.find(key);
    if (it == cache->stabilizers.end()) it = cache->stabilizers.emplace(key, build()).first;
    entry = &it->second;
  } else {
    local.emplace(build());
    entry = &*local;
  }
  const auto& [Temb, ST] = *entry;
  // Identify theta through values on N's elements.
  const auto& thN = t.theta_char();
  const auto& embN = t.section.embedding();
  const auto& embNT = ST.embedding();
  for (std::size_t i = 0; i < ST.normal_table().size(); ++i) {
    bool same = true;
    for (Element x = 0; x < embNT.group.order() && same; ++x) {
      const Element inG = Temb.to_parent[embNT.to_parent[x]];
      same = ST.normal_table().row(i).at(x) == thN.at(embN.from_parent[inG]);
    }
    if (same) return {ST, i};
  }
  throw ContractViolation("stabilizer_section: theta not found in the stabilizer's normal table");
}

/// Fully ramified in G(theta)/N: one character above theta, of degree
/// e theta(1) with e^2 = |G(theta):N|.
inline Ramification is_fully_ramified(const CharacterTriple& t, const Bounds& bounds = {}, SectionCache* cache = nullptr) {
  if (t.invariant()) return detail::ramification_of(t.above, t.section.normal().index());
  if (t.stabilizer.order() == t.section.normal().order()) return {true, 1};
  std::uint64_t root = 0;
  if (!exact_sqrt(t.stabilizer.order() / t.section.normal().order(), root)) return {};
  const auto [ST, th] = stabilizer_section(t, bounds, cache);
  return detail::ramification_of(irr_above(ST, th), ST.normal().index());
}

/// Rows of M's table restricting exactly to theta. The Section is (M, N)
/// with theta M-invariant.
inline std::vector<std::size_t> extensions_of(const Section& MN, std::size_t theta) {
  if (!is_invariant(MN, theta)) throw ContractViolation("extensions_of: theta is not invariant in M");
  const auto& th = MN.normal_table().row(theta);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < MN.table().size(); ++i)
    if (MN.table().row(i).degree == th.degree && MN.multiplicity(i, theta) == 1) out.push_back(i);
  const auto& Q = quotient(MN.group(), MN.normal()).image;
  if (th.degree == 1 && Q.is_abelian() && !out.empty() && out.size() != MN.normal().index())
    throw ContractViolation("extensions_of: Gallagher count failed");
  return out;
}

struct HiggsReport {
  bool invariant = false;
  bool distinct_degrees = false;
  std::size_t count_above = 0;
  bool fully_ramified = false;
  std::int64_t e = 0;
  QuotientClass quotient = QuotientClass::other;
  std::vector<std::int64_t> degrees;
};

namespace detail {

inline std::string describe(const Section& S, std::size_t theta) {
  return S.group().label() + " |N|=" + std::to_string(S.normal().order()) + " theta=#" + std::to_string(theta) +
         " theta(1)=" + std::to_string(S.normal_table().row(theta).degree);
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace detail

/// Checks the two proved cases of Higgs' question: theta G-invariant with
/// pairwise distinct degrees above it and G/N supersolvable or of odd order
/// forces a single character above theta, fully ramified.
inline HiggsReport verify_higgs_case(const CharacterTriple& t, const Bounds& bounds = {}, SectionCache* cache = nullptr) {
  const auto& S = t.section;
  HiggsReport r;
  r.invariant = t.invariant();
  r.count_above = t.above.size();
  for (const auto& a : t.above) r.degrees.push_back(S.table().row(a.row).degree);
  auto sorted = r.degrees;
  std::sort(sorted.begin(), sorted.end());
  r.distinct_degrees = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (cache && !cache->quotient) cache->quotient = quotient_class(S, bounds);
  r.quotient = cache ? *cache->quotient : quotient_class(S, bounds);
  if (r.invariant) {
    const auto fr = detail::ramification_of(t.above, S.normal().index());
    r.fully_ramified = fr.fully_ramified;
    r.e = fr.e;
  }
  if (r.invariant && r.distinct_degrees && r.quotient != QuotientClass::other && !(r.count_above == 1 && r.fully_ramified))
    throw TheoremViolation("distinct degrees over an invariant character force full ramification",
                           detail::describe(S, t.theta) + " quotient=" + to_string(r.quotient) +
                               " degrees=" + detail::join(r.degrees));
  return r;
}

/// Exactly two characters above an invariant theta have equal degrees.
inline void check_two_characters(const CharacterTriple& t) {
  if (!t.invariant() || t.above.size() != 2) return;
  const auto& T = t.section.table();
  const auto a = T.row(t.above[0].row).degree, b = T.row(t.above[1].row).degree;
  if (a != b)
    throw TheoremViolation("two characters above an invariant character have equal degrees",
                           detail::describe(t.section, t.theta) + " degrees=" + std::to_string(a) + "," + std::to_string(b));
}

/// When theta is fully ramified in its stabilizer, the unique character of
/// G above it has degree |G:G(theta)| |G(theta):N|^(1/2) theta(1).
inline void check_degree_bookkeeping(const CharacterTriple& t, const Bounds& bounds = {}, SectionCache* cache = nullptr) {
  const auto fr = is_fully_ramified(t, bounds, cache);
  if (!fr) return;
  const auto expect = static_cast<std::int64_t>(t.stabilizer.index()) * fr.e * t.theta_char().degree;
  if (t.above.size() != 1 || t.section.table().row(t.above[0].row).degree != expect)
    throw TheoremViolation("degree of the character above a fully ramified character",
                           detail::describe(t.section, t.theta) + " expected=" + std::to_string(expect));
}

/// A fully ramified invariant character with G/N abelian forces G/N = A x A:
/// every elementary divisor of G/N occurs an even number of times.
inline bool check_abelian_fully_ramified(const CharacterTriple& t) {
  if (!t.invariant()) return false;
  if (!detail::ramification_of(t.above, t.section.normal().index())) return false;
  const auto Q = quotient(t.section.group(), t.section.normal()).image;
  if (!Q.is_abelian()) return false;
  std::map<std::uint64_t, int> count;
  for (auto d : abelian_invariants(Q)) ++count[d];
  for (const auto& [d, c] : count)
    if (c % 2 != 0)
      throw TheoremViolation("abelian quotient over a fully ramified character is A x A",
                             detail::describe(t.section, t.theta) + " divisor " + std::to_string(d) + " occurs " +
                                 std::to_string(c) + " times");
  return true;
}

struct ChiefSectionAlternative {
  bool invariant_member = false;  // some member of Irr(M|theta) is G-invariant
  bool transitive = false;        // C_G(M/N) is transitive on Irr(M|theta)
  std::size_t members = 0;
};

/// For theta G-invariant in N and M/N a chief factor of G: either some
/// member of Irr(M|theta) is G-invariant, or C_G(M/N) permutes Irr(M|theta)
/// transitively. GN and GM are the sections of G over N and over M; the
/// per-pair data is computed once and shared by every theta. Invariance
/// flags for the rows of N and M may be supplied when already known.
class ChiefSectionCheck {
 public:
  ChiefSectionCheck(const Section& GN, const Section& GM, const std::vector<bool>* invariant_N = nullptr,
                    const std::vector<bool>* invariant_M = nullptr)
      : GN_(GN), GM_(GM) {
    const auto& G = GN.group();
    const auto& N = GN.normal();
    const auto& M = GM.normal();
    if (!G.same_table(GM.group()) || !N.is_subset_of(M) || N == M)
      throw ContractViolation("check_chief_section_alternative: need N < M normal in the same group");

    // Irr(M|theta) by multiplicities in F_q; they lie in [0, phi(1)] with
    // phi(1) < q, so a zero residue means a zero multiplicity.
    q_ = GM.table().prime();
    E_ = GM.table().exponent();
    root_ = modp::pow(modp::primitive_root(q_), (q_ - 1) / E_, q_);
    const auto& embN = GN.embedding();
    const auto& embM = GM.embedding();
    const auto& nc = embN.group.classes();
    const std::uint64_t inv_n = modp::inv(N.order() % q_, q_);
    for (const auto& phi : GM.normal_table().rows()) {
      std::vector<std::uint64_t> v(nc.count());
      for (std::size_t c = 0; c < nc.count(); ++c) {
        const Element x = embN.to_parent[nc.representative[c]];
        const auto w = detail::reduce_mod(phi.at(embM.from_parent[x]), q_, root_, E_);
        v[c] = modp::mul(modp::mul(w, nc.size(c) % q_, q_), inv_n, q_);
      }
      restricted_.push_back(std::move(v));
    }

    // C_G(M/N) as a generating set.
    Subgroup C = trivial_subgroup(G);
    for (Element g = 0; g < G.order(); ++g) {
      if (C.contains(g)) continue;
      bool central = true;
      for (auto m : M.elements())
        if (!N.contains(G.commutator(g, m))) {
          central = false;
          break;
        }
      if (central) {
        gens_.push_back(g);
        C = generate(G, gens_);
      }
    }
    const std::size_t rows = GM.normal_table().size();
    for (auto g : gens_) {
      std::vector<std::size_t> perm(rows);
      for (std::size_t i = 0; i < rows; ++i) perm[i] = conjugate_row(GM, i, g);
      action_.push_back(std::move(perm));
    }
    if (invariant_M) {
      invariant_ = *invariant_M;
    } else {
      invariant_.resize(rows);
      for (std::size_t i = 0; i < rows; ++i) invariant_[i] = is_invariant(GM, i);
    }
    if (invariant_N) invariant_N_ = *invariant_N;
  }

  ChiefSectionAlternative operator()(std::size_t theta) const {
    const bool inv = invariant_N_.empty() ? is_invariant(GN_, theta) : invariant_N_[theta];
    if (!inv) throw ContractViolation("check_chief_section_alternative: theta is not G-invariant");
    const auto& th = GN_.normal_table().row(theta);
    std::vector<std::uint64_t> conj_theta;
    for (const auto& v : th.values) conj_theta.push_back(detail::reduce_mod(v.conj(), q_, root_, E_));
    std::vector<std::size_t> members;
    std::vector<std::uint8_t> member(restricted_.size(), 0);
    for (std::size_t i = 0; i < restricted_.size(); ++i) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < conj_theta.size(); ++c) acc = (acc + modp::mul(restricted_[i][c], conj_theta[c], q_)) % q_;
      if (acc != 0) {
        members.push_back(i);
        member[i] = 1;
      }
    }
    ChiefSectionAlternative r;
    r.members = members.size();
    for (auto i : members)
      if (invariant_[i]) r.invariant_member = true;
    std::vector<std::uint8_t> reached(restricted_.size(), 0);
    std::vector<std::size_t> orbit{members.front()};
    reached[members.front()] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& perm : action_) {
        const auto j = perm[orbit[k]];
        if (!reached[j]) {
          if (!member[j]) throw ContractViolation("check_chief_section_alternative: orbit leaves Irr(M|theta)");
          reached[j] = 1;
          orbit.push_back(j);
        }
      }
    r.transitive = orbit.size() == members.size();
    if (!r.invariant_member && !r.transitive)
      throw TheoremViolation("invariant member or transitive centralizer over a chief section",
                             detail::describe(GN_, theta) + " |M|=" + std::to_string(GM_.normal().order()) +
                                 " members=" + std::to_string(members.size()) + " orbit=" + std::to_string(orbit.size()));
    return r;
  }

 private:
  Section GN_, GM_;
  std::uint64_t q_ = 0, root_ = 0;
  std::uint32_t E_ = 1;
  std::vector<std::vector<std::uint64_t>> restricted_;  // phi on N's classes, weighted by |class|/|N|
  std::vector<Element> gens_;
  std::vector<std::vector<std::size_t>> action_;  // per generator, on Irr(M)
  std::vector<bool> invariant_;
  std::vector<bool> invariant_N_;
};

inline ChiefSectionAlternative check_chief_section_alternative(const Section& GN, std::size_t theta, const Section& GM) {
  return ChiefSectionCheck(GN, GM)(theta);
}

}  // namespace camina
