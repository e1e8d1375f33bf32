#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camina/clifford.hpp"
#include "camina/constructors.hpp"
#include "camina/property_d.hpp"
#include "camina/report.hpp"

namespace camina {

/// Regression baselines for a corpus entry; unset fields are not checked.
struct Expected {
  std::optional<BchBucket> bch;              // nonabelian groups only
  std::optional<TheoremAType> theorem_a;     // over the unique minimal normal subgroup
  std::optional<std::int64_t> faithful_degree;  // the single degree of Irr(G|N) for that subgroup
};

struct CorpusEntry {
  std::string name;
  std::function<Group()> build;
  Expected expected;
};

namespace detail {

inline void add_abelian_groups(std::vector<CorpusEntry>& out, std::size_t max_order) {
  // Partitions of a, as parts in nondecreasing order.
  std::function<void(unsigned, unsigned, std::vector<unsigned>&, std::vector<std::vector<unsigned>>&)> parts =
      [&](unsigned left, unsigned min, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& acc) {
        if (left == 0) {
          acc.push_back(cur);
          return;
        }
        for (unsigned k = min; k <= left; ++k) {
          cur.push_back(k);
          parts(left - k, k, cur, acc);
          cur.pop_back();
        }
      };
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<std::vector<std::size_t>> shapes{{}};
    for (auto [p, a] : factorize(n)) {
      std::vector<std::vector<unsigned>> acc;
      std::vector<unsigned> cur;
      parts(a, 1, cur, acc);
      std::vector<std::vector<std::size_t>> next;
      for (const auto& s : shapes)
        for (const auto& part : acc) {
          auto t = s;
          for (auto k : part) {
            std::size_t q = 1;
            for (unsigned i = 0; i < k; ++i) q *= p;
            t.push_back(q);
          }
          next.push_back(std::move(t));
        }
      shapes = std::move(next);
    }
    for (const auto& s : shapes) {
      std::string name = "C1";
      if (!s.empty()) {
        name.clear();
        for (auto d : s) name += (name.empty() ? "C" : "xC") + std::to_string(d);
      }
      out.push_back({name, [s] { return s.empty() ? cyclic(1).with_label("C1") : abelian(s); }, {}});
    }
  }
}

inline std::vector<std::vector<Element>> cyclic_action(std::size_t n, std::size_t m, std::size_t k) {
  return cyclic_power_action(n, m, k);
}

}  // namespace detail

/// The shipped corpus, in a fixed order.
inline std::vector<CorpusEntry> corpus() {
  using B = BchBucket;
  using T = TheoremAType;
  std::vector<CorpusEntry> out;
  detail::add_abelian_groups(out, 32);

  for (std::size_t n = 3; n <= 32; ++n) {
    Expected e;
    e.bch = n == 4 ? B::extraspecial_2 : n == 3 ? B::frobenius_cyclic : B::not_distinct;
    if (n == 4) e.theorem_a = T::Type1;
    out.push_back({"D" + std::to_string(2 * n), [n] { return dihedral(n); }, e});
  }
  for (std::size_t q : {8u, 16u, 32u, 64u}) {
    Expected e;
    e.bch = q == 8 ? B::extraspecial_2 : B::not_distinct;
    if (q == 8) e.theorem_a = T::Type1;
    out.push_back({"Q" + std::to_string(q), [q] { return generalized_quaternion(q); }, e});
  }
  for (unsigned m = 1; m <= 3; ++m)
    for (char sign : {'+', '-'})
      out.push_back({std::string("2^(1+") + std::to_string(2 * m) + ")" + sign, [m, sign] { return extraspecial_2(m, sign); },
                     {B::extraspecial_2, T::Type1, std::int64_t{1} << m}});
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u})
    out.push_back({"AGL1(" + std::to_string(q) + ")", [q] { return agl1(q); },
                   {B::frobenius_cyclic, T::Type2, static_cast<std::int64_t>(q - 1)}});
  out.push_back({"(C3xC3):Q8", [] { return frobenius72_quaternion(); }, {B::frobenius_quaternion, T::Type2, 8}});

  out.push_back({"S3", [] { return sym(3); }, {B::frobenius_cyclic, T::Type2, 2}});
  out.push_back({"A4", [] { return alt(4); }, {B::frobenius_cyclic, T::Type2, 3}});
  out.push_back({"S4", [] { return sym(4); }, {B::not_distinct, {}, {}}});
  out.push_back({"A5", [] { return alt(5); }, {B::not_distinct, {}, {}}});
  out.push_back({"S5", [] { return sym(5); }, {B::not_distinct, {}, {}}});
  out.push_back({"Q8:C3", [] { return sl23_semidirect(); }, {B::not_distinct, {}, {}}});
  out.push_back({"GL(2,3)", [] { return matrix_group(3, 2, {{0, 2, 1, 0}, {1, 1, 0, 1}, {2, 0, 0, 1}}, "GL(2,3)").group; },
                 {B::not_distinct, {}, {}}});

  auto semidirect_cyclic = [](std::size_t n, std::size_t m, std::size_t k) {
    const auto label = "C" + std::to_string(n) + ":C" + std::to_string(m);
    return [n, m, k, label] { return semidirect_product(cyclic(n), cyclic(m), detail::cyclic_action(n, m, k), label); };
  };
  out.push_back({"C7:C3", semidirect_cyclic(7, 3, 2), {B::not_distinct, {}, {}}});
  out.push_back({"C13:C3", semidirect_cyclic(13, 3, 3), {B::not_distinct, {}, {}}});
  out.push_back({"C11:C5", semidirect_cyclic(11, 5, 3), {B::not_distinct, {}, {}}});
  out.push_back({"C3:C4", semidirect_cyclic(3, 4, 2), {B::not_distinct, {}, {}}});
  out.push_back({"C9:C3", semidirect_cyclic(9, 3, 4), {B::not_distinct, {}, {}}});
  out.push_back({"C5:C8", semidirect_cyclic(5, 8, 2), {B::not_distinct, {}, {}}});
  out.push_back({"(C5xC5):C3", [] { return affine_group(matrix_group(5, 2, {{0, 4, 1, 4}}, "C3"), "(C5xC5):C3"); },
                 {B::not_distinct, {}, {}}});
  out.push_back({"(C3xC3):C4", [] { return affine_group(matrix_group(3, 2, {{0, 2, 1, 0}}, "C4"), "(C3xC3):C4"); },
                 {B::not_distinct, {}, {}}});
  out.push_back({"(C3xC3):C2", [] { return affine_group(matrix_group(3, 2, {{2, 0, 0, 2}}, "C2"), "(C3xC3):C2"); },
                 {B::not_distinct, {}, {}}});
  out.push_back({"(C2xC2xC2):C7", [] { return affine_group(matrix_group(2, 3, {{0, 0, 1, 1, 0, 1, 0, 1, 0}}, "C7"), "(C2xC2xC2):C7"); },
                 {B::frobenius_cyclic, T::Type2, 7}});
  out.push_back({"Heis(3)", [] { return heisenberg(3); }, {B::not_distinct, T::NotD, {}}});
  out.push_back({"Heis(5)", [] { return heisenberg(5); }, {B::not_distinct, T::NotD, {}}});
  out.push_back({"Heis(3):C2", [] { return heisenberg_torus(3, 2); }, {B::not_distinct, T::Type3, 6}});
  out.push_back({"Q8xC3", [] { return direct_product(generalized_quaternion(8), cyclic(3), "Q8xC3"); }, {B::not_distinct, {}, {}}});
  out.push_back({"D8xC2", [] { return direct_product(dihedral(4), cyclic(2), "D8xC2"); }, {B::not_distinct, {}, {}}});
  out.push_back({"S3xS3", [] { return direct_product(sym(3), sym(3), "S3xS3"); }, {B::not_distinct, {}, {}}});
  out.push_back({"S3xC3", [] { return direct_product(sym(3), cyclic(3), "S3xC3"); }, {B::not_distinct, {}, {}}});
  return out;
}

/// Exact orthogonality of both kinds, degree sum and class count.
inline void check_table(const CharacterTable& T) {
  const auto& G = T.group();
  const auto& cc = T.classes();
  const auto n = static_cast<std::int64_t>(G.order());
  auto fail = [&](const std::string& what) { throw TheoremViolation("character table soundness", G.label() + ": " + what); };
  if (T.size() != cc.count()) fail("row count " + std::to_string(T.size()) + " != class count " + std::to_string(cc.count()));
  std::int64_t squares = 0;
  for (const auto& r : T.rows()) squares += r.degree * r.degree;
  if (squares != n) fail("sum of squared degrees " + std::to_string(squares));
  const std::size_t k = cc.count();
  std::vector<std::vector<Cyclotomic>> conj(T.size());
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) conj[i].push_back(T.row(i).values[c].conj());
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i; j < T.size(); ++j) {
      Cyclotomic acc;
      for (std::size_t c = 0; c < k; ++c)
        acc += static_cast<std::int64_t>(cc.size(c)) * (T.row(i).values[c] * conj[j][c]);
      if (acc != Cyclotomic::integer(i == j ? n : 0))
        fail("rows " + std::to_string(i) + "," + std::to_string(j) + " inner product " + acc.to_string());
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = c; d < k; ++d) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < T.size(); ++i) acc += T.row(i).values[c] * conj[i][d];
      const auto expect = c == d ? n / static_cast<std::int64_t>(cc.size(c)) : 0;
      if (acc != Cyclotomic::integer(expect))
        fail("columns " + std::to_string(c) + "," + std::to_string(d) + " sum " + acc.to_string());
    }
}

struct CorpusTotals {
  std::size_t groups = 0;
  std::size_t camina_pairs_checked = 0;
  std::size_t camina_pairs = 0;
  std::size_t theorem_a_pairs = 0;
  std::map<std::string, std::size_t> types;
  std::size_t type3_witnesses = 0;
  std::size_t bch_distinct = 0;
  std::size_t triples = 0;
  std::size_t invariant_triples = 0;
  std::size_t higgs_cases = 0;
  std::size_t higgs_cases_proper = 0;  // with N < G
  std::size_t two_character_cases = 0;
  std::size_t abelian_fully_ramified = 0;
  std::size_t abelian_fully_ramified_proper = 0;
  std::size_t chief_alternatives = 0;
  std::size_t expectations_checked = 0;
  std::size_t mismatches = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
};

struct CorpusRun {
  Report report;
  CorpusTotals totals;
};

/// Runs every check on one group, appending `<name>.<key>` lines to the
/// report. TheoremViolation propagates to the caller.
inline void analyze_entry(const CorpusEntry& entry, const Group& G, Report& rep, CorpusTotals& tot,
                          const Bounds& bounds) {
  const auto key = [&](const std::string& k) { return entry.name + "." + k; };
  auto expect_eq = [&](const std::string& what, const std::string& want, const std::string& got) {
    ++tot.expectations_checked;
    if (want == got) return;
    ++tot.mismatches;
    rep.add(key("mismatch." + what), "expected " + want + " got " + got);
  };

  const auto T = compute_table(G, bounds);
  check_table(T);
  rep.add(key("order"), G.order());
  rep.add(key("classes"), T.size());
  rep.add(key("degrees"), T.degrees());
  const bool solvable = is_solvable(G, bounds);
  rep.add(key("solvable"), solvable);

  const auto normals = normal_subgroups(G, bounds);
  rep.add(key("normal-subgroups"), normals.size());

  std::size_t camina = 0;
  for (const auto& N : normals) {
    if (N.is_trivial() || N.is_whole()) continue;
    const bool a = is_camina_centralizer(G, N);
    const bool b = is_camina_vanishing(T, N);
    if (a != b)
      throw TheoremViolation("centralizer and vanishing Camina criteria agree",
                             detail::pair_name(G, N) + " centralizer=" + (a ? "true" : "false"));
    ++tot.camina_pairs_checked;
    camina += a;
  }
  tot.camina_pairs += camina;
  rep.add(key("camina-pairs"), camina);

  const auto mins = minimal_normal_subgroups(G, bounds);
  for (std::size_t i = 0; i < mins.size(); ++i) {
    const auto r = classify_theorem_A(T, mins[i], bounds);
    const auto pre = key("minimal." + std::to_string(i) + ".");
    rep.add(pre + "order", mins[i].order());
    rep.add(pre + "type", to_string(r.type));
    rep.add(pre + "degrees", r.degrees);
    if (r.kuisch) rep.add(pre + "kuisch", to_string(*r.kuisch));
    ++tot.types[to_string(r.type)];
    if (r.type == TheoremAType::Type1 || r.type == TheoremAType::Type2 || r.type == TheoremAType::Type3)
      ++tot.theorem_a_pairs;
    if (r.type == TheoremAType::Type3) ++tot.type3_witnesses;
    if (mins.size() == 1) {
      if (entry.expected.theorem_a) expect_eq("type", to_string(*entry.expected.theorem_a), to_string(r.type));
      if (entry.expected.faithful_degree) {
        const std::string got = r.degrees.size() == 1 ? std::to_string(r.degrees[0]) : detail::join(r.degrees);
        expect_eq("faithful-degree", std::to_string(*entry.expected.faithful_degree), got);
      }
    }
  }
  if (mins.size() != 1 && (entry.expected.theorem_a || entry.expected.faithful_degree))
    expect_eq("unique-minimal-normal", "true", "false");

  if (!G.is_abelian()) {
    const auto b = bch_scan(T, bounds);
    rep.add(key("bch"), to_string(b.bucket));
    tot.bch_distinct += b.distinct;
    if (entry.expected.bch) expect_eq("bch", to_string(*entry.expected.bch), to_string(b.bucket));
  }

  SubgroupTables tables;
  std::vector<Section> sections;
  sections.reserve(normals.size());
  std::vector<std::vector<bool>> invariant_rows;
  std::size_t triples = 0, invariant = 0, higgs = 0, higgs_proper = 0, two = 0, abelian_fr = 0, abelian_fr_proper = 0;
  for (const auto& N : normals) {
    sections.emplace_back(T, N, bounds);
    const auto& S = sections.back();
    auto& flags = invariant_rows.emplace_back();
    SectionCache cache;
    cache.tables = &tables;
    for (std::size_t t = 0; t < S.normal_table().size(); ++t) {
      const auto tr = make_triple(S, t);
      const auto h = verify_higgs_case(tr, bounds, &cache);
      flags.push_back(h.invariant);
      check_two_characters(tr);
      check_degree_bookkeeping(tr, bounds, &cache);
      const bool fr_abelian = check_abelian_fully_ramified(tr);
      const bool higgs_case = h.invariant && h.distinct_degrees && h.quotient != QuotientClass::other;
      ++triples;
      invariant += h.invariant;
      higgs += higgs_case;
      higgs_proper += higgs_case && !N.is_whole();
      abelian_fr += fr_abelian;
      abelian_fr_proper += fr_abelian && !N.is_whole();
      two += h.invariant && h.count_above == 2;
    }
  }
  rep.add(key("triples"), triples);
  rep.add(key("invariant-triples"), invariant);
  rep.add(key("higgs-cases"), higgs);
  rep.add(key("higgs-cases-proper"), higgs_proper);
  rep.add(key("two-character-cases"), two);
  rep.add(key("abelian-fully-ramified"), abelian_fr);
  rep.add(key("abelian-fully-ramified-proper"), abelian_fr_proper);
  tot.triples += triples;
  tot.invariant_triples += invariant;
  tot.higgs_cases += higgs;
  tot.higgs_cases_proper += higgs_proper;
  tot.two_character_cases += two;
  tot.abelian_fully_ramified += abelian_fr;
  tot.abelian_fully_ramified_proper += abelian_fr_proper;

  if (solvable) {
    std::size_t alternatives = 0;
    for (std::size_t a = 0; a < normals.size(); ++a)
      for (std::size_t b = 0; b < normals.size(); ++b) {
        const auto &N = normals[a], &M = normals[b];
        if (a == b || !N.is_subset_of(M)) continue;
        bool chief = prime_power(M.order() / N.order()).second == 1;
        if (!chief) {
          chief = true;
          for (const auto& K : normals)
            if (K.order() > N.order() && K.order() < M.order() && N.is_subset_of(K) && K.is_subset_of(M)) {
              chief = false;
              break;
            }
        }
        if (!chief) continue;
        const ChiefSectionCheck check(sections[a], sections[b], &invariant_rows[a], &invariant_rows[b]);
        for (std::size_t t = 0; t < sections[a].normal_table().size(); ++t) {
          if (!invariant_rows[a][t]) continue;
          const auto r = check(t);
          if (!r.invariant_member && !r.transitive)
            throw TheoremViolation("invariant member or transitive centralizer over a chief factor",
                                   detail::describe(sections[a], t) + " |M|=" + std::to_string(M.order()));
          ++alternatives;
        }
      }
    rep.add(key("chief-alternatives"), alternatives);
    tot.chief_alternatives += alternatives;
  }
}

/// Runs the corpus entries whose name contains the filter. Violations and
/// errors are recorded in the report and counted, not thrown.
inline CorpusRun run_corpus(const std::string& filter = {}, const Bounds& bounds = {5000, 512}) {
  CorpusRun run;
  auto& rep = run.report;
  auto& tot = run.totals;
  for (const auto& entry : corpus()) {
    if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
    ++tot.groups;
    try {
      analyze_entry(entry, entry.build(), rep, tot, bounds);
    } catch (const TheoremViolation& v) {
      ++tot.violations;
      rep.add(entry.name + ".violation", v.what());
    } catch (const Error& e) {
      ++tot.errors;
      rep.add(entry.name + ".error", e.what());
    }
  }
  rep.add("total.groups", tot.groups);
  rep.add("total.camina-pairs-checked", tot.camina_pairs_checked);
  rep.add("total.camina-pairs", tot.camina_pairs);
  rep.add("total.theorem-a-pairs", tot.theorem_a_pairs);
  for (const auto& [t, c] : tot.types) rep.add("total.type." + t, c);
  rep.add("total.type3-witnesses", tot.type3_witnesses);
  rep.add("total.bch-distinct", tot.bch_distinct);
  rep.add("total.triples", tot.triples);
  rep.add("total.invariant-triples", tot.invariant_triples);
  rep.add("total.higgs-cases", tot.higgs_cases);
  rep.add("total.higgs-cases-proper", tot.higgs_cases_proper);
  rep.add("total.two-character-cases", tot.two_character_cases);
  rep.add("total.abelian-fully-ramified", tot.abelian_fully_ramified);
  rep.add("total.abelian-fully-ramified-proper", tot.abelian_fully_ramified_proper);
  rep.add("total.chief-alternatives", tot.chief_alternatives);
  rep.add("total.expectations-checked", tot.expectations_checked);
  rep.add("total.mismatches", tot.mismatches);
  rep.add("total.violations", tot.violations);
  rep.add("total.errors", tot.errors);
  return run;
}

}  // namespace camina
