#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "camina/constructors.hpp"
#include "camina/normal.hpp"
#include "oracle.hpp"

using namespace camina;

namespace {

std::vector<std::size_t> sizes_of(const ConjugacyClasses& cc) {
  std::vector<std::size_t> s;
  for (std::size_t c = 0; c < cc.count(); ++c) s.push_back(cc.size(c));
  std::sort(s.begin(), s.end());
  return s;
}

oracle::ElementSet elems(const Subgroup& H) { return {H.elements().begin(), H.elements().end()}; }

Subgroup normal_of_order(const Group& G, std::size_t order) {
  for (const auto& N : normal_subgroups(G))
    if (N.order() == order) return N;
  throw std::runtime_error("no normal subgroup of that order");
}

std::vector<Group> small_pool() {
  return {cyclic(1), cyclic(4), cyclic(6), abelian({2, 2}), sym(3), generalized_quaternion(8), dihedral(4),
          alt(4), sym(4), dihedral(6), sl23_semidirect(), agl1(5), heisenberg(3), alt(5)};
}

}  // namespace

TEST(GroupCore, RejectsBadTables) {
  EXPECT_THROW(Group::from_table({1, 0, 0, 1}, 2, "bad"), InvalidGroup);  // identity not at 0
  EXPECT_THROW(Group::from_table({0, 1, 1, 1}, 2, "bad"), InvalidGroup);  // not Latin
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(Group::from_table(loop, 5, "loop"), InvalidGroup);
}

TEST(GroupCore, ConstructedGroupsSatisfyTableInvariants) {
  for (const auto& G : small_pool()) {
    const auto n = G.order();
    for (Element g = 0; g < n; ++g) {
      EXPECT_EQ(G.mul(0, g), g);
      EXPECT_EQ(G.mul(g, G.inv(g)), 0u);
      Element x = g;
      std::uint32_t k = 1;
      while (x != 0) {
        x = G.mul(x, g);
        ++k;
      }
      EXPECT_EQ(G.element_order(g), k);
    }
  }
}

TEST(ConjugacyClasses, SpecExamples) {
  EXPECT_EQ(sizes_of(cyclic(4).classes()), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(sizes_of(sym(3).classes()), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(sizes_of(generalized_quaternion(8).classes()), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(ConjugacyClasses, AgreeWithPairwiseOracle) {
  for (const auto& G : small_pool()) {
    const auto& cc = conjugacy_classes(G);
    EXPECT_EQ(sizes_of(cc), oracle::class_sizes(G)) << G.label();
    EXPECT_EQ(cc.members[0], std::vector<Element>{0});
  }
}

TEST(ConjugacyClasses, ClassEquationAndCentralizerOrders) {
  for (const auto& G : small_pool()) {
    const auto& cc = G.classes();
    std::size_t total = 0;
    for (std::size_t c = 0; c < cc.count(); ++c) {
      EXPECT_EQ(G.order() % cc.size(c), 0u);
      total += cc.size(c);
    }
    EXPECT_EQ(total, G.order());
    for (Element g = 0; g < G.order(); ++g)
      EXPECT_EQ(centralizer(G, g).order() * cc.size(cc.class_of[g]), G.order()) << G.label() << " g=" << g;
  }
}

TEST(Centralizer, SpecExamples) {
  const auto S3 = sym(3);
  EXPECT_TRUE(centralizer(S3, 0).is_whole());
  for (Element g = 0; g < S3.order(); ++g)
    if (S3.element_order(g) == 2) {
      const auto C = centralizer(S3, g);
      EXPECT_EQ(elems(C), oracle::closure(S3, {g}));
      EXPECT_EQ(C.order(), 2u);
    }
  const auto Q8 = generalized_quaternion(8);
  for (Element g = 0; g < 8; ++g)
    if (Q8.element_order(g) == 4) EXPECT_EQ(elems(centralizer(Q8, g)), oracle::closure(Q8, {g}));
}

TEST(CenterAndDerived, SpecExamples) {
  EXPECT_EQ(center(generalized_quaternion(8)).order(), 2u);
  const auto S3 = sym(3);
  const auto D = derived_subgroup(S3);
  EXPECT_EQ(D.order(), 3u);
  EXPECT_TRUE(D.is_normal());
  EXPECT_TRUE(center(cyclic(6)).is_whole());
  EXPECT_EQ(derived_subgroup(alt(4)).order(), 4u);
  EXPECT_EQ(derived_subgroup(alt(5)).order(), 60u);
}

TEST(NormalSubgroups, SpecExamples) {
  EXPECT_EQ(normal_subgroups(cyclic(5)).size(), 2u);
  EXPECT_EQ(normal_subgroups(cyclic(7)).size(), 2u);
  const auto s3 = normal_subgroups(sym(3));
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(s3[0].order(), 1u);
  EXPECT_EQ(s3[1].order(), 3u);
  EXPECT_EQ(s3[2].order(), 6u);
  EXPECT_EQ(normal_subgroups(generalized_quaternion(8)).size(), 6u);
}

TEST(NormalSubgroups, AgreeWithClassUnionOracle) {
  for (const auto& G : small_pool()) {
    std::vector<oracle::ElementSet> got;
    for (const auto& N : normal_subgroups(G)) got.push_back(elems(N));
    EXPECT_EQ(got, oracle::normal_subgroups_by_class_unions(G)) << G.label();
  }
}

TEST(NormalSubgroups, FormALattice) {
  for (const auto& G : small_pool()) {
    const auto normals = normal_subgroups(G);
    auto present = [&](const Subgroup& H) {
      return std::any_of(normals.begin(), normals.end(), [&](const Subgroup& N) { return N == H; });
    };
    for (const auto& A : normals)
      for (const auto& B : normals) {
        EXPECT_TRUE(present(intersection(A, B)));
        EXPECT_TRUE(present(join(A, B)));
      }
  }
}

TEST(NormalSubgroups, BoundIsEnforced) {
  Bounds b;
  b.subgroup_lattice = 10;
  EXPECT_THROW(normal_subgroups(sym(4), b), BoundExceeded);
}

TEST(MinimalNormal, SpecExamples) {
  const auto Q8 = generalized_quaternion(8);
  const auto mq = minimal_normal_subgroups(Q8);
  ASSERT_EQ(mq.size(), 1u);
  EXPECT_EQ(mq[0], center(Q8));
  const auto mk = minimal_normal_subgroups(abelian({2, 2}));
  EXPECT_EQ(mk.size(), 3u);
  for (const auto& M : mk) EXPECT_EQ(M.order(), 2u);
  const auto ma = minimal_normal_subgroups(alt(4));
  ASSERT_EQ(ma.size(), 1u);
  EXPECT_EQ(ma[0].order(), 4u);
  EXPECT_TRUE(is_elementary_abelian(ma[0]));
}

TEST(Quotient, SpecExamples) {
  const auto S3 = sym(3);
  const auto Qt = quotient(S3, trivial_subgroup(S3));
  EXPECT_TRUE(Qt.image.same_table(S3));

  EXPECT_EQ(quotient(S3, normal_of_order(S3, 3)).image.order(), 2u);

  const auto Q8 = generalized_quaternion(8);
  const auto K = quotient(Q8, center(Q8));
  EXPECT_EQ(K.image.order(), 4u);
  for (Element g = 1; g < 4; ++g) EXPECT_EQ(K.image.element_order(g), 2u);

  EXPECT_THROW(quotient(S3, generate(S3, {static_cast<Element>(S3.order() - 1)})), NotNormal);
}

TEST(Quotient, ProjectionIsHomomorphismWithUniformFibers) {
  for (const auto& G : small_pool()) {
    for (const auto& N : normal_subgroups(G)) {
      const auto q = quotient(G, N);
      EXPECT_EQ(q.image.order() * N.order(), G.order());
      std::vector<std::size_t> fiber(q.image.order(), 0);
      for (Element a = 0; a < G.order(); ++a) {
        ++fiber[q.projection[a]];
        for (Element b = 0; b < G.order(); ++b)
          ASSERT_EQ(q.projection[G.mul(a, b)], q.image.mul(q.projection[a], q.projection[b]));
      }
      for (auto f : fiber) EXPECT_EQ(f, N.order());
    }
  }
}

TEST(Radicals, SpecExamples) {
  const auto r6 = radicals(cyclic(6), 2);
  EXPECT_EQ(r6.O_p.order(), 2u);
  EXPECT_EQ(r6.O_pprime.order(), 3u);
  EXPECT_EQ(r6.O_upper_pprime.order(), 2u);
  EXPECT_EQ(r6.fitting.order(), 6u);

  const auto rq = radicals(generalized_quaternion(8), 2);
  EXPECT_EQ(rq.O_p.order(), 8u);
  EXPECT_EQ(rq.O_pprime.order(), 1u);

  const auto rs = radicals(sym(3), 3);
  EXPECT_EQ(rs.O_p.order(), 3u);
  EXPECT_EQ(rs.O_pprime.order(), 1u);
  EXPECT_EQ(rs.O_upper_pprime.order(), 3u);
}

TEST(Radicals, AgreeWithOracleAndAreConsistent) {
  for (const auto& G : small_pool()) {
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const auto r = radicals(G, p);
      EXPECT_EQ(elems(r.O_p), oracle::largest_normal(G, [p](std::size_t n) { return oracle::is_p_power(n, p); }));
      EXPECT_EQ(elems(r.O_pprime), oracle::largest_normal(G, [p](std::size_t n) { return n % p != 0; }));
      EXPECT_TRUE(intersection(r.O_p, r.O_pprime).is_trivial());
      EXPECT_TRUE(r.O_p.is_subset_of(r.fitting));
      // O^{p'} is the least normal subgroup with p'-index.
      EXPECT_NE((G.order() / r.O_upper_pprime.order()) % p, 0u);
      for (const auto& N : normal_subgroups(G))
        if ((G.order() / N.order()) % p != 0) EXPECT_TRUE(r.O_upper_pprime.is_subset_of(N)) << G.label();
    }
  }
}

TEST(IteratedSeries, S4AtTwoMatchesOracle) {
  const auto S4 = sym(4);
  const auto s = iterated_series(S4, 2);
  const auto op = oracle::largest_normal(S4, [](std::size_t n) { return oracle::is_p_power(n, 2); });
  const auto opp = oracle::preimage_of_largest(S4, op, [](std::size_t n) { return n % 2 != 0; });
  const auto oppp = oracle::preimage_of_largest(S4, opp, [](std::size_t n) { return oracle::is_p_power(n, 2); });
  EXPECT_EQ(elems(s.O_p), op);
  EXPECT_EQ(elems(s.O_p_pprime), opp);
  EXPECT_EQ(elems(s.O_p_pprime_p), oppp);
  // Frozen from the oracle.
  EXPECT_EQ(s.O_p.order(), 4u);
  EXPECT_EQ(s.O_p_pprime.order(), 12u);
  EXPECT_EQ(s.O_p_pprime_p.order(), 24u);
}

TEST(IteratedSeries, SpecExamples) {
  const auto s = iterated_series(cyclic(6), 3);
  EXPECT_EQ(s.O_p.order(), 3u);
  EXPECT_EQ(s.O_p_pprime.order(), 6u);
  EXPECT_EQ(s.O_p_pprime_p.order(), 6u);
  const auto h = iterated_series(heisenberg(3), 3);
  EXPECT_TRUE(h.O_p.is_whole());
  EXPECT_TRUE(h.O_p_pprime.is_whole());
  EXPECT_TRUE(h.O_p_pprime_p.is_whole());
}

TEST(Solvability, SpecExamples) {
  const auto S3 = sym(3);
  EXPECT_TRUE(is_solvable(S3));
  EXPECT_FALSE(is_nilpotent(S3));
  EXPECT_TRUE(is_supersolvable(S3));
  EXPECT_TRUE(is_solvable(alt(4)));
  EXPECT_FALSE(is_supersolvable(alt(4)));
  EXPECT_TRUE(is_nilpotent(generalized_quaternion(8)));
  EXPECT_FALSE(is_solvable(alt(5)));
  EXPECT_TRUE(is_supersolvable(sl23_semidirect()) == false);
}

TEST(Solvability, ChiefFactorsOfSolvableGroupsAreElementaryAbelian) {
  for (const auto& G : small_pool()) {
    const auto series = chief_series(G);
    std::size_t prod = 1;
    for (const auto& f : series) {
      prod *= f.order();
      EXPECT_TRUE(f.upper.is_normal());
      // Each step is minimal normal over the previous one.
      for (const auto& N : normal_subgroups(G))
        if (f.lower.is_subset_of(N) && N.is_subset_of(f.upper)) EXPECT_TRUE(N == f.lower || N == f.upper);
      if (is_solvable(G)) EXPECT_TRUE(chief_factor_is_elementary(f)) << G.label();
    }
    EXPECT_EQ(prod, G.order());
  }
}

TEST(Frobenius, SpecExamples) {
  const auto S3 = sym(3);
  const auto fs = is_frobenius_with_kernel(S3, normal_of_order(S3, 3));
  ASSERT_TRUE(fs);
  EXPECT_EQ(fs.complement->order(), 2u);

  const auto A4 = alt(4);
  const auto fa = is_frobenius_with_kernel(A4, normal_of_order(A4, 4));
  ASSERT_TRUE(fa);
  EXPECT_EQ(fa.complement->order(), 3u);

  const auto Q8 = generalized_quaternion(8);
  EXPECT_FALSE(is_frobenius_with_kernel(Q8, center(Q8)));

  const auto F72 = frobenius72_quaternion();
  const auto f72 = is_frobenius_with_kernel(F72, normal_of_order(F72, 9));
  ASSERT_TRUE(f72);
  EXPECT_EQ(f72.complement->order(), 8u);
}

namespace {

// Frobenius via the complement definition: some H with |H| = |G:N|,
// H meets each of its conjugates by elements outside H trivially, and N is
// what remains of G after removing the conjugates of H minus 1.
bool frobenius_by_complement(const Group& G, const oracle::ElementSet& N) {
  const std::size_t m = G.order() / N.size();
  if (N.size() == 1 || m == 1) return false;
  std::set<oracle::ElementSet> candidates;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = a; b < G.order(); ++b) {
      auto H = oracle::closure(G, {a, b});
      if (H.size() == m) candidates.insert(H);
    }
  for (const auto& H : candidates) {
    std::set<Element> hs(H.begin(), H.end());
    bool ok = true;
    std::set<Element> covered;
    for (Element g = 0; g < G.order() && ok; ++g) {
      std::set<Element> conj;
      for (auto h : H) conj.insert(G.mul(G.mul(g, h), G.inv(g)));
      if (!hs.count(g)) {
        for (auto x : conj)
          if (x != 0 && hs.count(x)) ok = false;
      }
      for (auto x : conj)
        if (x != 0) covered.insert(x);
    }
    if (!ok) continue;
    oracle::ElementSet rest;
    for (Element g = 0; g < G.order(); ++g)
      if (!covered.count(g)) rest.push_back(g);
    if (rest == N) return true;
  }
  return false;
}

}  // namespace

TEST(Frobenius, AgreesWithComplementDefinition) {
  for (const auto& G : small_pool()) {
    if (G.order() > 60) continue;
    for (const auto& N : normal_subgroups(G)) {
      const bool got = static_cast<bool>(is_frobenius_with_kernel(G, N));
      EXPECT_EQ(got, frobenius_by_complement(G, elems(N))) << G.label() << " |N|=" << N.order();
    }
  }
}

TEST(PprimeFixedPointFree, SpecExamples) {
  const auto A4 = alt(4);
  EXPECT_TRUE(pprime_elements_fpf(A4, normal_of_order(A4, 4), 2));
  const auto C6 = cyclic(6);
  EXPECT_FALSE(pprime_elements_fpf(C6, normal_of_order(C6, 3), 3));

  // Brute force: no element of order 3 in S4 centralizes a double transposition.
  const auto S4 = sym(4);
  const auto V4 = normal_of_order(S4, 4);
  bool oracle_fpf = true;
  for (Element g = 0; g < S4.order(); ++g)
    if (S4.element_order(g) == 3)
      for (auto x : V4.elements())
        if (x != 0 && S4.mul(g, x) == S4.mul(x, g)) oracle_fpf = false;
  EXPECT_TRUE(oracle_fpf);
  EXPECT_EQ(pprime_elements_fpf(S4, V4, 2), oracle_fpf);

  EXPECT_THROW(pprime_elements_fpf(S4, V4, 3), ContractViolation);
}

TEST(AbelianInvariants, Examples) {
  EXPECT_EQ(abelian_invariants(abelian({2, 4})), (std::vector<std::uint64_t>{2, 4}));
  EXPECT_EQ(abelian_invariants(cyclic(12)), (std::vector<std::uint64_t>{3, 4}));
  EXPECT_EQ(abelian_invariants(abelian({2, 2, 2})), (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_THROW(abelian_invariants(sym(3)), ContractViolation);
}
