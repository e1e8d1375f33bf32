#include <gtest/gtest.h>

#include <set>

#include "camina/corpus.hpp"
#include "oracle.hpp"

using namespace camina;

namespace {

std::size_t partitions(unsigned n) {
  static const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11};
  return p[n];
}

// Number of abelian groups of order n: product of partition numbers of the
// exponents in its factorization, by trial division.
std::size_t abelian_count(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t p = 2; n > 1; ++p) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    count *= partitions(a);
  }
  return count;
}

}  // namespace

TEST(Corpus, NamesAreUniqueAndAbelianGroupsComplete) {
  const auto entries = corpus();
  std::set<std::string> names;
  for (const auto& e : entries) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  std::size_t expect = 0;
  for (std::size_t n = 1; n <= 32; ++n) expect += abelian_count(n);
  std::size_t abelian = 0;
  for (const auto& e : entries) {
    const auto G = e.build();
    if (G.is_abelian() && G.order() <= 32) ++abelian;
  }
  // Cyclic groups C1, C2 and the dihedral family start at order 6, so every
  // abelian entry of order <= 32 comes from the abelian sweep.
  EXPECT_EQ(abelian, expect);
  EXPECT_EQ(expect, 55u);
}

TEST(Corpus, RequiredFamiliesArePresent) {
  std::set<std::string> names;
  for (const auto& e : corpus()) names.insert(e.name);
  for (const char* n : {"D64", "Q64", "2^(1+6)+", "2^(1+6)-", "AGL1(16)", "(C3xC3):Q8", "S3", "S4", "A4", "Q8:C3", "C7:C3",
                        "(C5xC5):C3"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Corpus, EntriesAreGroupsOfTheStatedShape) {
  for (const auto& e : corpus()) {
    const auto G = e.build();
    if (G.order() > 64) continue;
    std::vector<Element> table;
    for (Element a = 0; a < G.order(); ++a)
      for (Element b = 0; b < G.order(); ++b) table.push_back(G.mul(a, b));
    EXPECT_NO_THROW(Group::from_table(table, G.order(), e.name)) << e.name;
  }
}

TEST(CheckTable, AcceptsComputedTables) {
  for (const auto& G : {cyclic(12), sym(4), alt(5), generalized_quaternion(16), frobenius72_quaternion()})
    EXPECT_NO_THROW(check_table(compute_table(G))) << G.label();
}

TEST(RunCorpus, AffineFamilyIsTypeTwo) {
  const auto run = run_corpus("AGL1");
  EXPECT_EQ(run.totals.groups, 9u);
  EXPECT_EQ(run.totals.violations, 0u);
  EXPECT_EQ(run.totals.errors, 0u);
  EXPECT_EQ(run.totals.mismatches, 0u);
  EXPECT_EQ(run.totals.types.at("Type2"), 9u);
  EXPECT_EQ(run.totals.bch_distinct, 9u);
  EXPECT_EQ(run.report.get("AGL1(9).minimal.0.degrees"), "8");
}

TEST(RunCorpus, SmallExtraspecialGroupsAreTypeOne) {
  const auto run = run_corpus("2^(1+4)");
  EXPECT_EQ(run.totals.groups, 2u);
  EXPECT_EQ(run.totals.violations, 0u);
  EXPECT_EQ(run.totals.types.at("Type1"), 2u);
  EXPECT_EQ(run.report.get("2^(1+4)+.minimal.0.degrees"), "4");
  EXPECT_EQ(run.report.get("2^(1+4)-.bch"), "extraspecial-2");
}

TEST(RunCorpus, TypeThreeWitness) {
  const auto run = run_corpus("Heis(3):C2");
  EXPECT_EQ(run.totals.type3_witnesses, 1u);
  EXPECT_EQ(run.report.get("Heis(3):C2.minimal.0.kuisch"), "i");
}

TEST(RunCorpus, ReportsAreDeterministic) {
  const auto a = run_corpus("D1").report.str();
  const auto b = run_corpus("D1").report.str();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("report-version = 1\n", 0), 0u);
  EXPECT_NE(a.find("D16.order = 16"), std::string::npos);
}

TEST(RunCorpus, FilterWithoutMatchesIsEmpty) {
  const auto run = run_corpus("no such group");
  EXPECT_EQ(run.totals.groups, 0u);
  EXPECT_EQ(run.report.get("total.groups"), "0");
}
