#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "camina/character_table.hpp"
#include "camina/constructors.hpp"
#include "camina/normal.hpp"
#include "oracle.hpp"

using namespace camina;

namespace {

std::vector<Group> pool() {
  return {cyclic(1),  cyclic(3),       cyclic(8),    abelian({2, 4}),  sym(3),         generalized_quaternion(8),
          dihedral(4), alt(4),         sym(4),       dihedral(6),      sl23_semidirect(), agl1(5),
          agl1(8),    heisenberg(3),   alt(5),       extraspecial_2(2, '+'), frobenius72_quaternion()};
}

std::vector<std::complex<double>> on_elements(const Character& chi) {
  std::vector<std::complex<double>> v;
  for (Element g = 0; g < chi.group.order(); ++g) v.push_back(chi.at(g).to_complex());
  return v;
}

std::size_t class_of_order(const Group& G, std::uint32_t ord) {
  const auto& cc = G.classes();
  for (std::size_t c = 0; c < cc.count(); ++c)
    if (G.element_order(cc.representative[c]) == ord) return c;
  throw std::runtime_error("no class of that order");
}

Subgroup normal_of_order(const Group& G, std::size_t order) {
  for (const auto& N : normal_subgroups(G))
    if (N.order() == order) return N;
  throw std::runtime_error("no normal subgroup of that order");
}

}  // namespace

TEST(Cyclotomic, BasicIdentities) {
  const auto z = Cyclotomic::zeta_power(3, 1);
  EXPECT_EQ(z + z * z, Cyclotomic::integer(-1));
  EXPECT_EQ(z * z * z, Cyclotomic::integer(1, 3));
  EXPECT_EQ(z.conj(), z * z);
  const auto i4 = Cyclotomic::zeta_power(4, 1);
  EXPECT_EQ(i4 * i4, Cyclotomic::integer(-1));
  EXPECT_TRUE((i4 + i4.conj()).is_zero());
  // zeta_6 = -zeta_3^2 across conductors
  EXPECT_EQ(Cyclotomic::zeta_power(6, 1), -(z * z));
  EXPECT_EQ(Cyclotomic::zeta_power(12, 4), z);
}

TEST(Cyclotomic, PolynomialDegreesAreEulerPhi) {
  for (std::uint32_t n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_polynomial(n)->size() - 1, euler_phi(n)) << n;
}

TEST(Cyclotomic, ArithmeticMatchesComplexEvaluation) {
  std::mt19937_64 rng(7);
  for (std::uint32_t e : {1u, 3u, 4u, 5u, 8u, 9u, 12u, 15u, 24u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> pa(e), pb(e);
      for (auto& c : pa) c = static_cast<std::int64_t>(rng() % 7) - 3;
      for (auto& c : pb) c = static_cast<std::int64_t>(rng() % 7) - 3;
      const auto a = Cyclotomic::from_poly(e, pa), b = Cyclotomic::from_poly(e, pb);
      EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-8);
      EXPECT_LT(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 1e-8);
      EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 1e-8);
      EXPECT_EQ(Cyclotomic::parse(a.to_string(), e), a) << a.to_string();
    }
  }
}

TEST(Cyclotomic, ParseLiterals) {
  EXPECT_EQ(Cyclotomic::parse("-1-z3^1"), Cyclotomic::zeta_power(3, 2));
  EXPECT_EQ(Cyclotomic::parse("7"), Cyclotomic::integer(7));
  EXPECT_EQ(Cyclotomic::parse("2*z8^1+z8^3").to_string(), "2*z8^1+z8^3");
  EXPECT_THROW(Cyclotomic::parse(""), ParseError);
  EXPECT_THROW(Cyclotomic::parse("z3"), ParseError);
  EXPECT_THROW(Cyclotomic::parse("z3^1+z4^1"), ParseError);
  EXPECT_THROW(Cyclotomic::parse("1 + 2"), ParseError);
}

TEST(CharacterTable, CyclicThree) {
  const auto T = compute_table(cyclic(3));
  ASSERT_EQ(T.size(), 3u);
  const auto z = Cyclotomic::zeta_power(3, 1);
  std::set<std::string> rows;
  for (const auto& chi : T.rows()) {
    EXPECT_EQ(chi.degree, 1);
    // values are 1, w, w^2 on the elements 0, g, g^2 for some cube root w
    const auto w = chi.at(1);
    EXPECT_EQ(w * w * w, Cyclotomic::integer(1));
    EXPECT_EQ(chi.at(2), w * w);
    rows.insert(w.to_string());
  }
  EXPECT_EQ(rows, (std::set<std::string>{"1", z.to_string(), (z * z).to_string()}));
  EXPECT_EQ(T.row(0).at(1), Cyclotomic::integer(1));
}

TEST(CharacterTable, SymmetricThree) {
  const auto G = sym(3);
  const auto T = compute_table(G);
  EXPECT_EQ(T.degrees(), (std::vector<std::int64_t>{1, 1, 2}));
  const auto& chi = T.row(2);
  EXPECT_EQ(chi.on_class(0), Cyclotomic::integer(2));
  EXPECT_EQ(chi.on_class(class_of_order(G, 2)), Cyclotomic::integer(0));
  EXPECT_EQ(chi.on_class(class_of_order(G, 3)), Cyclotomic::integer(-1));
}

TEST(CharacterTable, Quaternion) {
  const auto G = generalized_quaternion(8);
  const auto T = compute_table(G);
  EXPECT_EQ(T.degrees(), (std::vector<std::int64_t>{1, 1, 1, 1, 2}));
  const auto& chi = T.row(4);
  const auto& cc = G.classes();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const auto ord = G.element_order(cc.representative[c]);
    const std::int64_t expect = ord == 1 ? 2 : ord == 2 ? -2 : 0;
    EXPECT_EQ(chi.on_class(c), Cyclotomic::integer(expect));
  }
}

TEST(CharacterTable, ShapeAndDegreeEquation) {
  for (const auto& G : pool()) {
    const auto T = compute_table(G);
    EXPECT_EQ(T.size(), G.classes().count()) << G.label();
    std::int64_t s = 0;
    for (auto d : T.degrees()) {
      s += d * d;
      EXPECT_EQ(static_cast<std::int64_t>(G.order()) % d, 0) << G.label();
    }
    EXPECT_EQ(s, static_cast<std::int64_t>(G.order()));
    for (const auto& v : T.row(0).values) EXPECT_EQ(v, Cyclotomic::integer(1));
    for (std::size_t i = 1; i + 1 < T.size(); ++i) EXPECT_LE(T.row(i).degree, T.row(i + 1).degree);
  }
}

TEST(CharacterTable, BothOrthogonalityRelationsExact) {
  for (const auto& G : pool()) {
    const auto T = compute_table(G);
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = 0; j < T.size(); ++j) EXPECT_EQ(inner_product(T.row(i), T.row(j)), i == j ? 1 : 0) << G.label();
    const auto& cc = G.classes();
    for (std::size_t a = 0; a < cc.count(); ++a)
      for (std::size_t b = 0; b < cc.count(); ++b) {
        Cyclotomic s;
        for (const auto& chi : T.rows()) s += chi.on_class(a) * chi.on_class(b).conj();
        const auto expect = a == b ? static_cast<std::int64_t>(centralizer(G, cc.representative[a]).order()) : 0;
        EXPECT_EQ(s, Cyclotomic::integer(expect)) << G.label();
      }
  }
}

// Independent check: orthonormal class functions whose central characters
// satisfy the brute-force class-sum multiplication are exactly Irr(G).
TEST(CharacterTable, CentralCharactersRespectStructureConstants) {
  for (const auto& G : pool()) {
    if (G.order() > 80) continue;
    const auto T = compute_table(G);
    const auto a = oracle::structure_constants(G);
    const auto& cc = G.classes();
    const std::size_t r = cc.count();
    for (const auto& chi : T.rows()) {
      std::vector<std::complex<double>> w(r);
      for (std::size_t i = 0; i < r; ++i)
        w[i] = static_cast<double>(cc.size(i)) * chi.on_class(i).to_complex() / static_cast<double>(chi.degree);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          std::complex<double> rhs = 0;
          for (std::size_t k = 0; k < r; ++k) rhs += static_cast<double>(a[i][j][k]) * w[k];
          EXPECT_LT(std::abs(w[i] * w[j] - rhs), 1e-6) << G.label();
        }
      const auto v = on_elements(chi);
      EXPECT_LT(std::abs(oracle::inner(v, v) - 1.0), 1e-9);
    }
  }
}

TEST(CharacterTable, AbelianRowsFormAGroupWithTheSameProfile) {
  for (const auto& G : {cyclic(6), abelian({2, 2}), abelian({2, 4}), abelian({3, 3}), cyclic(8)}) {
    const auto T = compute_table(G);
    std::map<std::vector<Cyclotomic>, std::size_t> index;
    for (std::size_t i = 0; i < T.size(); ++i) {
      EXPECT_EQ(T.row(i).degree, 1);
      index[T.row(i).values] = i;
    }
    std::multiset<std::uint32_t> row_orders, elt_orders;
    for (Element g = 0; g < G.order(); ++g) elt_orders.insert(G.element_order(g));
    for (const auto& chi : T.rows()) {
      for (const auto& psi : T.rows()) {
        std::vector<Cyclotomic> prod;
        for (std::size_t c = 0; c < chi.values.size(); ++c) prod.push_back(chi.values[c] * psi.values[c]);
        EXPECT_TRUE(index.count(prod));
      }
      auto cur = chi.values;
      std::uint32_t k = 1;
      while (cur != T.row(0).values) {
        for (std::size_t c = 0; c < cur.size(); ++c) cur[c] = cur[c] * chi.values[c];
        ++k;
      }
      row_orders.insert(k);
    }
    EXPECT_EQ(row_orders, elt_orders) << G.label();
  }
}

TEST(CharacterTable, GaloisConjugationPermutesRows) {
  for (const auto& G : pool()) {
    const auto T = compute_table(G);
    std::set<std::vector<Cyclotomic>> rows;
    for (const auto& chi : T.rows()) rows.insert(chi.values);
    const auto e = T.exponent();
    for (std::uint32_t k = 1; k < e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      for (const auto& chi : T.rows()) {
        std::vector<Cyclotomic> img;
        for (const auto& v : chi.values) img.push_back(v.galois(k));
        EXPECT_TRUE(rows.count(img)) << G.label() << " k=" << k;
      }
    }
  }
}

TEST(CharacterTable, Deterministic) {
  for (const auto& G : pool()) {
    const auto A = compute_table(G), B = compute_table(G);
    EXPECT_EQ(A.prime(), B.prime());
    ASSERT_EQ(A.size(), B.size());
    for (std::size_t i = 0; i < A.size(); ++i) EXPECT_EQ(A.row(i).values, B.row(i).values);
  }
}

TEST(CharacterTable, PrimeSelection) {
  for (const auto& G : pool()) {
    const auto T = compute_table(G);
    const auto q = T.prime();
    EXPECT_TRUE(is_prime(q));
    EXPECT_EQ((q - 1) % T.exponent(), 0u);
    EXPECT_GT(q, 2 * G.order());
    for (std::uint64_t s = T.exponent() + 1; s < q; s += T.exponent()) EXPECT_FALSE(s > 2 * G.order() && is_prime(s));
  }
}

TEST(CharacterTable, BoundIsEnforced) {
  Bounds b;
  b.character_pipeline = 20;
  EXPECT_THROW(compute_table(sym(4), b), BoundExceeded);
}

TEST(Kernel, SpecExamples) {
  const auto S3 = sym(3);
  const auto T = compute_table(S3);
  EXPECT_TRUE(kernel(T.row(0)).is_whole());
  EXPECT_EQ(kernel(T.row(1)), normal_of_order(S3, 3));
  const auto TQ = compute_table(generalized_quaternion(8));
  EXPECT_TRUE(is_faithful(TQ.row(4)));
}

TEST(Kernel, AgreesWithDirectEvaluation) {
  for (const auto& G : pool()) {
    const auto T = compute_table(G);
    for (const auto& chi : T.rows()) {
      const auto v = on_elements(chi);
      std::vector<Element> expect;
      for (Element g = 0; g < G.order(); ++g)
        if (oracle::is_kernel_element(v, g)) expect.push_back(g);
      const auto K = kernel(chi);
      EXPECT_EQ(std::vector<Element>(K.elements().begin(), K.elements().end()), expect) << G.label();
    }
  }
}

TEST(InnerProduct, RegularCharacter) {
  for (const auto& G : pool()) {
    const auto T = compute_table(G);
    const auto reg = regular_character(T);
    EXPECT_EQ(reg.degree, static_cast<std::int64_t>(G.order()));
    for (Element g = 1; g < G.order(); ++g) EXPECT_TRUE(reg.at(g).is_zero());
    for (const auto& chi : T.rows()) EXPECT_EQ(inner_product(reg, chi), chi.degree);
  }
}

TEST(InnerProduct, RejectsNonCharacters) {
  const auto T = compute_table(cyclic(3));
  Character half = T.row(1);
  half.values[1] = Cyclotomic::integer(0, 3);
  half.values[2] = Cyclotomic::integer(0, 3);
  EXPECT_THROW(inner_product(half, T.row(0)), NonIntegral);
}

TEST(Restrict, SpecExamples) {
  const auto Q8 = generalized_quaternion(8);
  const auto TQ = compute_table(Q8);
  const auto Z = materialize(center(Q8));
  const auto TZ = compute_table(Z.group);
  EXPECT_EQ(restrict(TQ.row(0), Z, TZ), (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(restrict(TQ.row(4), Z, TZ), (std::vector<std::int64_t>{0, 2}));

  const auto S3 = sym(3);
  const auto TS = compute_table(S3);
  const auto A = materialize(normal_of_order(S3, 3));
  const auto TA = compute_table(A.group);
  EXPECT_EQ(restrict(TS.row(2), A, TA), (std::vector<std::int64_t>{0, 1, 1}));
}

TEST(Restrict, AgreesWithFloatingPointOracleOnAllNormalSubgroups) {
  for (const auto& G : pool()) {
    if (G.order() > 72) continue;
    const auto T = compute_table(G);
    for (const auto& N : normal_subgroups(G)) {
      const auto emb = materialize(N);
      const auto TN = compute_table(emb.group);
      for (const auto& chi : T.rows()) {
        const auto m = restrict(chi, emb, TN);
        for (std::size_t i = 0; i < TN.size(); ++i) {
          std::vector<std::complex<double>> a, b;
          for (Element h = 0; h < emb.group.order(); ++h) {
            a.push_back(chi.at(emb.to_parent[h]).to_complex());
            b.push_back(TN.row(i).at(h).to_complex());
          }
          EXPECT_LT(std::abs(oracle::inner(a, b) - static_cast<double>(m[i])), 1e-9) << G.label();
        }
      }
    }
  }
}
