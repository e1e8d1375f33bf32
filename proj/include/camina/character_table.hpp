#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "camina/cyclotomic.hpp"
#include "camina/group.hpp"
#include "camina/number_theory.hpp"

namespace camina {

/// A class function of a group with exact values, one per conjugacy class.
struct Character {
  Group group;
  std::vector<Cyclotomic> values;
  std::int64_t degree = 0;
  /// Per class: multiplicity of the eigenvalue 1 of the representing matrix.
  /// Empty for class functions that are not table rows.
  std::vector<std::int64_t> trivial_multiplicity;

  const Cyclotomic& on_class(std::size_t c) const { return values[c]; }
  const Cyclotomic& at(Element g) const { return values[group.classes().class_of[g]]; }
};

/// The irreducible characters of a group. Row 0 is the trivial character;
/// the others are sorted by degree and then by their canonical values.
class CharacterTable {
 public:
  const Group& group() const { return group_; }
  const ConjugacyClasses& classes() const { return group_.classes(); }
  const std::vector<Character>& rows() const { return rows_; }
  const Character& row(std::size_t i) const { return rows_[i]; }
  std::size_t size() const { return rows_.size(); }
  std::uint64_t prime() const { return prime_; }
  std::uint32_t exponent() const { return exponent_; }

  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> d;
    for (const auto& r : rows_) d.push_back(r.degree);
    return d;
  }

 private:
  friend CharacterTable compute_table(const Group&, const Bounds&);
  Group group_;
  std::vector<Character> rows_;
  std::uint64_t prime_ = 0;
  std::uint32_t exponent_ = 1;
};

namespace detail {

using Vec = std::vector<std::uint64_t>;

/// Basis in reduced column-echelon form: basis[i][pivot[i]] = 1 and
/// basis[k][pivot[i]] = 0 for k != i.
struct Subspace {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivot;
};

inline Subspace echelonize(std::vector<Vec> vecs, std::uint64_t q) {
  Subspace S;
  for (auto& v : vecs) {
    for (std::size_t i = 0; i < S.basis.size(); ++i) {
      const std::uint64_t c = v[S.pivot[i]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + q - modp::mul(c, S.basis[i][k], q)) % q;
    }
    std::size_t piv = v.size();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        piv = k;
        break;
      }
    if (piv == v.size()) continue;
    const std::uint64_t inv = modp::inv(v[piv], q);
    for (auto& x : v) x = modp::mul(x, inv, q);
    for (std::size_t i = 0; i < S.basis.size(); ++i) {
      const std::uint64_t c = S.basis[i][piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) S.basis[i][k] = (S.basis[i][k] + q - modp::mul(c, v[k], q)) % q;
    }
    S.basis.push_back(std::move(v));
    S.pivot.push_back(piv);
  }
  // Order by pivot so that results do not depend on input order.
  std::vector<std::size_t> idx(S.basis.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return S.pivot[a] < S.pivot[b]; });
  Subspace out;
  for (auto i : idx) {
    out.basis.push_back(std::move(S.basis[i]));
    out.pivot.push_back(S.pivot[i]);
  }
  return out;
}

/// Null space of a d x d matrix (row-major) over F_q.
inline std::vector<Vec> null_space(std::vector<Vec> A, std::uint64_t q) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    const std::uint64_t inv = modp::inv(A[r][c], q);
    for (auto& x : A[r]) x = modp::mul(x, inv, q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const std::uint64_t f = A[i][c];
      for (std::size_t k = 0; k < cols; ++k) A[i][k] = (A[i][k] + q - modp::mul(f, A[r][k], q)) % q;
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<std::uint8_t> is_piv(cols, 0);
  for (auto c : pivcol) is_piv[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = (q - A[i][f]) % q;
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial (constant term first) via Hessenberg reduction.
inline Vec char_poly(std::vector<Vec> H, std::uint64_t q) {
  const std::size_t d = H.size();
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t i = j + 1;
    while (i < d && H[i][j] == 0) ++i;
    if (i == d) continue;
    if (i != j + 1) {
      std::swap(H[i], H[j + 1]);
      for (std::size_t k = 0; k < d; ++k) std::swap(H[k][i], H[k][j + 1]);
    }
    const std::uint64_t tinv = modp::inv(H[j + 1][j], q);
    for (std::size_t k = j + 2; k < d; ++k) {
      const std::uint64_t u = modp::mul(H[k][j], tinv, q);
      if (u == 0) continue;
      for (std::size_t c = 0; c < d; ++c) H[k][c] = (H[k][c] + q - modp::mul(u, H[j + 1][c], q)) % q;
      for (std::size_t rr = 0; rr < d; ++rr) H[rr][j + 1] = (H[rr][j + 1] + modp::mul(u, H[rr][k], q)) % q;
    }
  }
  std::vector<Vec> p(d + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    Vec cur(m + 1, 0);
    const std::uint64_t h = H[m - 1][m - 1];
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] = (cur[k + 1] + p[m - 1][k]) % q;
      cur[k] = (cur[k] + q - modp::mul(h, p[m - 1][k], q)) % q;
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = modp::mul(t, H[m - i][m - i - 1], q);
      const std::uint64_t f = modp::mul(t, H[m - i - 1][m - 1], q);
      if (f == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] = (cur[k] + q - modp::mul(f, p[m - i - 1][k], q)) % q;
    }
    p[m] = std::move(cur);
  }
  return p[d];
}

inline std::uint64_t select_prime(std::uint64_t e, std::uint64_t n) {
  for (std::uint64_t q = e + 1; q < (std::uint64_t{1} << 31); q += e)
    if (q > 2 * n && is_prime(q)) return q;
  throw NoSuitablePrime("no prime q = 1 (mod " + std::to_string(e) + ") with q > " + std::to_string(2 * n));
}

}  // namespace detail

/// Irreducible characters by the Burnside-Dixon method: simultaneous
/// eigenvectors of the class-multiplication matrices over F_q, then exact
/// lifting of each value from its eigenvalue multiplicities.
inline CharacterTable compute_table(const Group& G, const Bounds& bounds = {}) {
  using detail::Vec;
  const std::uint64_t n = G.order();
  if (n > bounds.character_pipeline)
    throw BoundExceeded("compute_table: |G| = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bounds.character_pipeline));
  const auto& cc = G.classes();
  const std::size_t r = cc.count();
  const auto e = static_cast<std::uint32_t>(G.exponent());
  const std::uint64_t q = detail::select_prime(e, n);

  std::vector<std::size_t> inv_class(r);
  for (std::size_t j = 0; j < r; ++j) inv_class[j] = cc.class_of[G.inv(cc.representative[j])];

  // M_j[k][l] = #{x in C_j : x^-1 z_l in C_k}; the central characters are
  // common right eigenvectors.
  auto class_matrix = [&](std::size_t j) {
    std::vector<Vec> M(r, Vec(r, 0));
    for (std::size_t l = 0; l < r; ++l) {
      const Element z = cc.representative[l];
      for (auto x : cc.members[j]) {
        const auto k = cc.class_of[G.mul(G.inv(x), z)];
        M[k][l] = (M[k][l] + 1) % q;
      }
    }
    return M;
  };

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cc.size(a) < cc.size(b); });

  std::vector<detail::Subspace> spaces;
  {
    std::vector<Vec> id;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      id.push_back(std::move(v));
    }
    spaces.push_back(detail::echelonize(std::move(id), q));
  }

  for (auto j : order) {
    if (j == 0) continue;
    bool all_split = true;
    for (const auto& S : spaces)
      if (S.basis.size() > 1) all_split = false;
    if (all_split) break;
    const auto M = class_matrix(j);
    std::vector<detail::Subspace> next;
    for (auto& S : spaces) {
      const std::size_t d = S.basis.size();
      if (d == 1) {
        next.push_back(std::move(S));
        continue;
      }
      // Restricted matrix in the echelon coordinates.
      std::vector<Vec> A(d, Vec(d, 0));
      std::vector<Vec> images(d);
      for (std::size_t i = 0; i < d; ++i) {
        Vec w(r, 0);
        for (std::size_t k = 0; k < r; ++k) {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < r; ++l)
            if (M[k][l] && S.basis[i][l]) acc = (acc + modp::mul(M[k][l], S.basis[i][l], q)) % q;
          w[k] = acc;
        }
        for (std::size_t k = 0; k < d; ++k) A[k][i] = w[S.pivot[k]];
      }
      const Vec cp = detail::char_poly(A, q);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t lam = 0; lam < q; ++lam) {
        std::uint64_t acc = 0;
        for (std::size_t k = cp.size(); k-- > 0;) acc = (modp::mul(acc, lam, q) + cp[k]) % q;
        if (acc == 0) roots.push_back(lam);
      }
      if (roots.size() == 1) {
        next.push_back(std::move(S));
        continue;
      }
      std::size_t total = 0;
      for (auto lam : roots) {
        auto B = A;
        for (std::size_t k = 0; k < d; ++k) B[k][k] = (B[k][k] + q - lam) % q;
        auto ker = detail::null_space(std::move(B), q);
        std::vector<Vec> vecs;
        for (const auto& c : ker) {
          Vec v(r, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (c[i])
              for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + modp::mul(c[i], S.basis[i][k], q)) % q;
          vecs.push_back(std::move(v));
        }
        total += vecs.size();
        next.push_back(detail::echelonize(std::move(vecs), q));
      }
      if (total != d) throw SplitFailure("compute_table: class matrix not diagonalizable on a subspace");
    }
    spaces = std::move(next);
  }

  CharacterTable T;
  T.group_ = G;
  T.prime_ = q;
  T.exponent_ = e;

  const std::uint64_t root = modp::pow(modp::primitive_root(q), (q - 1) / e, q);

  // powers[j][i] = class of rep_j^i
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t j = 0; j < r; ++j) {
    const Element g = cc.representative[j];
    Element x = 0;
    for (std::uint32_t i = 0; i < G.element_order(g); ++i) {
      powers[j].push_back(cc.class_of[x]);
      x = G.mul(x, g);
    }
  }

  for (const auto& S : spaces) {
    if (S.basis.size() != 1) throw SplitFailure("compute_table: eigenspace did not split to dimension 1");
    Vec omega = S.basis[0];
    if (omega[0] == 0) throw SplitFailure("compute_table: central character vanishes at the identity");
    const std::uint64_t o0 = modp::inv(omega[0], q);
    for (auto& x : omega) x = modp::mul(x, o0, q);

    std::uint64_t t = 0;
    for (std::size_t j = 0; j < r; ++j)
      t = (t + modp::mul(modp::mul(omega[j], omega[inv_class[j]], q), modp::inv(cc.size(j) % q, q), q)) % q;
    if (t == 0) throw SplitFailure("compute_table: degenerate degree equation");
    const std::uint64_t d2 = modp::mul(n % q, modp::inv(t, q), q);
    std::int64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d)
      if (d * d % q == d2) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    if (degree == 0) throw SplitFailure("compute_table: degree is not recoverable");

    Vec modval(r);
    for (std::size_t j = 0; j < r; ++j)
      modval[j] = modp::mul(modp::mul(static_cast<std::uint64_t>(degree), omega[j], q), modp::inv(cc.size(j) % q, q), q);

    Character chi;
    chi.group = G;
    chi.degree = degree;
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t o = powers[j].size();
      const std::uint64_t step = e / o;
      const std::uint64_t inv_o = modp::inv(o % q, q);
      std::vector<std::int64_t> poly(e, 0);
      std::int64_t total = 0;
      for (std::uint64_t s = 0; s < o; ++s) {
        // multiplicity of eigenvalue zeta_e^(step*s)
        const std::uint64_t w = modp::pow(root, (e - (step * s) % e) % e, q);
        std::uint64_t acc = 0, wi = 1;
        for (std::uint64_t i = 0; i < o; ++i) {
          acc = (acc + modp::mul(modval[powers[j][i]], wi, q)) % q;
          wi = modp::mul(wi, w, q);
        }
        const std::uint64_t m = modp::mul(acc, inv_o, q);
        if (m > static_cast<std::uint64_t>(degree)) throw SplitFailure("compute_table: eigenvalue multiplicity out of range");
        poly[step * s] = static_cast<std::int64_t>(m);
        total += static_cast<std::int64_t>(m);
      }
      if (total != degree) throw SplitFailure("compute_table: multiplicities do not sum to the degree");
      chi.trivial_multiplicity.push_back(poly[0]);
      chi.values.push_back(Cyclotomic::from_poly(e, std::move(poly)));
    }
    T.rows_.push_back(std::move(chi));
  }

  auto is_trivial = [](const Character& c) {
    if (c.degree != 1) return false;
    for (auto m : c.trivial_multiplicity)
      if (m != 1) return false;
    return true;
  };
  std::sort(T.rows_.begin(), T.rows_.end(), [&](const Character& a, const Character& b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });

  std::int64_t sum_sq = 0;
  for (const auto& row : T.rows_) sum_sq += row.degree * row.degree;
  if (T.rows_.size() != r || sum_sq != static_cast<std::int64_t>(n))
    throw SplitFailure("compute_table: degree equation sum d^2 = |G| failed");
  return T;
}

/// {g : chi(g) = chi(1)}, read off the eigenvalue-1 multiplicities.
inline Subgroup kernel(const Character& chi) {
  const auto& G = chi.group;
  if (chi.trivial_multiplicity.empty()) throw ContractViolation("kernel: character is not a table row");
  std::vector<Element> k;
  for (Element g = 0; g < G.order(); ++g)
    if (chi.trivial_multiplicity[G.classes().class_of[g]] == chi.degree) k.push_back(g);
  auto K = Subgroup::from_closed(G, std::move(k));
  if (!K.is_normal()) throw ContractViolation("kernel: result is not normal");
  return K;
}

inline bool is_faithful(const Character& chi) { return kernel(chi).is_trivial(); }

/// <chi, psi> = (1/|G|) sum_g chi(g) conj(psi(g)); both must be characters
/// of the same group.
inline std::int64_t inner_product(const Character& chi, const Character& psi) {
  const auto& G = chi.group;
  if (!G.same_table(psi.group)) throw ContractViolation("inner_product: characters of different groups");
  const auto& cc = G.classes();
  Cyclotomic acc;
  for (std::size_t c = 0; c < cc.count(); ++c)
    acc += static_cast<std::int64_t>(cc.size(c)) * (chi.values[c] * psi.values[c].conj());
  if (!acc.is_integer()) throw NonIntegral("inner_product: sum is not rational: " + acc.to_string());
  const auto v = acc.to_integer();
  const auto n = static_cast<std::int64_t>(G.order());
  if (v % n != 0) throw NonIntegral("inner_product: sum " + std::to_string(v) + " not divisible by |G|");
  return v / n;
}

/// Multiplicities of the irreducible characters of a subgroup (given as an
/// embedding with its table) in the restriction of chi.
inline std::vector<std::int64_t> restrict(const Character& chi, const Embedding& sub, const CharacterTable& sub_table) {
  const auto& H = sub.group;
  if (!H.same_table(sub_table.group())) throw ContractViolation("restrict: table does not belong to the subgroup");
  const auto& hc = H.classes();
  const auto n = static_cast<std::int64_t>(H.order());
  std::vector<Cyclotomic> res;
  res.reserve(hc.count());
  for (std::size_t c = 0; c < hc.count(); ++c) res.push_back(chi.at(sub.to_parent[hc.representative[c]]));
  std::vector<std::int64_t> m;
  std::int64_t deg = 0;
  for (const auto& theta : sub_table.rows()) {
    Cyclotomic acc;
    for (std::size_t c = 0; c < hc.count(); ++c)
      acc += static_cast<std::int64_t>(hc.size(c)) * (res[c] * theta.values[c].conj());
    if (!acc.is_integer() || acc.to_integer() % n != 0)
      throw NonIntegral("restrict: multiplicity is not an integer: " + acc.to_string());
    const auto v = acc.to_integer() / n;
    if (v < 0) throw NonIntegral("restrict: negative multiplicity");
    m.push_back(v);
    deg += v * theta.degree;
  }
  if (deg != chi.degree) throw NonIntegral("restrict: restricted degree mismatch");
  return m;
}

/// The regular character sum_chi chi(1) chi, built from the table.
inline Character regular_character(const CharacterTable& T) {
  Character reg;
  reg.group = T.group();
  reg.values.assign(T.classes().count(), Cyclotomic::integer(0, T.exponent()));
  for (const auto& row : T.rows())
    for (std::size_t c = 0; c < reg.values.size(); ++c) reg.values[c] += row.degree * row.values[c];
  reg.degree = reg.values[0].to_integer();
  return reg;
}

}  // namespace camina
