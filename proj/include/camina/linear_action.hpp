#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "camina/error.hpp"
#include "camina/finite_field.hpp"
#include "camina/number_theory.hpp"

namespace camina {

struct ActionBounds {
  std::uint64_t group_order = 1'000'000;
  std::uint64_t vectors = std::uint64_t{1} << 20;
};

namespace detail {

struct MatrixHash {
  std::size_t operator()(const MatrixSpace::Matrix& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : m) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

inline std::string matrix_string(const MatrixSpace::Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + std::to_string(m[i]);
  return s + "]";
}

}  // namespace detail

/// A matrix group acting on GF(p)^n. Vectors are encoded as in MatrixSpace.
/// The group is closed on construction; orbits are computed on first use.
class LinearAction {
 public:
  using Matrix = MatrixSpace::Matrix;

  LinearAction(std::uint32_t p, std::uint32_t n, std::vector<Matrix> generators, ActionBounds bounds = {})
      : space_{p, n}, generators_(std::move(generators)), bounds_(bounds) {
    if (!is_prime(p)) throw ContractViolation("LinearAction: " + std::to_string(p) + " is not prime");
    if (n == 0) throw ContractViolation("LinearAction: dimension must be positive");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      count *= p;
      if (count > bounds_.vectors)
        throw BoundExceeded("LinearAction: p^n exceeds bound " + std::to_string(bounds_.vectors));
    }
    for (auto& g : generators_) {
      if (g.size() != static_cast<std::size_t>(n) * n)
        throw ContractViolation("LinearAction: generator has " + std::to_string(g.size()) + " entries");
      for (auto& c : g) c %= p;
      if (space_.det(g) == 0) throw ContractViolation("LinearAction: singular generator " + detail::matrix_string(g));
    }
    close();
  }

  std::uint32_t prime() const { return space_.p; }
  std::uint32_t dim() const { return space_.n; }
  const MatrixSpace& space() const { return space_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  std::uint64_t group_order() const { return order_; }
  std::uint64_t vector_count() const { return space_.vector_count(); }

  /// Orbits on all of V, numbered by least member; orbit 0 is {0}.
  const std::vector<std::vector<std::uint64_t>>& orbits() const {
    if (!orbits_) compute_orbits();
    return orbits_->members;
  }

  std::size_t orbit_index(std::uint64_t v) const {
    if (!orbits_) compute_orbits();
    return orbits_->orbit_of[v];
  }

 private:
  struct Orbits {
    std::vector<std::vector<std::uint64_t>> members;
    std::vector<std::size_t> orbit_of;
  };

  void close() {
    std::unordered_set<Matrix, detail::MatrixHash> seen{space_.identity()};
    std::deque<Matrix> queue{space_.identity()};
    while (!queue.empty()) {
      const auto x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : generators_) {
        auto y = space_.mul(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > bounds_.group_order)
            throw BoundExceeded("LinearAction: group order exceeds bound " + std::to_string(bounds_.group_order));
          queue.push_back(std::move(y));
        }
      }
    }
    order_ = seen.size();
  }

  void compute_orbits() const {
    const auto count = space_.vector_count();
    std::vector<std::vector<std::uint64_t>> images;
    for (const auto& g : generators_) {
      std::vector<std::uint64_t> img(count);
      for (std::uint64_t v = 0; v < count; ++v) img[v] = space_.apply(g, v);
      images.push_back(std::move(img));
    }
    Orbits o;
    constexpr auto unseen = static_cast<std::size_t>(-1);
    o.orbit_of.assign(count, unseen);
    for (std::uint64_t v = 0; v < count; ++v) {
      if (o.orbit_of[v] != unseen) continue;
      const std::size_t id = o.members.size();
      std::vector<std::uint64_t> orbit{v};
      o.orbit_of[v] = id;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& img : images) {
          const auto w = img[orbit[i]];
          if (o.orbit_of[w] == unseen) {
            o.orbit_of[w] = id;
            orbit.push_back(w);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      o.members.push_back(std::move(orbit));
    }
    orbits_ = std::make_shared<const Orbits>(std::move(o));
  }

  MatrixSpace space_;
  std::vector<Matrix> generators_;
  ActionBounds bounds_;
  std::uint64_t order_ = 1;
  mutable std::shared_ptr<const Orbits> orbits_;
};

/// Orbit sizes on V - {0}, ascending.
inline std::vector<std::uint64_t> orbit_sizes(const LinearAction& a) {
  std::vector<std::uint64_t> sizes;
  const auto& orbits = a.orbits();
  for (std::size_t i = 1; i < orbits.size(); ++i) sizes.push_back(orbits[i].size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline bool is_transitive_nonzero(const LinearAction& a) { return a.orbits().size() == 2; }

inline std::size_t regular_orbit_count(const LinearAction& a) {
  std::size_t count = 0;
  for (auto s : orbit_sizes(a)) count += s == a.group_order();
  return count;
}

/// Whether -O is an orbit of the same size as O for every orbit O.
inline bool negation_pairing(const LinearAction& a) {
  if (a.prime() == 2) throw EvenCharacteristic("negation_pairing: characteristic 2");
  const auto& orbits = a.orbits();
  for (const auto& O : orbits) {
    const auto target = a.orbit_index(a.space().negate(O.front()));
    if (orbits[target].size() != O.size()) return false;
    for (auto v : O)
      if (a.orbit_index(a.space().negate(v)) != target) return false;
  }
  return true;
}

namespace detail {

inline void require_odd_odd(const LinearAction& a, const char* who) {
  if (a.prime() == 2) throw EvenCharacteristic(std::string(who) + ": characteristic 2");
  if (a.group_order() % 2 == 0)
    throw EvenOrder(std::string(who) + ": group order " + std::to_string(a.group_order()) + " is even");
}

inline std::string sizes_string(const std::vector<std::uint64_t>& sizes) {
  std::string s;
  for (auto x : sizes) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

inline std::string action_name(const LinearAction& a) {
  std::string s = "GF(" + std::to_string(a.prime()) + ")^" + std::to_string(a.dim()) + " gens";
  for (const auto& g : a.generators()) s += " " + matrix_string(g);
  return s;
}

// Rank of a set of encoded vectors, stopping once it reaches n.
inline std::uint32_t span_rank(const MatrixSpace& V, const std::vector<std::uint64_t>& vectors) {
  std::vector<std::vector<std::uint32_t>> basis;  // row echelon, pivot = first nonzero
  std::vector<std::uint32_t> pivots;
  for (auto enc : vectors) {
    auto x = V.decode(enc);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto c = x[pivots[b]];
      if (c == 0) continue;
      for (std::uint32_t k = 0; k < V.n; ++k)
        x[k] = static_cast<std::uint32_t>((x[k] + static_cast<std::uint64_t>(V.p - c) * basis[b][k]) % V.p);
    }
    std::uint32_t piv = 0;
    while (piv < V.n && x[piv] == 0) ++piv;
    if (piv == V.n) continue;
    const auto inv = modp::inv(x[piv], V.p);
    for (auto& c : x) c = static_cast<std::uint32_t>(c * inv % V.p);
    for (auto& row : basis) {
      const auto c = row[piv];
      if (c == 0) continue;
      for (std::uint32_t k = 0; k < V.n; ++k)
        row[k] = static_cast<std::uint32_t>((row[k] + static_cast<std::uint64_t>(V.p - c) * x[k]) % V.p);
    }
    basis.push_back(std::move(x));
    pivots.push_back(piv);
    if (basis.size() == V.n) break;
  }
  return static_cast<std::uint32_t>(basis.size());
}

}  // namespace detail

/// Whether the orbit-size multiset on V* has a repeated value. Throws
/// TheoremViolation when it does not.
inline bool dade_duplicate_check(const LinearAction& a) {
  detail::require_odd_odd(a, "dade_duplicate_check");
  const auto sizes = orbit_sizes(a);
  if (std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) return true;
  throw TheoremViolation("two orbits of equal length on V*",
                         detail::action_name(a) + " sizes " + detail::sizes_string(sizes));
}

/// No proper nonzero invariant subspace: every orbit spans V.
inline bool is_irreducible(const LinearAction& a) {
  const auto& orbits = a.orbits();
  for (std::size_t i = 1; i < orbits.size(); ++i)
    if (detail::span_rank(a.space(), orbits[i]) != a.dim()) return false;
  return true;
}

struct OrbitScan {
  bool irreducible = false;
  bool distinct = false;
  bool transitive = false;
  bool odd_odd = false;
  bool hypothesis = false;  // odd_odd, irreducible and distinct
  std::vector<std::uint64_t> sizes;
};

/// Distinct orbit sizes force transitivity for irreducible odd-order groups
/// in odd characteristic. Other actions are reported without assertion.
inline OrbitScan distinct_sizes_scan(const LinearAction& a) {
  OrbitScan r;
  r.sizes = orbit_sizes(a);
  r.irreducible = is_irreducible(a);
  r.distinct = std::adjacent_find(r.sizes.begin(), r.sizes.end()) == r.sizes.end();
  r.transitive = is_transitive_nonzero(a);
  r.odd_odd = a.prime() != 2 && a.group_order() % 2 == 1;
  r.hypothesis = r.odd_odd && r.irreducible && r.distinct;
  if (r.hypothesis && !r.transitive)
    throw TheoremViolation("distinct orbit sizes imply transitivity on V*",
                           detail::action_name(a) + " sizes " + detail::sizes_string(r.sizes));
  return r;
}

/// All subgroups of GL(n, p) generated by at most two elements passing the
/// filter, deduplicated by element set and ordered by (order, elements).
/// Cyclic subgroups come from single generators, the rest from pairs.
template <typename Filter>
std::vector<LinearAction> two_generated_subgroups(std::uint32_t p, std::uint32_t n, Filter keep,
                                                  std::uint64_t max_matrices = std::uint64_t{1} << 20) {
  const MatrixSpace M{p, n};
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) {
    total *= p;
    if (total > max_matrices) throw BoundExceeded("two_generated_subgroups: p^(n^2) exceeds bound");
  }
  auto decode = [&](std::uint64_t code) {
    MatrixSpace::Matrix m(n * n);
    for (auto& c : m) {
      c = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return m;
  };
  auto encode = [&](const MatrixSpace::Matrix& m) {
    std::uint64_t code = 0;
    for (std::size_t i = m.size(); i-- > 0;) code = code * p + m[i];
    return code;
  };
  std::vector<std::uint64_t> gens;
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto m = decode(code);
    if (M.det(m) != 0 && keep(m)) gens.push_back(code);
  }
  auto closure = [&](const std::vector<std::uint64_t>& gs) {
    std::set<std::uint64_t> seen{encode(M.identity())};
    std::vector<std::uint64_t> queue(seen.begin(), seen.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto x = decode(queue[i]);
      for (auto g : gs) {
        const auto y = encode(M.mul(x, decode(g)));
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    return std::vector<std::uint64_t>(seen.begin(), seen.end());
  };
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::vector<std::uint64_t>> found;
  auto record = [&](std::vector<std::uint64_t> gs) {
    auto elems = closure(gs);
    const auto key = std::make_pair(elems.size(), std::move(elems));
    found.emplace(key, std::move(gs));
  };
  for (auto g : gens) record({g});
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) record({gens[i], gens[j]});
  std::vector<LinearAction> out;
  for (const auto& [key, gs] : found) {
    std::vector<MatrixSpace::Matrix> ms;
    for (auto g : gs) ms.push_back(decode(g));
    out.emplace_back(p, n, std::move(ms));
  }
  return out;
}

/// Subgroups of odd order of GL(n, p) that are generated by two elements.
inline std::vector<LinearAction> odd_order_subgroups(std::uint32_t p, std::uint32_t n) {
  const MatrixSpace M{p, n};
  auto odd_order = [&](const MatrixSpace::Matrix& m) {
    auto x = m;
    std::uint64_t k = 1;
    while (x != M.identity()) {
      x = M.mul(x, m);
      ++k;
    }
    return k % 2 == 1;
  };
  auto all = two_generated_subgroups(p, n, odd_order);
  std::vector<LinearAction> out;
  for (auto& a : all)
    if (a.group_order() % 2 == 1) out.push_back(std::move(a));
  return out;
}

/// The subgroup of GL(1, p) of order d, generated by a primitive root to the
/// power (p - 1) / d.
inline LinearAction gl1_subgroup(std::uint32_t p, std::uint64_t d) {
  if ((p - 1) % d != 0) throw ContractViolation("gl1_subgroup: order does not divide p - 1");
  const auto g = modp::pow(modp::primitive_root(p), (p - 1) / d, p);
  return LinearAction(p, 1, {{static_cast<std::uint32_t>(g)}});
}

/// Multiplication by a generator of GF(p^n)^* in the polynomial basis.
inline LinearAction singer_cycle(std::uint32_t p, std::uint32_t n) {
  const GaloisField F(static_cast<std::uint64_t>(MatrixSpace{p, n}.vector_count()));
  std::uint64_t gen = 0;
  for (std::uint64_t x = 1; x < F.order(); ++x) {
    std::uint64_t y = x, k = 1;
    while (y != 1) {
      y = F.mul(y, x);
      ++k;
    }
    if (k == F.order() - 1) {
      gen = x;
      break;
    }
  }
  const MatrixSpace V{p, n};
  MatrixSpace::Matrix m(n * n);
  std::uint64_t basis = 1;
  for (std::uint32_t j = 0; j < n; ++j, basis *= p) {
    const auto col = V.decode(F.mul(gen, basis));
    for (std::uint32_t i = 0; i < n; ++i) m[i * n + j] = col[i];
  }
  return LinearAction(p, n, {m});
}

}  // namespace camina
