#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "camina/error.hpp"

namespace camina {

/// Dense element id. The identity is always 0.
using Element = std::uint32_t;

inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// Size limits for the exhaustive algorithms.
struct Bounds {
  std::size_t subgroup_lattice = 2000;
  std::size_t character_pipeline = 512;
};

/// Partition of a group into conjugacy classes. Classes are numbered in
/// order of their least element, so class 0 is {0}.
struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;  // per element
  std::vector<Element> representative;  // least element of each class
  std::vector<std::vector<Element>> members;

  std::size_t count() const { return representative.size(); }
  std::size_t size(std::size_t c) const { return members[c].size(); }
};

/// A finite group given by its full multiplication table. Copies share the
/// immutable table.
class Group {
 public:
  Group() : Group(trivial()) {}

  /// Builds a group from a row-major n x n table. Validates identity at 0,
  /// Latin-square rows and columns, and associativity (exhaustive for
  /// n <= 256, 10 n^2 seeded random triples above). Tables derived from an
  /// already validated group (subgroups, quotients) may skip associativity.
  enum class Check { full, derived };

  static Group from_table(std::vector<Element> table, std::size_t n, std::string label, Check check = Check::full) {
    if (n == 0) throw InvalidGroup("empty group");
    if (table.size() != n * n) throw InvalidGroup("table size is not n*n");
    for (auto x : table)
      if (x >= n) throw InvalidGroup("table entry out of range");

    auto data = std::make_shared<Data>();
    data->n = n;
    data->mul = std::move(table);
    data->label = std::move(label);
    const auto& m = data->mul;

    for (Element g = 0; g < n; ++g)
      if (m[g] != g || m[g * n] != g) throw InvalidGroup("element 0 is not the identity");

    std::vector<std::uint8_t> seen(n);
    for (Element a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element b = 0; b < n; ++b) {
        if (seen[m[a * n + b]]++) throw InvalidGroup("row " + std::to_string(a) + " is not a permutation");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Element b = 0; b < n; ++b) {
        if (seen[m[b * n + a]]++) throw InvalidGroup("column " + std::to_string(a) + " is not a permutation");
      }
    }

    data->inv.assign(n, kNoElement);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (m[a * n + b] == 0) {
          data->inv[a] = b;
          break;
        }

    auto assoc = [&](Element a, Element b, Element c) {
      return m[m[a * n + b] * n + c] == m[a * n + m[b * n + c]];
    };
    if (check == Check::derived) {
    } else if (n <= 256) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            if (!assoc(a, b, c)) throw InvalidGroup("table is not associative");
    } else {
      std::mt19937_64 rng(0x5eed1234u + n);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      for (std::size_t t = 0; t < 10 * n * n; ++t)
        if (!assoc(pick(rng), pick(rng), pick(rng))) throw InvalidGroup("table is not associative");
    }

    data->elt_order.assign(n, 0);
    for (Element g = 0; g < n; ++g) {
      std::uint32_t k = 1;
      for (Element x = g; x != 0; x = m[x * n + g]) ++k;
      data->elt_order[g] = k;
    }
    Group G;
    G.data_ = std::move(data);
    return G;
  }

  /// Builds the table from a multiplication functor over ids 0..n-1.
  template <class Op>
  static Group from_operation(std::size_t n, Op&& op, std::string label, Check check = Check::full) {
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>(op(a, b));
    return from_table(std::move(table), n, std::move(label), check);
  }

  std::size_t order() const { return data_->n; }
  const std::string& label() const { return data_->label; }

  Element mul(Element a, Element b) const { return data_->mul[a * data_->n + b]; }
  Element inv(Element a) const { return data_->inv[a]; }
  std::uint32_t element_order(Element a) const { return data_->elt_order[a]; }

  std::span<const Element> table() const { return data_->mul; }
  std::span<const Element> inverses() const { return data_->inv; }
  std::span<const std::uint32_t> element_orders() const { return data_->elt_order; }

  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  Element power(Element a, std::int64_t k) const {
    const std::int64_t o = element_order(a);
    k %= o;
    if (k < 0) k += o;
    Element r = 0;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (auto o : data_->elt_order) e = std::lcm(e, static_cast<std::uint64_t>(o));
    return e;
  }

  bool is_abelian() const {
    const auto n = order();
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  Group with_label(std::string label) const {
    auto d = std::make_shared<Data>();
    d->n = data_->n;
    d->mul = data_->mul;
    d->inv = data_->inv;
    d->elt_order = data_->elt_order;
    d->label = std::move(label);
    Group G;
    G.data_ = std::move(d);
    return G;
  }

  /// Same table (labels ignored).
  bool same_table(const Group& other) const {
    return data_ == other.data_ || data_->mul == other.data_->mul;
  }

  /// Conjugacy classes, computed once and cached.
  const ConjugacyClasses& classes() const {
    std::call_once(data_->classes_once, [this] { data_->classes = compute_classes(); });
    return data_->classes;
  }

  /// Element sets of all normal subgroups; computed once through `compute`.
  template <class F>
  const std::vector<std::vector<Element>>& normal_sets(F&& compute) const {
    std::call_once(data_->normals_once, [&] { data_->normals = compute(); });
    return data_->normals;
  }

  /// A small generating set found greedily in id order, cached.
  const std::vector<Element>& generators() const {
    std::call_once(data_->gens_once, [this] { data_->gens = compute_generators(); });
    return data_->gens;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Element> mul;
    std::vector<Element> inv;
    std::vector<std::uint32_t> elt_order;
    std::string label;
    mutable std::once_flag classes_once;
    mutable ConjugacyClasses classes;
    mutable std::once_flag gens_once;
    mutable std::vector<Element> gens;
    mutable std::once_flag normals_once;
    mutable std::vector<std::vector<Element>> normals;
  };

  static Group trivial() {
    auto d = std::make_shared<Data>();
    d->n = 1;
    d->mul = {0};
    d->inv = {0};
    d->elt_order = {1};
    d->label = "C1";
    Group G(d);
    return G;
  }

  explicit Group(std::shared_ptr<Data> d) : data_(std::move(d)) {}

  ConjugacyClasses compute_classes() const {
    const auto n = order();
    ConjugacyClasses cc;
    cc.class_of.assign(n, std::numeric_limits<std::uint32_t>::max());
    std::vector<Element> orbit;
    for (Element g = 0; g < n; ++g) {
      if (cc.class_of[g] != std::numeric_limits<std::uint32_t>::max()) continue;
      const auto id = static_cast<std::uint32_t>(cc.representative.size());
      cc.representative.push_back(g);
      orbit.clear();
      for (Element h = 0; h < n; ++h) {
        const Element x = conj(h, g);
        if (cc.class_of[x] != id) {
          cc.class_of[x] = id;
          orbit.push_back(x);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      cc.members.push_back(orbit);
    }
    return cc;
  }

  std::vector<Element> compute_generators() const {
    const auto n = order();
    std::vector<Element> gens;
    std::vector<std::uint8_t> in(n, 0);
    std::vector<Element> elems{0};
    in[0] = 1;
    for (Element g = 1; g < n; ++g) {
      if (in[g]) continue;
      gens.push_back(g);
      // Re-close under the enlarged generator list.
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto s : gens) {
          const Element y = mul(elems[i], s);
          if (!in[y]) {
            in[y] = 1;
            elems.push_back(y);
          }
        }
    }
    return gens;
  }

  std::shared_ptr<Data> data_;
};

/// A subgroup of a parent group, stored as a sorted element list plus a
/// membership mask.
class Subgroup {
 public:
  Subgroup() = default;

  const Group& parent() const { return parent_; }
  std::span<const Element> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element g) const { return mask_[g] != 0; }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == parent_.order(); }
  std::size_t index() const { return parent_.order() / order(); }

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }
  bool operator<(const Subgroup& o) const {
    if (order() != o.order()) return order() < o.order();
    return elements_ < o.elements_;
  }

  bool is_subset_of(const Subgroup& o) const {
    for (auto g : elements_)
      if (!o.contains(g)) return false;
    return true;
  }

  /// Trusted construction from a set already known to be a subgroup.
  static Subgroup from_closed(const Group& G, std::vector<Element> elems) {
    Subgroup H;
    H.parent_ = G;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    H.elements_ = std::move(elems);
    H.mask_.assign(G.order(), 0);
    for (auto g : H.elements_) H.mask_[g] = 1;
    H.normal_ = true;
    for (auto s : G.generators()) {
      for (auto h : H.elements_)
        if (!H.mask_[G.conj(s, h)]) {
          H.normal_ = false;
          break;
        }
      if (!H.normal_) break;
    }
    return H;
  }

  /// Trusted construction for a set known to be a normal subgroup.
  static Subgroup from_closed_normal(const Group& G, std::vector<Element> elems) {
    Subgroup H;
    H.parent_ = G;
    std::sort(elems.begin(), elems.end());
    H.elements_ = std::move(elems);
    H.mask_.assign(G.order(), 0);
    for (auto g : H.elements_) H.mask_[g] = 1;
    H.normal_ = true;
    return H;
  }

  /// Validating construction: throws InvalidGroup unless elems is a subgroup.
  static Subgroup checked(const Group& G, std::vector<Element> elems) {
    for (auto g : elems)
      if (g >= G.order()) throw InvalidGroup("element id out of range");
    Subgroup H = from_closed(G, std::move(elems));
    if (H.elements_.empty() || H.elements_.front() != 0) throw InvalidGroup("subgroup lacks the identity");
    for (auto a : H.elements_)
      for (auto b : H.elements_)
        if (!H.contains(G.mul(a, b))) throw InvalidGroup("set is not closed under multiplication");
    return H;
  }

 private:
  Group parent_;
  std::vector<Element> elements_{0};
  std::vector<std::uint8_t> mask_{1};
  bool normal_ = true;
};

/// Subgroup generated by gens.
inline Subgroup generate(const Group& G, std::span<const Element> gens) {
  std::vector<std::uint8_t> in(G.order(), 0);
  std::vector<Element> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      const Element y = G.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return Subgroup::from_closed(G, std::move(elems));
}

inline Subgroup generate(const Group& G, std::initializer_list<Element> gens) {
  return generate(G, std::span<const Element>(gens.begin(), gens.size()));
}

inline Subgroup whole(const Group& G) {
  std::vector<Element> all(G.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup::from_closed(G, std::move(all));
}

inline Subgroup trivial_subgroup(const Group& G) { return Subgroup::from_closed(G, {0}); }

inline const ConjugacyClasses& conjugacy_classes(const Group& G) { return G.classes(); }

inline Subgroup centralizer(const Group& G, Element g) {
  std::vector<Element> c;
  for (Element h = 0; h < G.order(); ++h)
    if (G.mul(h, g) == G.mul(g, h)) c.push_back(h);
  return Subgroup::from_closed(G, std::move(c));
}

/// Elements commuting with every element of H.
inline Subgroup centralizer(const Group& G, const Subgroup& H) {
  std::vector<Element> c;
  for (Element h = 0; h < G.order(); ++h) {
    bool ok = true;
    for (auto x : H.elements())
      if (G.mul(h, x) != G.mul(x, h)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(h);
  }
  return Subgroup::from_closed(G, std::move(c));
}

inline Subgroup center(const Group& G) {
  std::vector<Element> z;
  const auto& gens = G.generators();
  for (Element h = 0; h < G.order(); ++h) {
    bool ok = true;
    for (auto s : gens)
      if (G.mul(h, s) != G.mul(s, h)) {
        ok = false;
        break;
      }
    if (ok) z.push_back(h);
  }
  return Subgroup::from_closed(G, std::move(z));
}

/// Subgroup generated by all [a, b] with a in A, b in B.
inline Subgroup commutator_subgroup(const Group& G, const Subgroup& A, const Subgroup& B) {
  std::vector<std::uint8_t> seen(G.order(), 0);
  std::vector<Element> comms;
  for (auto a : A.elements())
    for (auto b : B.elements()) {
      const Element c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generate(G, comms);
}

inline Subgroup derived_subgroup(const Group& G) {
  const auto all = whole(G);
  return commutator_subgroup(G, all, all);
}

/// Product set AB of two subgroups, one of which normalizes the other.
inline Subgroup product(const Subgroup& A, const Subgroup& B) {
  const auto& G = A.parent();
  std::vector<std::uint8_t> seen(G.order(), 0);
  std::vector<Element> out;
  for (auto a : A.elements())
    for (auto b : B.elements()) {
      const Element c = G.mul(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        out.push_back(c);
      }
    }
  return Subgroup::from_closed(G, std::move(out));
}

inline Subgroup intersection(const Subgroup& A, const Subgroup& B) {
  std::vector<Element> out;
  for (auto a : A.elements())
    if (B.contains(a)) out.push_back(a);
  return Subgroup::from_closed(A.parent(), std::move(out));
}

/// Subgroup generated by A and B.
inline Subgroup join(const Subgroup& A, const Subgroup& B) {
  std::vector<Element> gens(A.elements().begin(), A.elements().end());
  gens.insert(gens.end(), B.elements().begin(), B.elements().end());
  return generate(A.parent(), gens);
}

/// A subgroup realized as a standalone group. Ids are relabeled monotonically:
/// the i-th smallest parent id becomes i.
struct Embedding {
  Group group;
  std::vector<Element> to_parent;
  std::vector<Element> from_parent;  // kNoElement outside the subgroup

  /// Image in the standalone group of a parent subgroup contained in this one.
  Subgroup pull(const Subgroup& K) const {
    std::vector<Element> e;
    e.reserve(K.order());
    for (auto g : K.elements()) {
      if (from_parent[g] == kNoElement) throw ContractViolation("subgroup not contained in embedded subgroup");
      e.push_back(from_parent[g]);
    }
    return Subgroup::from_closed(group, std::move(e));
  }

  /// Image in the parent of a subgroup of the standalone group.
  Subgroup push(const Subgroup& K, const Group& parent) const {
    std::vector<Element> e;
    e.reserve(K.order());
    for (auto g : K.elements()) e.push_back(to_parent[g]);
    return Subgroup::from_closed(parent, std::move(e));
  }
};

inline Embedding materialize(const Subgroup& H, std::string label = {}) {
  const auto& G = H.parent();
  Embedding emb;
  emb.to_parent.assign(H.elements().begin(), H.elements().end());
  emb.from_parent.assign(G.order(), kNoElement);
  for (std::size_t i = 0; i < emb.to_parent.size(); ++i) emb.from_parent[emb.to_parent[i]] = static_cast<Element>(i);
  const auto m = H.order();
  if (label.empty()) label = G.label() + ".sub" + std::to_string(m);
  emb.group = Group::from_operation(
      m, [&](Element a, Element b) { return emb.from_parent[G.mul(emb.to_parent[a], emb.to_parent[b])]; },
      std::move(label), Group::Check::derived);
  return emb;
}

/// Projection G -> G/N. Cosets are numbered by increasing least element, so
/// the coset N itself is 0.
struct QuotientMap {
  Group source;
  Subgroup kernel;
  Group image;
  std::vector<Element> projection;
  std::vector<Element> coset_rep;  // least element of each coset

  Subgroup preimage(const Subgroup& K) const {
    std::vector<Element> e;
    for (Element g = 0; g < source.order(); ++g)
      if (K.contains(projection[g])) e.push_back(g);
    return Subgroup::from_closed(source, std::move(e));
  }

  Subgroup image_of(const Subgroup& H) const {
    std::vector<Element> e;
    for (auto g : H.elements()) e.push_back(projection[g]);
    return Subgroup::from_closed(image, std::move(e));
  }
};

inline QuotientMap quotient(const Group& G, const Subgroup& N, std::string label = {}) {
  if (!N.is_normal()) throw NotNormal("quotient by a non-normal subgroup");
  QuotientMap q;
  q.source = G;
  q.kernel = N;
  const auto n = G.order();
  q.projection.assign(n, kNoElement);
  for (Element g = 0; g < n; ++g) {
    if (q.projection[g] != kNoElement) continue;
    const auto id = static_cast<Element>(q.coset_rep.size());
    q.coset_rep.push_back(g);
    for (auto x : N.elements()) q.projection[G.mul(g, x)] = id;
  }
  const auto m = q.coset_rep.size();
  if (label.empty()) label = G.label() + "/N" + std::to_string(N.order());
  q.image = Group::from_operation(
      m, [&](Element a, Element b) { return q.projection[G.mul(q.coset_rep[a], q.coset_rep[b])]; },
      std::move(label), Group::Check::derived);
  return q;
}

}  // namespace camina
