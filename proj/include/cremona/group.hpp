#pragma once

// Finite groups given by generators, enumerated by breadth-first closure.
//
// An element type E needs operator*, operator==, and ADL-visible
// hash_value(const E&) and identity_of(const E&).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

inline constexpr std::size_t kDefaultClosureCap = 10000;

template <class E>
struct ElementHash {
  std::size_t operator()(const E& e) const { return hash_value(e); }
};

template <class E>
class FinGroup {
 public:
  using Element = E;

  FinGroup() = default;

  /// Breadth-first closure; throws ClosureOverflow past `cap` elements.
  static FinGroup closure(const std::vector<E>& gens, std::size_t cap = kDefaultClosureCap) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    FinGroup g;
    g.gens_ = gens;
    g.add(identity_of(gens.front()));
    for (std::size_t head = 0; head < g.elems_.size(); ++head) {
      for (const E& s : gens) {
        E y = g.elems_[head] * s;
        if (g.index_.count(y)) continue;
        if (g.elems_.size() >= cap)
          throw ClosureOverflow("closure exceeded cap " + std::to_string(cap));
        g.add(std::move(y));
      }
    }
    g.compute_orders();
    return g;
  }

  /// Adopts a complete element list; verifies closure under `gens`.
  static FinGroup from_elements(std::vector<E> elems, std::vector<E> gens) {
    FinGroup g;
    g.gens_ = std::move(gens);
    if (elems.empty()) throw std::invalid_argument("empty element list");
    E id = identity_of(elems.front());
    g.add(id);
    for (auto& e : elems)
      if (!g.index_.count(e)) g.add(std::move(e));
    for (const E& x : g.elems_)
      for (const E& s : g.gens_)
        if (!g.index_.count(x * s)) throw IntegrityError("element list not closed under generators");
    g.compute_orders();
    return g;
  }

  std::size_t order() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const E& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<E>& generators() const { return gens_; }
  const E& identity() const { return elems_.front(); }

  std::optional<std::size_t> find(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& e) const { return index_.count(e) != 0; }
  std::size_t index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw IntegrityError("element not in group");
    return it->second;
  }

  std::size_t mul(std::size_t i, std::size_t j) const { return index_of(elems_[i] * elems_[j]); }
  std::size_t inverse_index(std::size_t i) const { return inverses_[i]; }
  int element_order(std::size_t i) const { return orders_[i]; }
  const std::vector<int>& element_orders() const { return orders_; }

  /// Sorted indices of the subgroup generated by the given indices.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<std::size_t> out{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
      for (std::size_t s : gens) {
        std::size_t y = mul(out[head], s);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Smallest normal subgroup containing the seeds, as sorted indices.
  std::vector<std::size_t> normal_closure(const std::vector<std::size_t>& seeds) const {
    std::vector<std::size_t> ngens = seeds;
    std::vector<std::size_t> sub = generated_subgroup(ngens);
    std::vector<std::size_t> gidx;
    for (const E& s : gens_) gidx.push_back(index_of(s));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<char> in(order(), 0);
      for (std::size_t x : sub) in[x] = 1;
      for (std::size_t g : gidx) {
        for (std::size_t n : std::vector<std::size_t>(ngens)) {
          std::size_t c = mul(mul(g, n), inverses_[g]);
          if (!in[c]) {
            ngens.push_back(c);
            sub = generated_subgroup(ngens);
            in.assign(order(), 0);
            for (std::size_t x : sub) in[x] = 1;
            grew = true;
          }
        }
      }
    }
    return sub;
  }

 private:
  void add(E e) {
    index_.emplace(e, elems_.size());
    elems_.push_back(std::move(e));
  }

  void compute_orders() {
    const E& id = elems_.front();
    orders_.assign(elems_.size(), 1);
    inverses_.assign(elems_.size(), 0);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      E x = elems_[i];
      E prev = id;
      int k = 1;
      while (!(x == id)) {
        prev = x;
        x = x * elems_[i];
        ++k;
        if (k > static_cast<int>(elems_.size())) throw IntegrityError("element order exceeds group order");
      }
      orders_[i] = k;
      inverses_[i] = index_of(prev);
    }
  }

  std::vector<E> elems_;
  std::vector<E> gens_;
  std::unordered_map<E, std::size_t, ElementHash<E>> index_;
  std::vector<int> orders_;
  std::vector<std::size_t> inverses_;
};

struct GroupSignature {
  std::size_t order = 1;
  std::size_t center_order = 1;
  std::size_t derived_order = 1;
  std::size_t abelianization_order = 1;
  std::map<int, std::size_t> order_histogram{{1, 1}};

  std::size_t involutions() const {
    auto it = order_histogram.find(2);
    return it == order_histogram.end() ? 0 : it->second;
  }
  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
  std::string to_string() const;
};

template <class E>
std::vector<std::size_t> center_indices(const FinGroup<E>& g) {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < g.order(); ++i) {
    bool central = true;
    for (const E& s : g.generators())
      if (!(g[i] * s == s * g[i])) {
        central = false;
        break;
      }
    if (central) z.push_back(i);
  }
  return z;
}

template <class E>
std::vector<std::size_t> derived_subgroup(const FinGroup<E>& g) {
  std::vector<std::size_t> gi;
  for (const E& s : g.generators()) gi.push_back(g.index_of(s));
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < gi.size(); ++a)
    for (std::size_t b = a + 1; b < gi.size(); ++b) {
      std::size_t ab = g.mul(gi[a], gi[b]);
      std::size_t c = g.mul(g.mul(ab, g.inverse_index(gi[a])), g.inverse_index(gi[b]));
      if (c != 0) comms.push_back(c);
    }
  return g.normal_closure(comms);
}

template <class E>
GroupSignature signature(const FinGroup<E>& g) {
  GroupSignature sig;
  sig.order = g.order();
  sig.center_order = center_indices(g).size();
  sig.derived_order = derived_subgroup(g).size();
  sig.abelianization_order = sig.order / sig.derived_order;
  sig.order_histogram.clear();
  for (int o : g.element_orders()) ++sig.order_histogram[o];
  return sig;
}

/// True when every nontrivial element has the whole group as normal closure.
template <class E>
bool is_simple(const FinGroup<E>& g) {
  for (std::size_t i = 1; i < g.order(); ++i)
    if (g.normal_closure({i}).size() != g.order()) return false;
  return true;
}

/// Products of elements from two groups, componentwise.
template <class A, class B>
struct PairElem {
  A first;
  B second;
  friend PairElem operator*(const PairElem& x, const PairElem& y) {
    return {x.first * y.first, x.second * y.second};
  }
  friend bool operator==(const PairElem& x, const PairElem& y) = default;
};

template <class A, class B>
std::size_t hash_value(const PairElem<A, B>& p) {
  return hash_value(p.first) * 31 + hash_value(p.second);
}
template <class A, class B>
PairElem<A, B> identity_of(const PairElem<A, B>& p) {
  return {identity_of(p.first), identity_of(p.second)};
}

/// Multiplication table of an enumerated group, for index-level products.
struct CayleyTable {
  std::size_t n = 0;
  std::vector<std::uint32_t> prod;
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return prod[i * n + j]; }

  template <class E>
  static CayleyTable of(const FinGroup<E>& g) {
    CayleyTable t;
    t.n = g.order();
    t.prod.resize(t.n * t.n);
    for (std::size_t i = 0; i < t.n; ++i)
      for (std::size_t j = 0; j < t.n; ++j) t.prod[i * t.n + j] = static_cast<std::uint32_t>(g.mul(i, j));
    return t;
  }
};

/// Element (a, b) tau^s of (A x B) extended by an optional factor swap, with
/// components stored as indices into Cayley tables. The swap is only meaningful
/// when both tables describe the same group.
struct IndexPair {
  const CayleyTable* ta = nullptr;
  const CayleyTable* tb = nullptr;
  std::uint32_t a = 0, b = 0;
  std::uint8_t swap = 0;

  friend IndexPair operator*(const IndexPair& x, const IndexPair& y) {
    std::uint32_t ya = x.swap ? y.b : y.a;
    std::uint32_t yb = x.swap ? y.a : y.b;
    return {x.ta, x.tb, x.ta->at(x.a, ya), x.tb->at(x.b, yb), static_cast<std::uint8_t>(x.swap ^ y.swap)};
  }
  friend bool operator==(const IndexPair& x, const IndexPair& y) {
    return x.a == y.a && x.b == y.b && x.swap == y.swap;
  }
};

inline std::size_t hash_value(const IndexPair& p) {
  return (static_cast<std::size_t>(p.a) << 33) ^ (static_cast<std::size_t>(p.b) << 1) ^ p.swap;
}
inline IndexPair identity_of(const IndexPair& p) { return {p.ta, p.tb, 0, 0, 0}; }

/// Epimorphism given as a table from element indices of a group onto element
/// indices of the common quotient D.
using EpiTable = std::vector<std::size_t>;

template <class E, class ED>
void validate_epimorphism(const FinGroup<E>& a, const FinGroup<ED>& d, const EpiTable& alpha,
                          const char* name) {
  if (alpha.size() != a.order()) throw InvalidEpimorphism(std::string(name) + ": table size mismatch");
  std::vector<char> hit(d.order(), 0);
  for (std::size_t v : alpha) {
    if (v >= d.order()) throw InvalidEpimorphism(std::string(name) + ": value out of range");
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw InvalidEpimorphism(std::string(name) + ": not surjective");
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (alpha[a.mul(i, j)] != d.mul(alpha[i], alpha[j]))
        throw InvalidEpimorphism(std::string(name) + ": not a homomorphism");
}

/// The fibre product {(a, b) : alpha(a) = beta(b)} inside A x B, with
/// elements as index pairs over the supplied Cayley tables.
template <class EA, class EB, class ED>
FinGroup<IndexPair> diagonal_product(const FinGroup<EA>& a, const FinGroup<EB>& b, const FinGroup<ED>& d,
                                     const EpiTable& alpha, const EpiTable& beta, const CayleyTable& ta,
                                     const CayleyTable& tb) {
  validate_epimorphism(a, d, alpha, "alpha");
  validate_epimorphism(b, d, beta, "beta");
  std::vector<IndexPair> elems, gens;
  for (std::uint32_t i = 0; i < a.order(); ++i)
    for (std::uint32_t j = 0; j < b.order(); ++j)
      if (alpha[i] == beta[j]) elems.push_back({&ta, &tb, i, j, 0});
  for (const EA& s : a.generators()) {
    std::uint32_t i = static_cast<std::uint32_t>(a.index_of(s));
    for (std::uint32_t j = 0; j < b.order(); ++j)
      if (beta[j] == alpha[i]) {
        gens.push_back({&ta, &tb, i, j, 0});
        break;
      }
  }
  for (std::uint32_t j = 0; j < b.order(); ++j)
    if (beta[j] == beta[0] && j != 0) gens.push_back({&ta, &tb, 0, j, 0});
  if (gens.empty()) gens.push_back({&ta, &tb, 0, 0, 0});
  return FinGroup<IndexPair>::from_elements(std::move(elems), std::move(gens));
}

}  // namespace cremona
