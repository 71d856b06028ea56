#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid/circuit_family.hpp"
#include "matroid/errors.hpp"
#include "matroid/subset.hpp"

namespace matroid {

/// Disjoint blocks covering the ground set, ordered by smallest element.
struct ElementPartition {
  std::vector<Subset> blocks;

  /// The block holding `e`.
  Subset block_of(int e) const {
    for (Subset b : blocks)
      if (b.contains(e)) return b;
    throw InputError("element not covered by partition: " + std::to_string(e));
  }
  bool operator==(const ElementPartition&) const = default;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ElementPartition partition() {
    std::vector<Subset> by_root(parent.size());
    for (int e = 0; e < static_cast<int>(parent.size()); ++e) by_root[find(e)] = by_root[find(e)].with(e);
    ElementPartition p;
    for (Subset b : by_root)
      if (!b.empty()) p.blocks.push_back(b);
    return p;
  }
};

}  // namespace detail

/// A matroid on {0, ..., n-1} given by its circuits.
///
/// The circuit family is checked against the elimination axiom at construction,
/// so every Matroid value is valid. Values are immutable; the dependence table is
/// built eagerly and the canonical key is computed at most once behind a
/// std::once_flag, so concurrent readers are safe.
class Matroid {
 public:
  Matroid() : Matroid(0, CircuitFamily{}) {}

  Matroid(int n, CircuitFamily circuits) : n_(n), circuits_(std::move(circuits)) {
    if (n < 0 || n > kMaxElements)
      throw InputError("ground size " + std::to_string(n) + " outside [0, " + std::to_string(kMaxElements) + "]");
    for (Subset c : circuits_)
      if (!c.within(n)) throw InputError("circuit " + c.to_string() + " exceeds ground size " + std::to_string(n));
    state_ = std::make_shared<State>();
    build_dependence_table();
    validate_elimination();
    state_->full_rank = rank(ground());
  }

  int size() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  const CircuitFamily& circuits() const { return circuits_; }

  bool is_dependent(Subset x) const {
    check_within(x);
    return state_->dependent[x.bits()] != 0;
  }
  bool is_independent(Subset x) const { return !is_dependent(x); }
  bool is_circuit(Subset x) const { return circuits_.contains(x); }

  /// Greedy rank against the dependence table.
  int rank(Subset x) const {
    check_within(x);
    const auto& dep = state_->dependent;
    Subset::word_type indep = 0;
    for (int e : x) {
      auto grown = indep | (Subset::word_type{1} << e);
      if (!dep[grown]) indep = grown;
    }
    return std::popcount(indep);
  }
  int rank() const { return state_->full_rank; }

  Subset closure(Subset x) const {
    const int r = rank(x);
    Subset cl = x;
    for (int e : ground() - x)
      if (rank(x.with(e)) == r) cl = cl.with(e);
    return cl;
  }

  /// All closed sets in canonical order.
  std::vector<Subset> flats() const {
    std::vector<Subset> out;
    for_each_subset(ground(), [&](Subset x) {
      if (closure(x) == x) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_loop(int e) const { return is_circuit(Subset::singleton(e)); }
  bool is_coloop(int e) const { return rank(ground().without(e)) < rank(); }

  /// Matroids with at most one element count as connected.
  bool is_connected() const {
    if (n_ <= 1) return true;
    detail::UnionFind uf(n_);
    for (Subset c : circuits_) {
      int first = c.lowest();
      for (int e : c) uf.unite(first, e);
    }
    for (int e = 1; e < n_; ++e)
      if (uf.find(e) != 0) return false;
    return true;
  }

  /// Components of the "lie in a common circuit" relation.
  ElementPartition components() const {
    detail::UnionFind uf(n_);
    for (Subset c : circuits_) {
      int first = c.lowest();
      for (int e : c) uf.unite(first, e);
    }
    return uf.partition();
  }

  Matroid dual() const {
    const int r = rank();
    const std::size_t count = std::size_t{1} << n_;
    std::vector<std::uint8_t> codependent(count);
    const Subset all = ground();
    for (std::size_t d = 0; d < count; ++d)
      codependent[d] = rank(all - Subset(static_cast<Subset::word_type>(d))) < r;
    std::vector<Subset> cocircuits;
    for (std::size_t d = 1; d < count; ++d) {
      if (!codependent[d]) continue;
      Subset set(static_cast<Subset::word_type>(d));
      bool minimal = true;
      for (int e : set)
        if (codependent[set.without(e).bits()]) {
          minimal = false;
          break;
        }
      if (minimal) cocircuits.push_back(set);
    }
    std::sort(cocircuits.begin(), cocircuits.end());
    return Matroid(n_, CircuitFamily::trusted(std::move(cocircuits)));
  }

  /// True iff {x, y} (x != y) is a cocircuit.
  bool is_series_pair(int x, int y) const {
    if (x == y) return false;
    const Subset all = ground();
    return rank(all - Subset::of({x, y})) < rank() && !is_coloop(x) && !is_coloop(y);
  }

  /// Classes of the equivalence generated by 2-cocircuits.
  ElementPartition series_classes() const {
    detail::UnionFind uf(n_);
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (is_series_pair(x, y)) uf.unite(x, y);
    return uf.partition();
  }

  /// Member-for-member equality.
  bool operator==(const Matroid& o) const { return n_ == o.n_ && circuits_ == o.circuits_; }

  /// Returns the key stored for this value, computing it with `compute` once.
  template <class Compute>
  const std::vector<std::uint64_t>& cached_key(Compute&& compute) const {
    std::call_once(state_->key_once, [&] { state_->key = compute(*this); });
    return state_->key;
  }

 private:
  struct State {
    std::vector<std::uint8_t> dependent;
    int full_rank = 0;
    std::once_flag key_once;
    std::vector<std::uint64_t> key;
  };

  void check_within(Subset x) const {
    if (!x.within(n_)) throw InputError("subset " + x.to_string() + " exceeds ground size " + std::to_string(n_));
  }

  void build_dependence_table() {
    const std::size_t count = std::size_t{1} << n_;
    auto& dep = state_->dependent;
    dep.assign(count, 0);
    for (Subset c : circuits_) dep[c.bits()] = 1;
    for (int i = 0; i < n_; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t x = 0; x < count; ++x)
        if (x & bit) dep[x] |= dep[x ^ bit];
    }
  }

  // (C3): distinct C1, C2 and e in both => some circuit inside (C1 u C2) - e.
  void validate_elimination() const {
    const auto& dep = state_->dependent;
    const auto& cs = circuits_.members();
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const Subset both = cs[i] & cs[j];
        const Subset uni = cs[i] | cs[j];
        for (int e : both)
          if (!dep[uni.without(e).bits()])
            throw InvalidMatroid("circuit elimination fails for " + cs[i].to_string() + ", " + cs[j].to_string() +
                                 " at element " + std::to_string(e));
      }
  }

  int n_ = 0;
  CircuitFamily circuits_;
  std::shared_ptr<State> state_;
};

/// Result of deleting and contracting: the minor on {0..m-1} plus the element maps.
struct Minor {
  Matroid matroid;
  std::vector<int> new_of_old;  // -1 for removed elements
  std::vector<int> old_of_new;
};

/// Renames elements through `map` (old index -> new index, all entries >= 0 for members of s).
inline Subset relabel(Subset s, const std::vector<int>& map) {
  Subset out;
  for (int e : s) out = out.with(map[e]);
  return out;
}

/// M / contract \ remove, relabelled to 0..m-1 in increasing order of the surviving elements.
inline Minor minor(const Matroid& m, Subset contract, Subset remove) {
  if (!contract.within(m.size()) || !remove.within(m.size()))
    throw InputError("minor: element sets exceed ground size");
  if (contract.intersects(remove)) throw InputError("minor: contract and delete sets overlap");
  Minor out;
  out.new_of_old.assign(m.size(), -1);
  const Subset kept = m.ground() - contract - remove;
  for (int e : kept) {
    out.new_of_old[e] = static_cast<int>(out.old_of_new.size());
    out.old_of_new.push_back(e);
  }
  std::vector<Subset> reduced;
  for (Subset c : m.circuits()) {
    if (c.intersects(remove)) continue;
    Subset rest = c - contract;
    if (!rest.empty()) reduced.push_back(relabel(rest, out.new_of_old));
  }
  out.matroid = Matroid(static_cast<int>(out.old_of_new.size()), CircuitFamily::minimal_of(std::move(reduced)));
  return out;
}

inline Matroid delete_elements(const Matroid& m, Subset remove) { return minor(m, Subset{}, remove).matroid; }
inline Matroid contract_elements(const Matroid& m, Subset contract) { return minor(m, contract, Subset{}).matroid; }
/// M | keep, relabelled.
inline Matroid restrict_to(const Matroid& m, Subset keep) { return minor(m, Subset{}, m.ground() - keep).matroid; }

/// True iff some minor on a 4-element set is U_{2,4}.
///
/// Deletions are implicit in restricting to the 4-set T; contraction sets are
/// taken independent, which loses no minors.
inline bool has_u24_minor(const Matroid& m) {
  const int n = m.size();
  if (n < 4) return false;
  const Subset all = m.ground();
  bool found = false;
  for_each_subset(all, [&](Subset t) {
    if (found || t.size() != 4) return;
    const Subset rest = all - t;
    for_each_subset(rest, [&](Subset c) {
      if (found || m.is_dependent(c)) return;
      const int base = c.size();
      if (m.rank(t | c) - base != 2) return;
      for (int x : t) {
        if (m.rank(c.with(x)) - base != 1) return;
        for (int y : t)
          if (y > x && m.rank(c.with(x).with(y)) - base != 2) return;
      }
      found = true;
    });
  });
  return found;
}

/// Binarity by excluded minor: no U_{2,4} minor.
inline bool is_binary(const Matroid& m) { return !has_u24_minor(m); }

/// True iff the symmetric difference of every two distinct circuits is a
/// disjoint union of circuits (the classical characterization of binarity).
inline bool has_cycle_symmetric_difference_property(const Matroid& m) {
  std::unordered_map<Subset::word_type, bool> memo;
  const auto& cs = m.circuits().members();
  auto is_cycle = [&](auto&& self, Subset x) -> bool {
    if (x.empty()) return true;
    if (auto it = memo.find(x.bits()); it != memo.end()) return it->second;
    const int first = x.lowest();
    bool ok = false;
    for (Subset c : cs)
      if (c.contains(first) && x.includes(c) && self(self, x - c)) {
        ok = true;
        break;
      }
    memo.emplace(x.bits(), ok);
    return ok;
  };
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (!is_cycle(is_cycle, cs[i] ^ cs[j])) return false;
  return true;
}

}  // namespace matroid
