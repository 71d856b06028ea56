#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "matroid/matroid.hpp"
#include "matroid/construct.hpp"

namespace oracle {

using matroid::Matroid;
using matroid::Subset;

inline Matroid make(int n, std::initializer_list<std::initializer_list<int>> circuits) {
  std::vector<Subset> cs;
  for (auto c : circuits) cs.push_back(Subset::of(c));
  return Matroid(n, matroid::CircuitFamily(std::move(cs)));
}

inline bool circuit_free(const std::vector<Subset>& circuits, Subset x) {
  for (Subset c : circuits)
    if (x.includes(c)) return false;
  return true;
}

/// Largest circuit-free subset by full enumeration.
inline int rank(const std::vector<Subset>& circuits, Subset x) {
  int best = 0;
  for (std::uint32_t s = x.bits();; s = (s - 1) & x.bits()) {
    Subset sub(s);
    if (sub.size() > best && circuit_free(circuits, sub)) best = sub.size();
    if (s == 0) break;
  }
  return best;
}

inline int rank(const Matroid& m, Subset x) { return rank(m.circuits().members(), x); }

inline std::vector<Subset> bases(const Matroid& m) {
  const int r = rank(m, m.ground());
  std::vector<Subset> out;
  for (std::uint32_t s = 0; s < (1u << m.size()); ++s) {
    Subset b(s);
    if (b.size() == r && circuit_free(m.circuits().members(), b)) out.push_back(b);
  }
  return out;
}

inline std::vector<Subset> minimal(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end());
  std::vector<Subset> out;
  for (Subset s : sets)
    if (std::none_of(out.begin(), out.end(), [&](Subset t) { return s.includes(t); })) out.push_back(s);
  return out;
}

/// Dual circuits: minimal nonempty sets contained in no cobasis.
inline std::vector<Subset> dual_circuits(const Matroid& m) {
  std::vector<Subset> cobases;
  for (Subset b : bases(m)) cobases.push_back(m.ground() - b);
  std::vector<Subset> dependent;
  for (std::uint32_t s = 1; s < (1u << m.size()); ++s) {
    Subset x(s);
    if (std::none_of(cobases.begin(), cobases.end(), [&](Subset c) { return c.includes(x); })) dependent.push_back(x);
  }
  return minimal(dependent);
}

/// Closure by definition: every element whose addition keeps the rank.
inline Subset closure(const Matroid& m, Subset x) {
  const int r = rank(m, x);
  Subset out = x;
  for (int e = 0; e < m.size(); ++e)
    if (rank(m, x.with(e)) == r) out = out.with(e);
  return out;
}

/// Isomorphism by trying every permutation (small n only).
inline bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.circuits().size() != b.circuits().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Subset> target(b.circuits().begin(), b.circuits().end());
  do {
    bool ok = true;
    for (Subset c : a.circuits()) {
      Subset img;
      for (int e : c) img = img.with(perm[e]);
      if (!target.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Edge sets of simple cycles, found by walking paths from each edge's endpoint.
inline std::vector<Subset> graph_cycles(const matroid::Multigraph& g) {
  std::set<Subset> found;
  const int m = g.edge_count();
  for (int first = 0; first < m; ++first) {
    auto [s, t] = g.edges[first];
    if (s == t) {
      found.insert(Subset::singleton(first));
      continue;
    }
    // Paths from t back to s using edges above `first`.
    std::vector<bool> visited(g.vertex_count, false);
    visited[s] = visited[t] = true;
    std::function<void(int, Subset)> walk = [&](int at, Subset used) {
      for (int e = first + 1; e < m; ++e) {
        auto [u, v] = g.edges[e];
        if (u == v) continue;
        int next = u == at ? v : (v == at ? u : -1);
        if (next < 0) continue;
        if (next == s) {
          found.insert(used.with(e));
          continue;
        }
        if (visited[next]) continue;
        visited[next] = true;
        walk(next, used.with(e));
        visited[next] = false;
      }
    };
    walk(t, Subset::singleton(first));
  }
  return {found.begin(), found.end()};
}

/// Minimal nonempty column sets with zero GF(2) sum.
inline std::vector<Subset> gf2_circuits(const std::vector<std::uint64_t>& columns) {
  std::vector<Subset> zero;
  for (std::uint32_t s = 1; s < (1u << columns.size()); ++s) {
    std::uint64_t sum = 0;
    for (int c : Subset(s)) sum ^= columns[c];
    if (sum == 0) zero.push_back(Subset(s));
  }
  return minimal(zero);
}

/// Antichains of nonempty subsets of an n-set, counted over all subfamilies.
inline std::uint64_t count_antichains(int n) {
  const int sets = (1 << n) - 1;
  std::uint64_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << sets); ++fam) {
    bool ok = true;
    for (int i = 0; i < sets && ok; ++i) {
      if (!((fam >> i) & 1)) continue;
      for (int j = 0; j < sets && ok; ++j)
        if (i != j && ((fam >> j) & 1) && (((i + 1) & (j + 1)) == (i + 1))) ok = false;
    }
    count += ok;
  }
  return count;
}

}  // namespace oracle
