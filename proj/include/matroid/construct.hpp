#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

/// Vertices 0..vertex_count-1; edge i is matroid element i. Loops and parallel edges allowed.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_names;  // optional, empty or one per edge

  Multigraph() = default;
  Multigraph(int vertices, std::vector<std::pair<int, int>> edge_list, std::vector<std::string> names = {})
      : vertex_count(vertices), edges(std::move(edge_list)), edge_names(std::move(names)) {
    validate();
  }

  void validate() const {
    if (vertex_count < 0) throw InputError("negative vertex count");
    for (auto [u, v] : edges)
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (!edge_names.empty() && edge_names.size() != edges.size()) throw InputError("edge name count mismatch");
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  /// Number of connected components, isolated vertices included.
  int component_count() const {
    detail::UnionFind uf(vertex_count);
    for (auto [u, v] : edges) uf.unite(u, v);
    int count = 0;
    for (int v = 0; v < vertex_count; ++v) count += uf.find(v) == v;
    return count;
  }
};

/// A 0/1 matrix whose columns are the matroid elements. Rows are limited to 64.
struct GF2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::uint8_t>> entries;  // entries[row][col]

  GF2Matrix() = default;
  GF2Matrix(int r, int c, std::vector<std::vector<std::uint8_t>> e) : rows(r), cols(c), entries(std::move(e)) {
    if (rows <= 0 || cols <= 0) throw InputError("GF(2) matrix dimensions must be positive");
    if (rows > 64) throw InputError("GF(2) matrix limited to 64 rows");
    if (static_cast<int>(entries.size()) != rows) throw InputError("GF(2) matrix row count mismatch");
    for (const auto& row : entries) {
      if (static_cast<int>(row.size()) != cols) throw InputError("GF(2) matrix column count mismatch");
      for (auto v : row)
        if (v > 1) throw InputError("GF(2) entries must be 0 or 1");
    }
  }

  /// Builds a matrix from column bit vectors (bit i = row i).
  static GF2Matrix from_columns(int rows, const std::vector<std::uint64_t>& columns) {
    std::vector<std::vector<std::uint8_t>> e(rows, std::vector<std::uint8_t>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (int r = 0; r < rows; ++r) e[r][c] = (columns[c] >> r) & 1u;
    return GF2Matrix(rows, static_cast<int>(columns.size()), std::move(e));
  }

  std::uint64_t column(int c) const {
    std::uint64_t v = 0;
    for (int r = 0; r < rows; ++r)
      if (entries[r][c]) v |= std::uint64_t{1} << r;
    return v;
  }
};

/// A matroid with a distinguished basepoint that is neither a loop nor a coloop.
struct PointedMatroid {
  Matroid matroid;
  int basepoint = 0;

  PointedMatroid(Matroid m, int p) : matroid(std::move(m)), basepoint(p) {
    if (p < 0 || p >= matroid.size()) throw InputError("basepoint out of range: " + std::to_string(p));
    if (matroid.is_loop(p)) throw ConstructionError("basepoint " + std::to_string(p) + " is a loop");
    if (matroid.is_coloop(p)) throw ConstructionError("basepoint " + std::to_string(p) + " is a coloop");
  }
};

inline Matroid uniform(int r, int n) {
  if (n < 0 || r < 0 || r > n) throw InputError("uniform: need 0 <= r <= n");
  if (n > kMaxElements) throw InputError("uniform: ground size too large");
  std::vector<Subset> circuits;
  if (r < n)
    for_each_subset(Subset::full(n), [&](Subset s) {
      if (s.size() == r + 1) circuits.push_back(s);
    });
  std::sort(circuits.begin(), circuits.end());
  return Matroid(n, CircuitFamily::trusted(std::move(circuits)));
}

/// Circuits are the edge sets of cycles: nonempty, connected, every touched vertex of degree 2.
inline Matroid cycle_matroid(const Multigraph& g) {
  g.validate();
  const int m = g.edge_count();
  if (m > kMaxElements) throw InputError("cycle_matroid: too many edges");
  std::vector<Subset> circuits;
  std::vector<int> degree(g.vertex_count, 0);
  for_each_subset(Subset::full(m), [&](Subset s) {
    if (s.empty()) return;
    std::fill(degree.begin(), degree.end(), 0);
    for (int e : s) {
      ++degree[g.edges[e].first];
      ++degree[g.edges[e].second];
    }
    for (int d : degree)
      if (d != 0 && d != 2) return;
    detail::UnionFind uf(g.vertex_count);
    for (int e : s) uf.unite(g.edges[e].first, g.edges[e].second);
    const int root = uf.find(g.edges[s.lowest()].first);
    for (int v = 0; v < g.vertex_count; ++v)
      if (degree[v] != 0 && uf.find(v) != root) return;
    circuits.push_back(s);
  });
  std::sort(circuits.begin(), circuits.end());
  return Matroid(m, CircuitFamily::trusted(std::move(circuits)));
}

/// Circuits are the minimal nonempty column sets summing to zero over GF(2).
inline Matroid from_gf2(const GF2Matrix& a) {
  const int n = a.cols;
  if (n > kMaxElements) throw InputError("from_gf2: too many columns");
  std::vector<std::uint64_t> col(n);
  for (int c = 0; c < n; ++c) col[c] = a.column(c);
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint64_t> sum(count, 0);
  std::vector<std::uint8_t> independent(count, 0);
  independent[0] = 1;
  std::vector<Subset> circuits;
  for (std::size_t x = 1; x < count; ++x) {
    Subset set(static_cast<Subset::word_type>(x));
    const int low = set.lowest();
    sum[x] = sum[set.without(low).bits()] ^ col[low];
    bool all_smaller_independent = true;
    for (int e : set)
      if (!independent[set.without(e).bits()]) {
        all_smaller_independent = false;
        break;
      }
    independent[x] = all_smaller_independent && sum[x] != 0;
    if (all_smaller_independent && sum[x] == 0) circuits.push_back(set);
  }
  std::sort(circuits.begin(), circuits.end());
  return Matroid(n, CircuitFamily::trusted(std::move(circuits)));
}

/// M1 on 0..n1-1, M2 shifted to n1..n1+n2-1.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<Subset> circuits(a.circuits().begin(), a.circuits().end());
  const int shift = a.size();
  for (Subset c : b.circuits()) circuits.push_back(Subset(c.bits() << shift));
  return Matroid(a.size() + b.size(), CircuitFamily(std::move(circuits)));
}

namespace detail {

// Element map for gluing: the left side keeps its indices, the right side is
// shifted past it, and the right basepoint lands on the left basepoint.
inline std::vector<int> glue_map(const PointedMatroid& left, const PointedMatroid& right) {
  std::vector<int> map(right.matroid.size());
  const int n1 = left.matroid.size();
  for (int j = 0; j < right.matroid.size(); ++j) {
    if (j == right.basepoint)
      map[j] = left.basepoint;
    else
      map[j] = n1 + (j < right.basepoint ? j : j - 1);
  }
  return map;
}

}  // namespace detail

/// S((M1;p),(M2;p)).
inline PointedMatroid series_connection(const PointedMatroid& left, const PointedMatroid& right) {
  const int p = left.basepoint;
  const auto map = detail::glue_map(left, right);
  std::vector<Subset> circuits;
  std::vector<Subset> left_through, right_through;
  for (Subset c : left.matroid.circuits()) (c.contains(p) ? left_through : circuits).push_back(c);
  for (Subset c : right.matroid.circuits()) {
    Subset mapped = relabel(c, map);
    (c.contains(right.basepoint) ? right_through : circuits).push_back(mapped);
  }
  for (Subset c1 : left_through)
    for (Subset c2 : right_through) circuits.push_back(c1 | c2);
  const int n = left.matroid.size() + right.matroid.size() - 1;
  return PointedMatroid(Matroid(n, CircuitFamily(std::move(circuits))), p);
}

/// P((M1;p),(M2;p)).
inline PointedMatroid parallel_connection(const PointedMatroid& left, const PointedMatroid& right) {
  const int p = left.basepoint;
  const auto map = detail::glue_map(left, right);
  std::vector<Subset> circuits;
  std::vector<Subset> left_through, right_through;
  for (Subset c : left.matroid.circuits()) {
    circuits.push_back(c);
    if (c.contains(p)) left_through.push_back(c.without(p));
  }
  for (Subset c : right.matroid.circuits()) {
    Subset mapped = relabel(c, map);
    circuits.push_back(mapped);
    if (c.contains(right.basepoint)) right_through.push_back(mapped.without(p));
  }
  for (Subset c1 : left_through)
    for (Subset c2 : right_through) circuits.push_back(c1 | c2);
  const int n = left.matroid.size() + right.matroid.size() - 1;
  return PointedMatroid(Matroid(n, CircuitFamily(std::move(circuits))), p);
}

/// Appends an element e in general position; e becomes the basepoint.
inline PointedMatroid free_extension(const Matroid& m) {
  if (m.rank() < 1) throw ConstructionError("free extension of a rank-0 matroid would add a loop");
  const int n = m.size();
  if (n + 1 > kMaxElements) throw InputError("free_extension: ground size too large");
  std::vector<Subset> circuits(m.circuits().begin(), m.circuits().end());
  const int r = m.rank();
  for_each_subset(m.ground(), [&](Subset b) {
    if (b.size() == r && m.is_independent(b)) circuits.push_back(b.with(n));
  });
  return PointedMatroid(Matroid(n + 1, CircuitFamily(std::move(circuits))), n);
}

/// S((U_{k-2,k};p),(U_{l-2,l};p)) with p the last element of each side.
inline PointedMatroid series_uniform(int k, int l) {
  if (k < 3 || l < 3) throw InputError("series_uniform needs k, l >= 3");
  return series_connection(PointedMatroid(uniform(k - 2, k), k - 1), PointedMatroid(uniform(l - 2, l), l - 1));
}

}  // namespace matroid
