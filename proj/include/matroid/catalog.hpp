#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "matroid/axioms.hpp"
#include "matroid/construct.hpp"
#include "matroid/isomorphism.hpp"
#include "matroid/named.hpp"

namespace matroid {

inline constexpr int kMaxClutterGround = 6;

/// Calls fn(family) for every antichain of nonempty subsets of {0..n-1}, the
/// empty family included. Families are produced in increasing order of their
/// membership mask over the canonically ordered nonempty subsets.
template <class Fn>
void for_each_clutter(int n, Fn&& fn) {
  if (n < 1 || n > kMaxClutterGround) throw InputError("clutter enumeration needs 1 <= n <= 6");
  std::vector<Subset> subsets;
  for_each_subset(Subset::full(n), [&](Subset s) {
    if (!s.empty()) subsets.push_back(s);
  });
  std::sort(subsets.begin(), subsets.end());
  const int count = static_cast<int>(subsets.size());
  std::vector<std::uint64_t> comparable(count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (subsets[i].includes(subsets[j]) || subsets[j].includes(subsets[i])) comparable[i] |= std::uint64_t{1} << j;

  std::vector<Subset> members;
  // Decide the highest index first, excluding before including.
  auto dfs = [&](auto&& self, int index, std::uint64_t forbidden, std::uint64_t chosen) -> void {
    while (index >= 0 && ((forbidden >> index) & 1u)) --index;
    if (index < 0) {
      members.clear();
      for (std::uint64_t rest = chosen; rest; rest &= rest - 1) members.push_back(subsets[std::countr_zero(rest)]);
      fn(CircuitFamily::trusted(members));
      return;
    }
    self(self, index - 1, forbidden, chosen);
    self(self, index - 1, forbidden | comparable[index], chosen | (std::uint64_t{1} << index));
  };
  dfs(dfs, count - 1, 0, 0);
}

inline std::uint64_t count_clutters(int n) {
  std::uint64_t count = 0;
  for_each_clutter(n, [&](const CircuitFamily&) { ++count; });
  return count;
}

namespace detail {

// Canonical form of a small multigraph by colour refinement and backtracking
// over vertex orders; vertices whose transposition is an automorphism are
// branched on once.
class GraphCanon {
 public:
  explicit GraphCanon(const Multigraph& g) : v_(g.vertex_count), adj_(v_, std::vector<int>(v_, 0)) {
    for (auto [a, b] : g.edges) {
      ++adj_[a][b];
      if (a != b) ++adj_[b][a];
    }
    UnionFind uf(v_);
    for (int x = 0; x < v_; ++x)
      for (int y = x + 1; y < v_; ++y) {
        bool twin = adj_[x][x] == adj_[y][y] && adj_[x][y] == adj_[y][x];
        for (int z = 0; z < v_ && twin; ++z)
          if (z != x && z != y && adj_[x][z] != adj_[y][z]) twin = false;
        if (twin) uf.unite(x, y);
      }
    twin_.resize(v_);
    for (int x = 0; x < v_; ++x) twin_[x] = uf.find(x);
  }

  std::vector<std::uint8_t> key() {
    search(std::vector<int>(v_, 0));
    best_.insert(best_.begin(), static_cast<std::uint8_t>(v_));
    return best_;
  }

 private:
  static std::vector<int> compress(const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return out;
  }

  void refine(std::vector<int>& colors) const {
    int classes = -1;
    while (true) {
      std::vector<std::vector<int>> sigs(v_);
      for (int x = 0; x < v_; ++x) {
        auto& s = sigs[x];
        s.push_back(colors[x]);
        s.push_back(adj_[x][x]);
        std::vector<int> around;
        for (int y = 0; y < v_; ++y)
          if (y != x && adj_[x][y]) around.push_back(colors[y] * 64 + adj_[x][y]);
        std::sort(around.begin(), around.end());
        s.insert(s.end(), around.begin(), around.end());
      }
      colors = compress(sigs);
      const int now = v_ == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> cell(v_, 0);
    for (int c : colors) ++cell[c];
    int target = -1;
    for (int c = 0; c < v_; ++c)
      if (cell[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> at(v_);
      for (int x = 0; x < v_; ++x) at[colors[x]] = x;
      std::vector<std::uint8_t> cert;
      for (int i = 0; i < v_; ++i)
        for (int j = i; j < v_; ++j) cert.push_back(static_cast<std::uint8_t>(adj_[at[i]][at[j]]));
      if (!have_best_ || cert < best_) {
        best_ = std::move(cert);
        have_best_ = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int x = 0; x < v_; ++x) {
      if (colors[x] != target || std::find(tried.begin(), tried.end(), twin_[x]) != tried.end()) continue;
      tried.push_back(twin_[x]);
      std::vector<std::vector<int>> sigs(v_);
      for (int y = 0; y < v_; ++y) sigs[y] = {colors[y], colors[y] == target && y != x ? 1 : 0};
      search(compress(sigs));
    }
  }

  int v_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> twin_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_;
};

}  // namespace detail

inline std::vector<std::uint8_t> graph_canonical_key(const Multigraph& g) { return detail::GraphCanon(g).key(); }

/// All 2-connected loopless multigraphs with 2..max_edges edges, one per
/// isomorphism class, grouped by edge count. Every such graph other than a cycle
/// arises from a smaller one by adding an open ear, so cycles plus ear additions
/// reach them all.
inline std::vector<std::vector<Multigraph>> two_connected_multigraphs(int max_edges) {
  std::vector<std::vector<Multigraph>> by_edges(std::max(max_edges, 1) + 1);
  std::vector<std::set<std::vector<std::uint8_t>>> seen(by_edges.size());
  auto add = [&](Multigraph g) {
    const int m = g.edge_count();
    if (seen[m].insert(graph_canonical_key(g)).second) by_edges[m].push_back(std::move(g));
  };
  for (int m = 2; m <= max_edges; ++m) {
    Multigraph cycle;
    cycle.vertex_count = m;
    for (int i = 0; i < m; ++i) cycle.edges.emplace_back(i, (i + 1) % m);
    add(cycle);
    for (int len = 1; len <= m - 2; ++len) {
      for (const Multigraph& base : by_edges[m - len]) {
        for (int u = 0; u < base.vertex_count; ++u)
          for (int v = u + 1; v < base.vertex_count; ++v) {
            Multigraph g = base;
            int prev = u;
            for (int step = 1; step < len; ++step) {
              const int fresh = g.vertex_count++;
              g.edges.emplace_back(prev, fresh);
              prev = fresh;
            }
            g.edges.emplace_back(prev, v);
            add(std::move(g));
          }
      }
    }
  }
  return by_edges;
}

enum class CatalogFamily { graphic, binary, uniform, named, clutter };

inline std::string to_string(CatalogFamily f) {
  switch (f) {
    case CatalogFamily::graphic: return "graphic";
    case CatalogFamily::binary: return "binary";
    case CatalogFamily::uniform: return "uniform";
    case CatalogFamily::named: return "named";
    case CatalogFamily::clutter: return "clutter";
  }
  return "?";
}

inline CatalogFamily parse_catalog_family(const std::string& s) {
  if (s == "graphic") return CatalogFamily::graphic;
  if (s == "binary") return CatalogFamily::binary;
  if (s == "uniform") return CatalogFamily::uniform;
  if (s == "named") return CatalogFamily::named;
  if (s == "clutter") return CatalogFamily::clutter;
  throw InputError("unknown catalog family: " + s);
}

struct CatalogSpec {
  CatalogFamily family = CatalogFamily::graphic;
  int max_edges = 8;     // graphic
  int max_rank = 3;      // binary
  int max_cols = 7;      // binary
  int max_n = 8;         // uniform
  int clutter_n = 4;     // clutter
  bool connected_only = false;
  bool dedup = true;
  bool allow_large = false;

  void validate() const {
    auto positive = [](int v, const char* what) {
      if (v <= 0) throw InputError(std::string("catalog bound must be positive: ") + what);
    };
    switch (family) {
      case CatalogFamily::graphic:
        positive(max_edges, "max_edges");
        if (max_edges > 12 && !allow_large) throw InputError("graphic catalogs above 12 edges need allow_large");
        break;
      case CatalogFamily::binary:
        positive(max_rank, "max_rank");
        positive(max_cols, "max_cols");
        if (max_cols > 12 && !allow_large) throw InputError("binary catalogs above 12 columns need allow_large");
        if (max_rank > 16) throw InputError("binary catalogs limited to 16 rows");
        break;
      case CatalogFamily::uniform:
        positive(max_n, "max_n");
        if (max_n > kMaxElements) throw InputError("uniform catalog bound too large");
        break;
      case CatalogFamily::clutter:
        positive(clutter_n, "clutter_n");
        if (clutter_n > kMaxClutterGround) throw InputError("clutter catalogs limited to n <= 6");
        if (clutter_n > 5 && !allow_large) throw InputError("clutter catalogs above n = 5 need allow_large");
        break;
      case CatalogFamily::named:
        break;
    }
  }
};

/// A catalog instance with a human-readable provenance string.
struct CatalogEntry {
  Matroid matroid;
  std::string source;
  std::optional<int> tag_e;
};

namespace detail {

inline std::string describe_graph(const Multigraph& g) {
  std::string s = "graph:v=" + std::to_string(g.vertex_count) + ":";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
  }
  return s;
}

inline std::vector<CatalogEntry> connected_graphic(int max_edges) {
  std::vector<CatalogEntry> out;
  out.push_back({cycle_matroid(Multigraph(1, {{0, 0}})), "graph:v=1:0-0", std::nullopt});
  out.push_back({cycle_matroid(Multigraph(2, {{0, 1}})), "graph:v=2:0-1", std::nullopt});
  std::set<CanonicalKey> keys;
  for (const auto& level : two_connected_multigraphs(max_edges))
    for (const Multigraph& g : level) {
      Matroid m = cycle_matroid(g);
      if (keys.insert(canonical_key(m)).second) out.push_back({std::move(m), describe_graph(g), std::nullopt});
    }
  return out;
}

}  // namespace detail

/// Streams catalog matroids to fn(const CatalogEntry&).
///
/// graphic: cycle matroids of connected multigraphs with at most max_edges edges.
/// Connected ones come from 2-connected loopless multigraphs plus the single
/// edge and single loop; the rest are direct sums of those.
/// binary: GF(2) matrices with max_rank rows and up to max_cols distinct nonzero columns.
/// uniform: U_{r,n} for 1 <= n <= max_n. named: the registry.
/// clutter: the antichains on clutter_n elements that are circuit families.
template <class Fn>
void for_each_catalog_matroid(const CatalogSpec& spec, Fn&& fn) {
  spec.validate();
  std::set<CanonicalKey> seen;
  auto emit = [&](CatalogEntry entry) {
    if (spec.connected_only && !entry.matroid.is_connected()) return;
    if (spec.dedup && !seen.insert(canonical_key(entry.matroid)).second) return;
    fn(entry);
  };
  switch (spec.family) {
    case CatalogFamily::graphic: {
      auto parts = detail::connected_graphic(spec.max_edges);
      if (spec.connected_only) {
        for (auto& e : parts) emit(std::move(e));
        break;
      }
      // Multisets of connected parts, indices non-increasing.
      std::vector<int> pick;
      auto rec = [&](auto&& self, int max_index, int budget, const Matroid& acc, const std::string& src) -> void {
        if (!pick.empty()) emit({acc, src, std::nullopt});
        for (int i = max_index; i >= 0; --i) {
          const auto& part = parts[i];
          if (part.matroid.size() > budget) continue;
          pick.push_back(i);
          self(self, i, budget - part.matroid.size(), direct_sum(acc, part.matroid),
               src.empty() ? part.source : src + " + " + part.source);
          pick.pop_back();
        }
      };
      rec(rec, static_cast<int>(parts.size()) - 1, spec.max_edges, Matroid(), "");
      break;
    }
    case CatalogFamily::binary: {
      const int vectors = (1 << spec.max_rank) - 1;
      if (vectors > 24) throw InputError("binary catalog: too many candidate columns");
      for_each_subset(Subset::full(vectors), [&](Subset cols) {
        if (cols.empty() || cols.size() > spec.max_cols) return;
        std::vector<std::uint64_t> columns;
        for (int c : cols) columns.push_back(static_cast<std::uint64_t>(c + 1));
        std::string src = "gf2:rows=" + std::to_string(spec.max_rank) + ":cols=";
        for (std::size_t i = 0; i < columns.size(); ++i) src += (i ? "," : "") + std::to_string(columns[i]);
        emit({from_gf2(GF2Matrix::from_columns(spec.max_rank, columns)), src, std::nullopt});
      });
      break;
    }
    case CatalogFamily::uniform:
      for (int n = 1; n <= spec.max_n; ++n)
        for (int r = 0; r <= n; ++r)
          emit({uniform(r, n), "U:" + std::to_string(r) + "," + std::to_string(n), std::nullopt});
      break;
    case CatalogFamily::named:
      for (const auto& id : registry_ids()) {
        auto entry = named(id);
        emit({entry.matroid, id, entry.tag_e});
      }
      break;
    case CatalogFamily::clutter:
      for_each_clutter(spec.clutter_n, [&](const CircuitFamily& f) {
        AxiomOptions quick;
        quick.stop_at_first = true;
        quick.max_witnesses = 0;
        if (!axiom_check(f, spec.clutter_n, AxiomSystem::c3, quick).holds) return;
        emit({Matroid(spec.clutter_n, f), "clutter", std::nullopt});
      });
      break;
  }
}

inline std::vector<CatalogEntry> collect_catalog(const CatalogSpec& spec) {
  std::vector<CatalogEntry> out;
  for_each_catalog_matroid(spec, [&](const CatalogEntry& e) { out.push_back(e); });
  return out;
}

}  // namespace matroid
