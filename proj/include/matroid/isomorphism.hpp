#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

/// Opaque certificate: equal exactly for isomorphic (coloured) matroids.
using CanonicalKey = std::vector<std::uint64_t>;

namespace detail {

// Individualization-refinement canonical labelling over a circuit list.
//
// Element colours are refined by the multiset of (size, colour multiset) of the
// circuits through each element until stable. The search individualizes the
// elements of the first non-singleton cell; the certificate of a discrete
// colouring is the sorted relabelled circuit list, and the key is the
// lexicographic minimum over all leaves. Elements whose transposition is an
// automorphism give isomorphic subtrees, so only one per such twin class is
// branched on.
class CanonicalLabeller {
 public:
  CanonicalLabeller(int n, const std::vector<Subset>& circuits, std::span<const int> initial_colors)
      : n_(n), circuits_(circuits), through_(n) {
    for (std::size_t i = 0; i < circuits_.size(); ++i)
      for (int e : circuits_[i]) through_[e].push_back(static_cast<int>(i));
    initial_.assign(n_, 0);
    if (!initial_colors.empty()) {
      if (static_cast<int>(initial_colors.size()) != n_) throw InputError("initial colouring has wrong length");
      initial_.assign(initial_colors.begin(), initial_colors.end());
    }
    compute_twins();
  }

  CanonicalKey run() {
    std::vector<int> colors = normalize(initial_);
    search(colors);
    CanonicalKey key;
    key.push_back(static_cast<std::uint64_t>(n_));
    // Initial colours in canonical position order make coloured keys distinct.
    std::vector<int> colour_at(n_);
    for (int e = 0; e < n_; ++e) colour_at[best_labelling_[e]] = initial_[e];
    for (int c : colour_at) key.push_back(static_cast<std::uint64_t>(c));
    key.push_back(best_.size());
    key.insert(key.end(), best_.begin(), best_.end());
    return key;
  }

  /// Element -> canonical position of the best leaf.
  const std::vector<int>& labelling() const { return best_labelling_; }

 private:
  static std::vector<int> normalize(const std::vector<int>& raw) {
    std::vector<int> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), raw[i]) - sorted.begin());
    return out;
  }

  static int count_colors(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  void refine(std::vector<int>& colors) const {
    int classes = count_colors(colors);
    while (true) {
      std::vector<std::vector<int>> circuit_sig(circuits_.size());
      for (std::size_t i = 0; i < circuits_.size(); ++i) {
        auto& sig = circuit_sig[i];
        sig.push_back(circuits_[i].size());
        for (int e : circuits_[i]) sig.push_back(colors[e]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::map<std::vector<int>, int> circuit_color;
      for (const auto& sig : circuit_sig) circuit_color.emplace(sig, 0);
      int next = 0;
      for (auto& [sig, c] : circuit_color) c = next++;

      std::vector<std::vector<int>> element_sig(n_);
      for (int e = 0; e < n_; ++e) {
        auto& sig = element_sig[e];
        sig.push_back(colors[e]);
        for (int ci : through_[e]) sig.push_back(circuit_color[circuit_sig[ci]]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::map<std::vector<int>, int> element_color;
      for (const auto& sig : element_sig) element_color.emplace(sig, 0);
      next = 0;
      for (auto& [sig, c] : element_color) c = next++;
      for (int e = 0; e < n_; ++e) colors[e] = element_color[element_sig[e]];
      if (next == classes) return;
      classes = next;
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);
    const int classes = count_colors(colors);
    if (classes == n_) {
      visit_leaf(colors);
      return;
    }
    std::vector<int> cell_size(classes, 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] < 2) ++target;

    std::vector<int> tried_twin_classes;
    for (int x = 0; x < n_; ++x) {
      if (colors[x] != target) continue;
      if (std::find(tried_twin_classes.begin(), tried_twin_classes.end(), twin_class_[x]) != tried_twin_classes.end())
        continue;
      tried_twin_classes.push_back(twin_class_[x]);
      std::vector<int> next(n_);
      for (int y = 0; y < n_; ++y) next[y] = 2 * colors[y] + (colors[y] == target && y != x ? 1 : 0);
      search(normalize(next));
    }
  }

  void visit_leaf(const std::vector<int>& position) {
    std::vector<std::uint64_t> cert;
    cert.reserve(circuits_.size());
    for (Subset c : circuits_) cert.push_back(relabel(c, position).bits());
    std::sort(cert.begin(), cert.end(), [](std::uint64_t a, std::uint64_t b) {
      return Subset(static_cast<Subset::word_type>(a)) < Subset(static_cast<Subset::word_type>(b));
    });
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_labelling_ = position;
      have_best_ = true;
    }
  }

  void compute_twins() {
    std::vector<Subset> sorted = circuits_;
    std::sort(sorted.begin(), sorted.end());
    UnionFind uf(n_);
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y) {
        if (initial_[x] != initial_[y] || uf.find(x) == uf.find(y)) continue;
        bool automorphism = true;
        for (Subset c : sorted) {
          if (c.contains(x) == c.contains(y)) continue;
          Subset swapped = c.contains(x) ? c.without(x).with(y) : c.without(y).with(x);
          if (!std::binary_search(sorted.begin(), sorted.end(), swapped)) {
            automorphism = false;
            break;
          }
        }
        if (automorphism) uf.unite(x, y);
      }
    twin_class_.resize(n_);
    for (int e = 0; e < n_; ++e) twin_class_[e] = uf.find(e);
  }

  int n_;
  const std::vector<Subset>& circuits_;
  std::vector<std::vector<int>> through_;
  std::vector<int> initial_;
  std::vector<int> twin_class_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_labelling_;
};

}  // namespace detail

/// Canonical key of M with elements pre-coloured by `colors` (empty: uncoloured).
inline CanonicalKey canonical_key(const Matroid& m, std::span<const int> colors) {
  detail::CanonicalLabeller labeller(m.size(), m.circuits().members(), colors);
  return labeller.run();
}

/// Canonical key of M; cached on the value.
inline const CanonicalKey& canonical_key(const Matroid& m) {
  return m.cached_key([](const Matroid& self) { return canonical_key(self, std::span<const int>{}); });
}

/// Key of M with element `point` distinguished from all others.
inline CanonicalKey pointed_key(const Matroid& m, int point) {
  std::vector<int> colors(m.size(), 0);
  colors.at(point) = 1;
  return canonical_key(m, colors);
}

/// Canonical relabelling: element -> position in the canonical order.
inline std::vector<int> canonical_labelling(const Matroid& m) {
  detail::CanonicalLabeller labeller(m.size(), m.circuits().members(), {});
  labeller.run();
  return labeller.labelling();
}

inline bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.circuits().size() != b.circuits().size()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace matroid
