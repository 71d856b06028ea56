#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matroid/construct.hpp"
#include "matroid/isomorphism.hpp"

namespace matroid {

/// Hosts above this size need `allow_large`; the search is exponential in the size gap.
inline constexpr int kDefaultSeriesMinorHostLimit = 12;

struct SeriesMove {
  enum class Kind { remove, contract };
  Kind kind = Kind::remove;
  int element = -1;  // label in the host matroid

  std::string to_string() const {
    return std::string(kind == Kind::remove ? "delete " : "contract ") + std::to_string(element);
  }
  bool operator==(const SeriesMove&) const = default;
};

/// A target matroid, optionally with an element that must correspond to the host's pinned element.
struct SeriesTarget {
  Matroid matroid;
  std::optional<int> pin;
};

struct SeriesMinorOptions {
  std::optional<int> host_pin;  // never deleted or contracted; matched to target pins
  bool allow_large = false;
  int host_limit = kDefaultSeriesMinorHostLimit;
};

struct SeriesMinorResult {
  bool found = false;
  int target_index = -1;
  std::vector<SeriesMove> moves;
  std::size_t states_explored = 0;
};

namespace detail {

inline CanonicalKey state_key(const Matroid& m, int pin) {
  return pin < 0 ? canonical_key(m) : pointed_key(m, pin);
}

}  // namespace detail

/// One move: delete any element, or contract an element of a nontrivial series class.
struct SeriesChild {
  SeriesMove move;
  Minor minor;
};

inline std::vector<SeriesChild> series_minor_moves(const Matroid& m, int pin = -1) {
  std::vector<SeriesChild> out;
  const ElementPartition classes = m.series_classes();
  for (int x = 0; x < m.size(); ++x) {
    if (x == pin) continue;
    out.push_back({{SeriesMove::Kind::remove, x}, minor(m, Subset{}, Subset::singleton(x))});
    if (classes.block_of(x).size() >= 2)
      out.push_back({{SeriesMove::Kind::contract, x}, minor(m, Subset::singleton(x), Subset{})});
  }
  return out;
}

/// Breadth-first search over series minors of `host`, memoized by canonical key,
/// for the first (in BFS order) target reached. States that cannot reach any
/// target by rank, corank or size are pruned; all three only decrease along moves.
inline SeriesMinorResult find_series_minor(const Matroid& host, const std::vector<SeriesTarget>& targets,
                                           const SeriesMinorOptions& options = {}) {
  if (host.size() > options.host_limit && !options.allow_large)
    throw InputError("series-minor search on " + std::to_string(host.size()) +
                     " elements exceeds the limit of " + std::to_string(options.host_limit) + " (allow_large overrides)");
  const bool pinned = options.host_pin.has_value();
  std::map<CanonicalKey, int> target_of_key;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (targets[t].pin.has_value() != pinned)
      throw InputError("series-minor search: host and targets must be pinned together");
    auto key = pinned ? pointed_key(targets[t].matroid, *targets[t].pin) : canonical_key(targets[t].matroid);
    target_of_key.emplace(std::move(key), static_cast<int>(t));
  }
  auto reachable = [&](const Matroid& m) {
    for (const auto& t : targets)
      if (t.matroid.size() <= m.size() && t.matroid.rank() <= m.rank() &&
          t.matroid.size() - t.matroid.rank() <= m.size() - m.rank())
        return true;
    return false;
  };

  struct Node {
    Matroid matroid;
    std::vector<int> host_label;
    int pin;
    int parent;
    SeriesMove move;
  };
  std::vector<Node> nodes;
  std::set<CanonicalKey> seen;
  SeriesMinorResult result;

  auto finish = [&](int index, int target) {
    result.found = true;
    result.target_index = target;
    for (int i = index; nodes[i].parent >= 0; i = nodes[i].parent) result.moves.push_back(nodes[i].move);
    std::reverse(result.moves.begin(), result.moves.end());
  };

  std::vector<int> identity(host.size());
  std::iota(identity.begin(), identity.end(), 0);
  const int host_pin = pinned ? *options.host_pin : -1;
  if (pinned && (host_pin < 0 || host_pin >= host.size())) throw InputError("host pin out of range");
  nodes.push_back({host, identity, host_pin, -1, {}});
  {
    auto key = detail::state_key(host, host_pin);
    if (auto it = target_of_key.find(key); it != target_of_key.end()) {
      finish(0, it->second);
      result.states_explored = 1;
      return result;
    }
    seen.insert(std::move(key));
  }
  if (!reachable(host)) return result;

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int index = queue.front();
    queue.pop_front();
    ++result.states_explored;
    // Copy: nodes may reallocate below.
    const Matroid current = nodes[index].matroid;
    const std::vector<int> labels = nodes[index].host_label;
    const int pin = nodes[index].pin;
    for (auto& child : series_minor_moves(current, pin)) {
      const Matroid& next = child.minor.matroid;
      if (!reachable(next)) continue;
      const int next_pin = pin < 0 ? -1 : child.minor.new_of_old[pin];
      auto key = detail::state_key(next, next_pin);
      if (!seen.insert(key).second) continue;
      std::vector<int> next_labels(next.size());
      for (int e = 0; e < next.size(); ++e) next_labels[e] = labels[child.minor.old_of_new[e]];
      SeriesMove move = child.move;
      move.element = labels[move.element];
      nodes.push_back({next, std::move(next_labels), next_pin, index, move});
      const int next_index = static_cast<int>(nodes.size()) - 1;
      if (auto it = target_of_key.find(key); it != target_of_key.end()) {
        finish(next_index, it->second);
        return result;
      }
      queue.push_back(next_index);
    }
  }
  return result;
}

/// Every series minor of `m` (itself included), one per isomorphism class.
inline std::vector<Matroid> all_series_minors(const Matroid& m, bool allow_large = false) {
  if (m.size() > kDefaultSeriesMinorHostLimit && !allow_large)
    throw InputError("series-minor enumeration above " + std::to_string(kDefaultSeriesMinorHostLimit) +
                     " elements needs allow_large");
  std::vector<Matroid> out{m};
  std::set<CanonicalKey> seen{canonical_key(m)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Matroid current = out[i];
    for (auto& child : series_minor_moves(current))
      if (seen.insert(canonical_key(child.minor.matroid)).second) out.push_back(child.minor.matroid);
  }
  return out;
}

inline bool has_series_minor(const Matroid& host, const Matroid& target, bool allow_large = false) {
  SeriesMinorOptions options;
  options.allow_large = allow_large;
  return find_series_minor(host, {{target, std::nullopt}}, options).found;
}

struct SuMinorResult {
  bool found = false;
  int k = 0;
  int l = 0;
};

/// Looks for a series minor S(U_{k-2,k}, U_{l-2,l}) over all 3 <= k <= l with k + l - 1 <= |E|.
inline SuMinorResult has_su_series_minor(const Matroid& m, bool allow_large = false) {
  std::vector<SeriesTarget> targets;
  std::vector<std::pair<int, int>> params;
  for (int k = 3; k <= m.size(); ++k)
    for (int l = k; k + l - 1 <= m.size(); ++l) {
      targets.push_back({series_uniform(k, l).matroid, std::nullopt});
      params.emplace_back(k, l);
    }
  SuMinorResult out;
  if (targets.empty()) return out;
  SeriesMinorOptions options;
  options.allow_large = allow_large;
  auto found = find_series_minor(m, targets, options);
  if (found.found) {
    out.found = true;
    std::tie(out.k, out.l) = params[found.target_index];
  }
  return out;
}

}  // namespace matroid
