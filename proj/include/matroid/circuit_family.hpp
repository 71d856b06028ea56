#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "matroid/errors.hpp"
#include "matroid/subset.hpp"

namespace matroid {

/// An antichain of nonempty subsets kept in canonical order, so two families
/// are equal exactly when their member lists are equal.
class CircuitFamily {
 public:
  CircuitFamily() = default;

  /// Sorts `members` and validates: nonempty members, no duplicates, no containment.
  explicit CircuitFamily(std::vector<Subset> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].empty()) throw InputError("circuit family contains the empty set");
      if (i > 0 && members_[i] == members_[i - 1])
        throw InputError("circuit family contains duplicate member " + members_[i].to_string());
    }
    // Sorted by size, so only a later member can contain an earlier one.
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j)
        if (members_[j].includes(members_[i]))
          throw InputError("circuit family is not an antichain: " + members_[i].to_string() + " is contained in " +
                           members_[j].to_string());
  }

  /// Skips validation. `members` must already be a canonical-order antichain.
  static CircuitFamily trusted(std::vector<Subset> members) {
    CircuitFamily f;
    f.members_ = std::move(members);
    return f;
  }

  /// The inclusion-minimal nonempty sets among `sets` (duplicates removed).
  static CircuitFamily minimal_of(std::vector<Subset> sets) {
    std::erase_if(sets, [](Subset s) { return s.empty(); });
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Subset> kept;
    for (Subset s : sets) {
      bool minimal = std::none_of(kept.begin(), kept.end(), [&](Subset k) { return s.includes(k); });
      if (minimal) kept.push_back(s);
    }
    return trusted(std::move(kept));
  }

  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Subset operator[](std::size_t i) const { return members_[i]; }

  bool contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  /// True iff some member is a subset of `set`.
  bool has_member_within(Subset set) const {
    for (Subset c : members_) {
      if (c.size() > set.size()) return false;
      if (set.includes(c)) return true;
    }
    return false;
  }

  /// Union of all members.
  Subset support() const {
    Subset u;
    for (Subset c : members_) u |= c;
    return u;
  }

  bool operator==(const CircuitFamily&) const = default;

 private:
  std::vector<Subset> members_;
};

}  // namespace matroid
