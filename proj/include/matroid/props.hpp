#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

/// Default truncation for witness lists; totals are always reported.
inline constexpr std::size_t kDefaultMaxWitnesses = 100;

/// One (C1, C2, e1, e2, e) instance of symmetric strong elimination.
struct SsceWitness {
  Subset c1, c2;
  int e1 = -1, e2 = -1, e = -1;
  std::optional<Subset> resolved;  // the circuit C3 when one exists
};

struct SsceResult {
  bool holds = true;
  std::size_t violation_count = 0;
  std::vector<SsceWitness> violations;  // first max_witnesses of them
};

/// Searches for a circuit C3 with {e1,e2} <= C3 <= (C1 u C2) - e.
inline std::optional<Subset> resolve_ssce(const Matroid& m, Subset c1, Subset c2, int e1, int e2, int e) {
  const Subset room = (c1 | c2).without(e);
  const Subset need = Subset::of({e1, e2});
  for (Subset c : m.circuits())
    if (room.includes(c) && c.includes(need)) return c;
  return std::nullopt;
}

inline SsceResult ssce_check(const Matroid& m, std::size_t max_witnesses = kDefaultMaxWitnesses) {
  SsceResult out;
  const auto& cs = m.circuits().members();
  std::vector<Subset> inside;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Subset both = cs[i] & cs[j];
      if (both.empty()) continue;
      const Subset only1 = cs[i] - cs[j];
      const Subset only2 = cs[j] - cs[i];
      for (int e : both) {
        const Subset room = (cs[i] | cs[j]).without(e);
        inside.clear();
        for (Subset c : cs)
          if (room.includes(c)) inside.push_back(c);
        for (int e1 : only1)
          for (int e2 : only2) {
            const Subset need = Subset::of({e1, e2});
            bool ok = false;
            for (Subset c : inside)
              if (c.includes(need)) {
                ok = true;
                break;
              }
            if (ok) continue;
            out.holds = false;
            ++out.violation_count;
            if (out.violations.size() < max_witnesses) out.violations.push_back({cs[i], cs[j], e1, e2, e, std::nullopt});
          }
      }
    }
  return out;
}

/// k circuits whose union restricts to the direct sum of their restrictions.
struct SkewFamily {
  std::vector<Subset> circuits;

  Subset support() const {
    Subset u;
    for (Subset c : circuits) u |= c;
    return u;
  }
  bool operator==(const SkewFamily&) const = default;
};

inline bool are_skew(const Matroid& m, Subset x, Subset y) { return m.rank(x) + m.rank(y) == m.rank(x | y); }

/// All unordered pairs of distinct skew circuits.
inline std::vector<SkewFamily> skew_circuit_pairs(const Matroid& m) {
  std::vector<SkewFamily> out;
  const auto& cs = m.circuits().members();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (are_skew(m, cs[i], cs[j])) out.push_back({{cs[i], cs[j]}});
  return out;
}

/// Every circuit inside the union of `members` lies within a single member.
inline bool is_direct_sum_of_circuits(const Matroid& m, const std::vector<Subset>& members) {
  Subset uni;
  for (Subset c : members) uni |= c;
  for (Subset c : m.circuits()) {
    if (!uni.includes(c)) continue;
    bool within_one = false;
    for (Subset d : members)
      if (d.includes(c)) {
        within_one = true;
        break;
      }
    if (!within_one) return false;
  }
  return true;
}

/// Rank of the union equals the sum of the member ranks |C|-1.
inline bool is_rank_additive(const Matroid& m, const std::vector<Subset>& members) {
  Subset uni;
  int total = 0;
  for (Subset c : members) {
    uni |= c;
    total += c.size() - 1;
  }
  return m.rank(uni) == total;
}

struct KSkewResult {
  bool found = false;
  std::optional<SkewFamily> family;
};

/// Searches for k skew circuits. Candidates are pairwise disjoint (distinct skew
/// circuits always are), and a partial family that already fails the direct-sum
/// test is abandoned.
inline KSkewResult has_k_skew(const Matroid& m, int k) {
  if (k < 1) throw InputError("has_k_skew: k must be at least 1");
  const auto& cs = m.circuits().members();
  std::vector<Subset> chosen;
  auto dfs = [&](auto&& self, std::size_t start, Subset used) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t i = start; i < cs.size(); ++i) {
      if (cs[i].intersects(used)) continue;
      chosen.push_back(cs[i]);
      if (is_direct_sum_of_circuits(m, chosen) && self(self, i + 1, used | cs[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  KSkewResult out;
  if (dfs(dfs, 0, Subset{})) {
    if (!is_rank_additive(m, chosen)) throw std::logic_error("skew family fails rank additivity");
    out.found = true;
    out.family = SkewFamily{chosen};
  }
  return out;
}

/// Connected, and M/F connected for every flat F.
inline bool is_unbreakable(const Matroid& m) {
  if (!m.is_connected()) return false;
  const Subset all = m.ground();
  for (Subset f : m.flats()) {
    if (f == all) continue;
    if (!contract_elements(m, f).is_connected()) return false;
  }
  return true;
}

/// C1 xor C2 is a circuit for every distinct intersecting pair.
inline bool is_circuit_difference(const Matroid& m) {
  const auto& cs = m.circuits().members();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i].intersects(cs[j]) && !m.is_circuit(cs[i] ^ cs[j])) return false;
  return true;
}

}  // namespace matroid
