#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroid/circuit_family.hpp"
#include "matroid/props.hpp"

namespace matroid {

/// Circuit-elimination axiom systems that can be checked on a clutter.
enum class AxiomSystem {
  c3,           // weak elimination
  c3_strong,    // strong elimination: f in C1 - C2 kept in C3
  c3pp,         // symmetric elimination under the "no member in (C1-e1) u (C2-e2)" premise
  c3pp_unique,  // c3pp plus: C3 is the only member inside (C1 u C2) - e
  c3pp_weak,    // e1 in C1, e2 in C2 only; premise read as (C1 u C2) - {e1,e2}
};

inline std::string to_string(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::c3: return "C3";
    case AxiomSystem::c3_strong: return "C3-strong";
    case AxiomSystem::c3pp: return "C3pp";
    case AxiomSystem::c3pp_unique: return "C3pp-unique";
    case AxiomSystem::c3pp_weak: return "C3pp-weak";
  }
  return "?";
}

/// Accepts the library names and the short CLI names (c3, c3s, c3pp, ...), case-insensitive.
inline AxiomSystem parse_axiom_system(std::string name) {
  for (auto& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (name == "c3") return AxiomSystem::c3;
  if (name == "c3s" || name == "c3-strong") return AxiomSystem::c3_strong;
  if (name == "c3pp") return AxiomSystem::c3pp;
  if (name == "c3pp-unique") return AxiomSystem::c3pp_unique;
  if (name == "c3pp-weak") return AxiomSystem::c3pp_weak;
  throw InputError("unknown axiom system: " + name);
}

struct AxiomViolation {
  AxiomSystem system = AxiomSystem::c3;
  Subset c1, c2;
  std::optional<int> e1, e2, e;
  std::string note;
};

struct AxiomResult {
  bool holds = true;
  std::size_t violation_count = 0;
  std::vector<AxiomViolation> violations;
};

struct AxiomOptions {
  std::size_t max_witnesses = kDefaultMaxWitnesses;
  bool stop_at_first = false;
};

namespace detail {

inline bool has_member_containing_within(const CircuitFamily& f, Subset need, Subset room) {
  for (Subset c : f) {
    if (c.size() > room.size()) return false;
    if (room.includes(c) && c.includes(need)) return true;
  }
  return false;
}

inline int members_within(const CircuitFamily& f, Subset room, int cap) {
  int count = 0;
  for (Subset c : f) {
    if (c.size() > room.size()) break;
    if (room.includes(c) && ++count >= cap) break;
  }
  return count;
}

}  // namespace detail

inline AxiomResult axiom_check(const CircuitFamily& family, int n, AxiomSystem system, const AxiomOptions& options = {}) {
  if (n < 0 || n > kMaxElements) throw InputError("axiom_check: ground size out of range");
  for (Subset c : family)
    if (!c.within(n)) throw InputError("axiom_check: member " + c.to_string() + " exceeds ground size");

  AxiomResult out;
  bool stop = false;
  auto report = [&](Subset c1, Subset c2, std::optional<int> e1, std::optional<int> e2, std::optional<int> e,
                    std::string note) {
    out.holds = false;
    ++out.violation_count;
    if (out.violations.size() < options.max_witnesses)
      out.violations.push_back({system, c1, c2, e1, e2, e, std::move(note)});
    if (options.stop_at_first) stop = true;
  };

  const auto& cs = family.members();
  const std::size_t m = cs.size();
  for (std::size_t i = 0; i < m && !stop; ++i) {
    for (std::size_t j = 0; j < m && !stop; ++j) {
      if (i == j) continue;
      const Subset c1 = cs[i], c2 = cs[j];
      const Subset both = c1 & c2;
      if (both.empty()) continue;
      const Subset uni = c1 | c2;
      switch (system) {
        case AxiomSystem::c3:
          if (j < i) break;
          for (int e : both)
            if (!family.has_member_within(uni.without(e))) {
              report(c1, c2, std::nullopt, std::nullopt, e, "no member inside (C1 u C2) - e");
              if (stop) break;
            }
          break;
        case AxiomSystem::c3_strong:
          for (int e : both) {
            for (int f : c1 - c2)
              if (!detail::has_member_containing_within(family, Subset::singleton(f), uni.without(e))) {
                report(c1, c2, f, std::nullopt, e, "no member through e1 inside (C1 u C2) - e");
                if (stop) break;
              }
            if (stop) break;
          }
          break;
        case AxiomSystem::c3pp:
        case AxiomSystem::c3pp_unique:
          if (j < i) break;
          for (int e : both) {
            const Subset room = uni.without(e);
            for (int e1 : c1 - c2) {
              for (int e2 : c2 - c1) {
                if (family.has_member_within(c1.without(e1) | c2.without(e2))) continue;
                const Subset need = Subset::of({e1, e2});
                if (!detail::has_member_containing_within(family, need, room)) {
                  report(c1, c2, e1, e2, e, "premise holds but no member C3 with {e1,e2} <= C3 <= (C1 u C2) - e");
                } else if (system == AxiomSystem::c3pp_unique && detail::members_within(family, room, 2) > 1) {
                  report(c1, c2, e1, e2, e, "premise holds but (C1 u C2) - e contains more than one member");
                }
                if (stop) break;
              }
              if (stop) break;
            }
            if (stop) break;
          }
          break;
        case AxiomSystem::c3pp_weak:
          if (j < i) break;
          for (int e : both) {
            const Subset room = uni.without(e);
            for (int e1 : c1.without(e)) {
              for (int e2 : c2.without(e)) {
                if (e1 == e2) continue;
                if (family.has_member_within(uni - Subset::of({e1, e2}))) continue;
                if (detail::has_member_containing_within(family, Subset::of({e1, e2}), room)) continue;
                const bool literal = family.has_member_within(c1.without(e1) | c2.without(e2));
                report(c1, c2, e1, e2, e,
                       std::string("(C1 u C2) - {e1,e2} contains no member; literal (C1 - e1) u (C2 - e2) ") +
                           (literal ? "contains a member" : "contains no member"));
                if (stop) break;
              }
              if (stop) break;
            }
            if (stop) break;
          }
          break;
      }
    }
  }
  return out;
}

}  // namespace matroid
