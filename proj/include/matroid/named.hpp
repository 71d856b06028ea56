#pragma once

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "matroid/construct.hpp"
#include "matroid/props.hpp"

namespace matroid {

/// Element roles in the registry's N5: the 3-circuit {e1, e2, e} with f1, f2 parallel to e1, e2.
namespace n5_elements {
inline constexpr int e1 = 0, f1 = 1, e = 2, e2 = 3, f2 = 4;
}

/// Edge labels of the registry's K_{2,3}; {e1,a,e,e2} and {b,c,e,e2} are 4-cycles.
namespace k23_elements {
inline constexpr int e1 = 0, a = 1, e = 2, e2 = 3, b = 4, c = 5;
}

/// N5 = S((U_{1,3};p),(U_{1,3};p)), basepoint e.
inline PointedMatroid n5() { return series_uniform(3, 3); }

inline Multigraph k4_graph() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Matroid mk4() { return cycle_matroid(k4_graph()); }

/// K_{2,3} with parts {u1,u2} = {0,1} and {v1,v2,v3} = {2,3,4}.
inline Multigraph k23_graph() {
  return Multigraph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}, {"e1", "a", "e", "e2", "b", "c"});
}

inline Matroid k23() { return cycle_matroid(k23_graph()); }

inline PointedMatroid su(int k, int l) { return series_uniform(k, l); }

/// Skew pairs whose circuits both avoid `e`.
inline std::vector<SkewFamily> skew_pairs_avoiding(const Matroid& m, int e) {
  std::vector<SkewFamily> out;
  for (auto& pair : skew_circuit_pairs(m))
    if (!pair.support().contains(e)) out.push_back(pair);
  return out;
}

namespace detail {

// Smallest element whose unique avoiding skew pair has the given sizes.
inline int element_with_unique_skew_pair(const Matroid& m, int small, int large) {
  for (int e = 0; e < m.size(); ++e) {
    auto pairs = skew_pairs_avoiding(m, e);
    if (pairs.size() != 1) continue;
    int a = pairs[0].circuits[0].size(), b = pairs[0].circuits[1].size();
    if (std::min(a, b) == small && std::max(a, b) == large) return e;
  }
  throw std::logic_error("no element with the requested unique skew pair");
}

}  // namespace detail

/// G(i), i in 1..5, pointed at its designated element e.
inline PointedMatroid g_family(int i) {
  const PointedMatroid u13(uniform(1, 3), 2);
  switch (i) {
    case 1:
      return n5();
    case 2:
      // e is a U_{1,4}-side element other than the basepoint f = 3.
      return PointedMatroid(series_connection(PointedMatroid(uniform(1, 4), 3), u13).matroid, 0);
    case 3:
    case 5: {
      Matroid m = series_connection(PointedMatroid(n5().matroid, n5_elements::f1), u13).matroid;
      int e = i == 3 ? detail::element_with_unique_skew_pair(m, 2, 3) : detail::element_with_unique_skew_pair(m, 2, 2);
      return PointedMatroid(std::move(m), e);
    }
    case 4: {
      // Edges 02 (f) and 13 (e) are the complement of the 4-cycle 0-1-2-3.
      Matroid m = series_connection(PointedMatroid(mk4(), 1), u13).matroid;
      return PointedMatroid(std::move(m), 4);
    }
    default:
      throw InputError("G(i) needs i in 1..5, got " + std::to_string(i));
  }
}

/// L(i) = S((G(i); e),(U_{1,3}; p)), pointed at the connection point.
inline PointedMatroid l_family(int i) { return series_connection(g_family(i), PointedMatroid(uniform(1, 3), 2)); }

/// A registry entry: the matroid plus its designated element when it has one.
struct NamedMatroid {
  std::string id;
  Matroid matroid;
  std::optional<int> tag_e;
};

/// Resolves "N5", "MK4", "K23", "U:r,n", "SU:k,l", "G:i", "L:i".
inline NamedMatroid named(const std::string& id) {
  if (id == "N5") return {id, n5().matroid, n5_elements::e};
  if (id == "MK4") return {id, mk4(), std::nullopt};
  if (id == "K23") return {id, k23(), k23_elements::e};
  static const std::regex two(R"((U|SU):(\d+),(\d+))");
  static const std::regex one(R"((G|L):(\d+))");
  std::smatch match;
  if (std::regex_match(id, match, two)) {
    const int a = std::stoi(match[2]), b = std::stoi(match[3]);
    if (match[1] == "U") return {id, uniform(a, b), std::nullopt};
    auto p = su(a, b);
    return {id, p.matroid, p.basepoint};
  }
  if (std::regex_match(id, match, one)) {
    const int i = std::stoi(match[2]);
    auto p = match[1] == "G" ? g_family(i) : l_family(i);
    return {id, p.matroid, p.basepoint};
  }
  throw InputError("unknown registry id: " + id);
}

/// Every registry entry used by the catalogs.
inline std::vector<std::string> registry_ids() {
  std::vector<std::string> ids{"N5", "MK4", "K23", "U:2,4"};
  for (int k = 3; k <= 5; ++k)
    for (int l = k; l <= 5; ++l) ids.push_back("SU:" + std::to_string(k) + "," + std::to_string(l));
  for (int i = 1; i <= 5; ++i) ids.push_back("G:" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) ids.push_back("L:" + std::to_string(i));
  return ids;
}

}  // namespace matroid
