#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here is deliberately naive: closures by Floyd-Warshall, path sets by
// exhaustive enumeration, so the production algorithms are checked against
// a different route.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pathdiv/digraph.hpp"

namespace test_support {

using pathdiv::arc;
using pathdiv::as_number;
using pathdiv::digraph;

// Random simple digraph: vertex count in [min_vertices, max_vertices], AS
// numbers drawn without replacement from [1, pool], each ordered pair an
// arc with probability arc_prob.
inline digraph random_digraph(std::mt19937_64& rng, std::size_t min_vertices,
                              std::size_t max_vertices, double arc_prob,
                              std::uint32_t pool = 60) {
  const std::size_t n =
      min_vertices + rng() % (max_vertices - min_vertices + 1);
  std::set<std::uint32_t> chosen;
  while (chosen.size() < n) chosen.insert(1 + static_cast<std::uint32_t>(rng() % pool));
  std::vector<as_number> vertices(chosen.begin(), chosen.end());
  std::vector<arc> arcs;
  const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (as_number a : vertices)
    for (as_number b : vertices)
      if (a != b && unit() < arc_prob) arcs.push_back({a, b});
  return digraph(std::move(vertices), std::move(arcs));
}

// Random digraph with at most max_arcs arcs, for oracle-guarded checks.
inline digraph random_sparse_digraph(std::mt19937_64& rng, std::size_t min_vertices,
                                     std::size_t max_vertices, std::size_t max_arcs,
                                     std::uint32_t pool = 60) {
  const std::size_t n =
      min_vertices + rng() % (max_vertices - min_vertices + 1);
  std::set<std::uint32_t> chosen;
  while (chosen.size() < n) chosen.insert(1 + static_cast<std::uint32_t>(rng() % pool));
  const std::vector<as_number> vertices(chosen.begin(), chosen.end());

  std::vector<arc> all_pairs;
  for (as_number a : vertices)
    for (as_number b : vertices)
      if (a != b) all_pairs.push_back({a, b});
  std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
  const std::size_t want = rng() % (max_arcs + 1);
  std::vector<arc> arcs(all_pairs.begin(),
                        all_pairs.begin() + std::min(want, all_pairs.size()));
  return digraph(vertices, std::move(arcs));
}

// Transitive closure by Floyd-Warshall; closure[i][j] is true iff a
// directed walk runs from vertex i to vertex j (every vertex reaches
// itself).
inline std::vector<std::vector<bool>> transitive_closure(const digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const arc& a : g.arcs())
    reach[g.vertex_index(a.tail)][g.vertex_index(a.head)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

// All simple s -> t paths by depth-first enumeration.
inline std::vector<std::vector<as_number>> all_simple_paths(const digraph& g,
                                                            as_number s, as_number t) {
  std::vector<std::vector<as_number>> found;
  std::vector<as_number> current{s};
  std::set<as_number> visited{s};
  const auto dfs = [&](auto&& self, as_number v) -> void {
    if (v == t) {
      found.push_back(current);
      return;
    }
    for (const arc& a : g.arcs()) {
      if (a.tail != v || visited.count(a.head)) continue;
      visited.insert(a.head);
      current.push_back(a.head);
      self(self, a.head);
      current.pop_back();
      visited.erase(a.head);
    }
  };
  dfs(dfs, s);
  return found;
}

namespace detail {

inline std::set<std::pair<as_number, as_number>> arc_set(
    const std::vector<as_number>& path) {
  std::set<std::pair<as_number, as_number>> arcs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    arcs.insert({path[i], path[i + 1]});
  return arcs;
}

inline bool arcs_disjoint(const std::vector<as_number>& a,
                          const std::vector<as_number>& b) {
  const auto sa = arc_set(a);
  for (const auto& x : arc_set(b))
    if (sa.count(x)) return false;
  return true;
}

inline bool internally_disjoint(const std::vector<as_number>& a,
                                const std::vector<as_number>& b) {
  if (!arcs_disjoint(a, b)) return false;
  std::set<as_number> inner(a.begin() + 1, a.end() - 1);
  for (std::size_t i = 1; i + 1 < b.size(); ++i)
    if (inner.count(b[i])) return false;
  return true;
}

template <typename Compatible>
std::size_t max_compatible_subset(const std::vector<std::vector<as_number>>& paths,
                                  Compatible compatible) {
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  const auto search = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < paths.size(); ++i) {
      bool ok = true;
      for (std::size_t j : chosen)
        if (!compatible(paths[i], paths[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return best;
}

}  // namespace detail

// Largest pairwise arc-disjoint subset of all simple s -> t paths.
inline std::size_t max_arc_disjoint_paths(const digraph& g, as_number s, as_number t) {
  return detail::max_compatible_subset(
      all_simple_paths(g, s, t),
      [](const auto& a, const auto& b) { return detail::arcs_disjoint(a, b); });
}

// Largest subset of all simple s -> t paths sharing no arc and no
// intermediate vertex.
inline std::size_t max_internally_disjoint_paths(const digraph& g, as_number s,
                                                 as_number t) {
  return detail::max_compatible_subset(
      all_simple_paths(g, s, t), [](const auto& a, const auto& b) {
        return detail::internally_disjoint(a, b);
      });
}

}  // namespace test_support
