#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "pathdiv/digraph.hpp"

namespace pathdiv {

// What is left once every AS keeps a single preferred route towards the
// origin: an arborescence rooted at the origin when produced by
// select_bgp_digraph, plus the vertices the announcement never reached.
struct bgp_digraph {
  as_number origin;
  digraph graph;
  std::set<as_number> unreached;
};

// Prune the announcement digraph down to one in-arc per reachable AS: the
// parent lies at shortest-path distance and ties go to the lowest AS
// number. Unreachable vertices are reported, not errors.
inline bgp_digraph select_bgp_digraph(const announcement_digraph& a) {
  const digraph& g = a.graph();
  const std::size_t origin_index = g.vertex_index(a.origin());
  const auto out = detail::out_lists(g);
  const auto in = detail::in_lists(g);

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), unvisited);
  std::vector<std::size_t> queue{origin_index};
  dist[origin_index] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t w : out[queue[i]])
      if (dist[w] == unvisited) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }

  std::vector<as_number> reached;
  std::vector<arc> arcs;
  std::set<as_number> unreached;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (dist[v] == unvisited) {
      unreached.insert(g.vertices()[v]);
      continue;
    }
    reached.push_back(g.vertices()[v]);
    if (v == origin_index) continue;
    // in-lists are ascending by tail, so the first qualifying neighbour is
    // the lowest-AS parent at distance dist[v] - 1
    for (std::size_t u : in[v]) {
      if (dist[u] != unvisited && dist[u] + 1 == dist[v]) {
        arcs.push_back({g.vertices()[u], g.vertices()[v]});
        break;
      }
    }
  }
  return {a.origin(), digraph(std::move(reached), std::move(arcs)), std::move(unreached)};
}

// Constructive single-path check: enumerate simple paths from the origin
// depth-first and fail as soon as any vertex is reached twice, so the walk
// stays linear for well-formed inputs. True iff every vertex of the graph
// is reached exactly once.
inline bool verify_single_path(const bgp_digraph& b) {
  const digraph& g = b.graph;
  if (!g.has_vertex(b.origin)) return false;
  const auto out = detail::out_lists(g);
  std::vector<std::size_t> count(g.order(), 0);
  std::vector<char> on_stack(g.order(), 0);
  bool multiple = false;

  const auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (multiple) return;
    if (++count[v] > 1) {
      multiple = true;
      return;
    }
    on_stack[v] = 1;
    for (std::size_t w : out[v])
      if (!on_stack[w]) self(self, w);
    on_stack[v] = 0;
  };
  dfs(dfs, g.vertex_index(b.origin));

  if (multiple) return false;
  for (std::size_t c : count)
    if (c != 1) return false;
  return true;
}

}  // namespace pathdiv
