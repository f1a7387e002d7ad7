#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pathdiv/digraph.hpp"
#include "pathdiv/errors.hpp"

namespace pathdiv {

// Pairwise arc-disjoint directed source -> target paths.
struct path_set {
  as_number source;
  as_number target;
  std::vector<std::vector<as_number>> paths;
};

// The destination digraph: converse of the announcement digraph, i.e. the
// ways the other ASs can reach the origin.
inline announcement_digraph destination_digraph(const announcement_digraph& a) {
  return announcement_digraph(a.origin(), converse(a.graph()));
}

namespace detail {

// Unit-capacity max-flow via breadth-first augmenting paths. Every
// augmentation adds one unit, so total work is flow * (V + A), which is
// what small flow values on dense graphs want.
class flow_network {
public:
  struct edge_ref {
    std::size_t node;
    std::size_t index;
  };

  explicit flow_network(std::size_t nodes) : adj_(nodes) {}

  edge_ref add_edge(std::size_t from, std::size_t to, int capacity) {
    adj_[from].push_back({to, capacity, adj_[to].size()});
    adj_[to].push_back({from, 0, adj_[from].size() - 1});
    return {from, adj_[from].size() - 1};
  }

  int max_flow(std::size_t source, std::size_t sink) {
    int flow = 0;
    const std::size_t npos = static_cast<std::size_t>(-1);
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size(), {npos, 0});
      std::vector<char> seen(adj_.size(), 0);
      std::vector<std::size_t> queue{source};
      seen[source] = 1;
      for (std::size_t i = 0; i < queue.size() && !seen[sink]; ++i) {
        const std::size_t u = queue[i];
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const edge& e = adj_[u][k];
          if (e.cap <= 0 || seen[e.to]) continue;
          seen[e.to] = 1;
          parent[e.to] = {u, k};
          queue.push_back(e.to);
        }
      }
      if (!seen[sink]) break;
      for (std::size_t v = sink; v != source;) {
        auto [u, k] = parent[v];
        adj_[u][k].cap -= 1;
        adj_[v][adj_[u][k].rev].cap += 1;
        v = u;
      }
      ++flow;
    }
    return flow;
  }

  bool saturated(edge_ref e) const { return adj_[e.node][e.index].cap == 0; }

private:
  struct edge {
    std::size_t to;
    int cap;
    std::size_t rev;
  };

  std::vector<std::vector<edge>> adj_;
};

inline std::pair<std::size_t, std::size_t> checked_pair(const digraph& g,
                                                        as_number s, as_number t) {
  const std::size_t si = g.vertex_index(s);
  const std::size_t ti = g.vertex_index(t);
  if (s == t) throw graph_error("source and target must differ, got " + as_label(s));
  return {si, ti};
}

}  // namespace detail

// Maximum number of pairwise arc-disjoint s -> t paths, computed as a
// max-flow with unit capacity on every arc; equals the minimum s-t arc cut.
inline std::size_t adp(const digraph& g, as_number s, as_number t) {
  const auto [si, ti] = detail::checked_pair(g, s, t);
  detail::flow_network net(g.order());
  for (const arc& a : g.arcs())
    net.add_edge(g.vertex_index(a.tail), g.vertex_index(a.head), 1);
  return static_cast<std::size_t>(net.max_flow(si, ti));
}

// Maximum number of s -> t paths sharing no arc and no intermediate
// vertex. Every vertex other than s and t is split into an in/out pair
// joined by a unit-capacity edge, then the arc flow runs between the
// halves.
inline std::size_t idp(const digraph& g, as_number s, as_number t) {
  const auto [si, ti] = detail::checked_pair(g, s, t);
  const auto in_node = [](std::size_t i) { return 2 * i; };
  const auto out_node = [](std::size_t i) { return 2 * i + 1; };
  detail::flow_network net(2 * g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (i != si && i != ti) net.add_edge(in_node(i), out_node(i), 1);
  for (const arc& a : g.arcs())
    net.add_edge(out_node(g.vertex_index(a.tail)), in_node(g.vertex_index(a.head)), 1);
  return static_cast<std::size_t>(net.max_flow(out_node(si), in_node(ti)));
}

// Decompose a maximum unit flow into adp(g, s, t) arc-disjoint paths. Each
// walk follows the lowest-AS-number arc that still carries flow; revisiting
// a vertex excises the intervening flow cycle. Paths are returned in
// ascending lexicographic order.
inline path_set extract_paths(const digraph& g, as_number s, as_number t) {
  const auto [si, ti] = detail::checked_pair(g, s, t);
  detail::flow_network net(g.order());
  std::vector<detail::flow_network::edge_ref> refs;
  refs.reserve(g.size());
  for (const arc& a : g.arcs())
    refs.push_back(net.add_edge(g.vertex_index(a.tail), g.vertex_index(a.head), 1));
  net.max_flow(si, ti);

  // Flow-carrying heads per tail, ascending because arcs are sorted.
  std::vector<std::vector<std::size_t>> flow_out(g.order());
  for (std::size_t k = 0; k < g.size(); ++k)
    if (net.saturated(refs[k]))
      flow_out[g.vertex_index(g.arcs()[k].tail)].push_back(
          g.vertex_index(g.arcs()[k].head));

  std::vector<std::size_t> cursor(g.order(), 0);
  std::vector<std::vector<as_number>> paths;
  while (cursor[si] < flow_out[si].size()) {
    std::vector<std::size_t> walk{si};
    std::size_t v = si;
    while (v != ti) {
      const std::size_t w = flow_out[v][cursor[v]++];
      auto it = std::find(walk.begin(), walk.end(), w);
      if (it != walk.end())
        walk.erase(it + 1, walk.end());
      else
        walk.push_back(w);
      v = w;
    }
    std::vector<as_number> path;
    path.reserve(walk.size());
    for (std::size_t i : walk) path.push_back(g.vertices()[i]);
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return {s, t, std::move(paths)};
}

inline constexpr std::size_t brute_force_arc_limit = 20;

// Minimum s-t arc cut by exhaustive subset search, smallest removal first.
// This is the verification oracle for adp; inputs are capped at
// brute_force_arc_limit arcs.
inline std::size_t brute_force_adp(const digraph& g, as_number s, as_number t) {
  const auto [si, ti] = detail::checked_pair(g, s, t);
  const std::size_t m = g.size();
  if (m > brute_force_arc_limit)
    throw capacity_error("brute-force cut search supports at most " +
                         std::to_string(brute_force_arc_limit) + " arcs, got " +
                         std::to_string(m));

  // Out-lists labelled with arc ids so removals are a bitmask test.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(g.order());
  for (std::size_t k = 0; k < m; ++k)
    out[g.vertex_index(g.arcs()[k].tail)].push_back(
        {g.vertex_index(g.arcs()[k].head), k});

  const auto connected = [&](std::uint32_t removed) {
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> queue{si};
    seen[si] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      if (seen[ti]) return true;
      for (const auto& [w, id] : out[queue[i]]) {
        if ((removed >> id) & 1u) continue;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen[ti] != 0;
  };

  if (!connected(0)) return 0;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::uint32_t mask = 0;
      for (std::size_t id : pick) mask |= 1u << id;
      if (!connected(mask)) return k;
      // next k-combination of [0, m)
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (pick[i] != i + m - k) {
          ++pick[i];
          for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
        if (i == 0) goto next_size;
      }
    }
  next_size:;
  }
  throw std::logic_error("cut search exhausted without disconnecting");
}

}  // namespace pathdiv
