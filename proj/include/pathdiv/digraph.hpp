#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathdiv/errors.hpp"

namespace pathdiv {

// AS number in the 4-byte space; zero is not a valid AS.
class as_number {
public:
  constexpr as_number(std::uint32_t value) : value_(value) {
    if (value == 0) throw graph_error("AS number must be positive");
  }

  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr auto operator<=>(const as_number&) const = default;

private:
  std::uint32_t value_;
};

inline std::string as_label(as_number v) {
  return "AS" + std::to_string(v.value());
}

// Directed arc tail -> head.
struct arc {
  as_number tail;
  as_number head;
  constexpr auto operator<=>(const arc&) const = default;
};

// Immutable simple digraph over AS numbers. Vertices and arcs are kept
// sorted and unique, so equal graphs compare equal and every serialization
// is deterministic. Arc endpoints are absorbed into the vertex set,
// duplicate arcs collapse, self-loops are rejected. Values never mutate
// after construction and are safe to share across threads.
class digraph {
public:
  digraph() = default;

  digraph(std::vector<as_number> vertices, std::vector<arc> arcs)
      : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
    for (const arc& a : arcs_) {
      if (a.tail == a.head) throw graph_error("self-loop at " + as_label(a.tail));
      vertices_.push_back(a.tail);
      vertices_.push_back(a.head);
    }
    sort_unique(vertices_);
    sort_unique(arcs_);
  }

  digraph(std::initializer_list<as_number> vertices, std::initializer_list<arc> arcs)
      : digraph(std::vector<as_number>(vertices), std::vector<arc>(arcs)) {}

  const std::vector<as_number>& vertices() const noexcept { return vertices_; }
  const std::vector<arc>& arcs() const noexcept { return arcs_; }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return arcs_.size(); }

  bool has_vertex(as_number v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_arc(as_number tail, as_number head) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), arc{tail, head});
  }

  // Position of v in the ascending vertex order; throws when absent.
  std::size_t vertex_index(as_number v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw graph_error(as_label(v) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool operator==(const digraph&) const = default;

private:
  template <typename T>
  static void sort_unique(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }

  std::vector<as_number> vertices_;
  std::vector<arc> arcs_;
};

namespace detail {

// Out-neighbour index lists. Arcs are sorted by (tail, head), so each list
// comes out ascending by head.
inline std::vector<std::vector<std::size_t>> out_lists(const digraph& g) {
  std::vector<std::vector<std::size_t>> out(g.order());
  for (const arc& a : g.arcs())
    out[g.vertex_index(a.tail)].push_back(g.vertex_index(a.head));
  return out;
}

// In-neighbour index lists, ascending by tail.
inline std::vector<std::vector<std::size_t>> in_lists(const digraph& g) {
  std::vector<std::vector<std::size_t>> in(g.order());
  for (const arc& a : g.arcs())
    in[g.vertex_index(a.head)].push_back(g.vertex_index(a.tail));
  return in;
}

}  // namespace detail

// Digraph with every arc reversed.
inline digraph converse(const digraph& g) {
  std::vector<arc> reversed;
  reversed.reserve(g.size());
  for (const arc& a : g.arcs()) reversed.push_back({a.head, a.tail});
  return digraph(g.vertices(), std::move(reversed));
}

inline digraph graph_union(const digraph& a, const digraph& b) {
  std::vector<as_number> vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  std::vector<arc> arcs = a.arcs();
  arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
  return digraph(std::move(vertices), std::move(arcs));
}

// Vertices reachable from start by directed walks, start included.
inline std::set<as_number> reachable_from(const digraph& g, as_number start) {
  const std::size_t s = g.vertex_index(start);
  const auto out = detail::out_lists(g);
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> queue{s};
  seen[s] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t w : out[queue[i]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  std::set<as_number> result;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (seen[i]) result.insert(g.vertices()[i]);
  return result;
}

// True iff every vertex is reachable from root, root has in-degree 0 and
// every other vertex has in-degree exactly 1.
inline bool is_arborescence(const digraph& g, as_number root) {
  const std::size_t r = g.vertex_index(root);
  std::vector<std::size_t> indegree(g.order(), 0);
  for (const arc& a : g.arcs()) ++indegree[g.vertex_index(a.head)];
  if (indegree[r] != 0) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (i != r && indegree[i] != 1) return false;
  return reachable_from(g, root).size() == g.order();
}

// Dense 0/1 matrix view of a digraph: rows index arc tails, columns arc
// heads, vertices ascending.
struct adjacency_matrix {
  std::vector<as_number> vertices;
  std::vector<std::vector<int>> cells;
};

inline adjacency_matrix to_adjacency_matrix(const digraph& g) {
  adjacency_matrix m{
      g.vertices(),
      std::vector<std::vector<int>>(g.order(), std::vector<int>(g.order(), 0))};
  for (const arc& a : g.arcs())
    m.cells[g.vertex_index(a.tail)][g.vertex_index(a.head)] = 1;
  return m;
}

inline digraph from_adjacency_matrix(const adjacency_matrix& m) {
  const std::size_t n = m.vertices.size();
  {
    std::vector<as_number> copy = m.vertices;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
      throw format_error("duplicate vertex in adjacency matrix");
  }
  if (m.cells.size() != n)
    throw format_error("dimension mismatch: " + std::to_string(n) +
                       " vertices but " + std::to_string(m.cells.size()) + " rows");
  std::vector<arc> arcs;
  for (std::size_t r = 0; r < n; ++r) {
    if (m.cells[r].size() != n)
      throw format_error("dimension mismatch at row " + std::to_string(r + 1) +
                         ": expected " + std::to_string(n) + " columns, got " +
                         std::to_string(m.cells[r].size()));
    for (std::size_t c = 0; c < n; ++c) {
      const int cell = m.cells[r][c];
      if (cell != 0 && cell != 1)
        throw format_error("entry must be 0 or 1 at row " + std::to_string(r + 1) +
                           ", column " + std::to_string(c + 1));
      if (cell == 1) {
        if (r == c)
          throw format_error("nonzero diagonal at " + as_label(m.vertices[r]));
        arcs.push_back({m.vertices[r], m.vertices[c]});
      }
    }
  }
  return digraph(m.vertices, std::move(arcs));
}

// DOT serialization. Node lines come before edge lines, both ascending, so
// the output is byte-deterministic. The highlight vertex, when present, is
// drawn filled.
inline std::string to_dot(const digraph& g,
                          std::optional<as_number> highlight = std::nullopt) {
  std::string out = "digraph {\n";
  for (as_number v : g.vertices()) {
    out += "  " + as_label(v);
    if (highlight && *highlight == v) out += " [style=filled, fillcolor=gold]";
    out += ";\n";
  }
  for (const arc& a : g.arcs())
    out += "  " + as_label(a.tail) + " -> " + as_label(a.head) + ";\n";
  out += "}\n";
  return out;
}

// Origin AS paired with the digraph of how its advertisement may propagate.
class announcement_digraph {
public:
  announcement_digraph(as_number origin, digraph graph)
      : origin_(origin), graph_(std::move(graph)) {
    if (!graph_.has_vertex(origin_))
      throw graph_error("origin " + as_label(origin_) + " is not a vertex of its digraph");
  }

  as_number origin() const noexcept { return origin_; }
  const digraph& graph() const noexcept { return graph_; }

  bool operator==(const announcement_digraph&) const = default;

private:
  as_number origin_;
  digraph graph_;
};

}  // namespace pathdiv
