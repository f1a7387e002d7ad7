#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "pathdiv/digraph.hpp"
#include "support/test_support.hpp"

using namespace pathdiv;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("as_number rejects zero") {
  REQUIRE_THROWS_AS(as_number(0), graph_error);
  REQUIRE(as_number(4294967295u).value() == 4294967295u);
}

TEST_CASE("construction absorbs endpoints and collapses duplicates") {
  const digraph g({1, 2}, {{1, 2}});
  REQUIRE(g.vertices() == std::vector<as_number>{1, 2});
  REQUIRE(g.arcs() == std::vector<arc>{{1, 2}});

  const digraph dup({}, {{1, 2}, {1, 2}});
  REQUIRE(dup.vertices() == std::vector<as_number>{1, 2});
  REQUIRE(dup.arcs() == std::vector<arc>{{1, 2}});
}

TEST_CASE("construction rejects self-loops naming the AS") {
  REQUIRE_THROWS_MATCHES(digraph({}, {{3, 3}}), graph_error,
                         Catch::Matchers::MessageMatches(ContainsSubstring("self-loop at AS3")));
}

TEST_CASE("converse reverses every arc") {
  const digraph g({1, 2, 3}, {{1, 2}, {2, 3}});
  const digraph expected({1, 2, 3}, {{2, 1}, {3, 2}});
  REQUIRE(converse(g) == expected);

  REQUIRE(converse(digraph{}) == digraph{});
}

TEST_CASE("converse is an involution preserving counts") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const digraph g = test_support::random_digraph(rng, 1, 6, 0.3);
    const digraph c = converse(g);
    REQUIRE(c.order() == g.order());
    REQUIRE(c.size() == g.size());
    REQUIRE(converse(c) == g);
  }
}

TEST_CASE("union of digraphs") {
  const digraph a({1, 2}, {{1, 2}});
  const digraph b({2, 3}, {{2, 3}});
  REQUIRE(graph_union(a, b) == digraph({1, 2, 3}, {{1, 2}, {2, 3}}));
  REQUIRE(graph_union(a, a) == a);
}

TEST_CASE("union is idempotent, commutative and associative") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 200; ++i) {
    const digraph g1 = test_support::random_digraph(rng, 1, 6, 0.3);
    const digraph g2 = test_support::random_digraph(rng, 1, 6, 0.3);
    const digraph g3 = test_support::random_digraph(rng, 1, 6, 0.3);
    REQUIRE(graph_union(g1, g1) == g1);
    REQUIRE(graph_union(g1, g2) == graph_union(g2, g1));
    REQUIRE(graph_union(graph_union(g1, g2), g3) ==
            graph_union(g1, graph_union(g2, g3)));
  }
}

TEST_CASE("reachable_from basic cases") {
  const digraph g({1, 2, 3}, {{1, 2}});
  REQUIRE(reachable_from(g, 1) == std::set<as_number>{1, 2});

  const digraph isolated({1}, {});
  REQUIRE(reachable_from(isolated, 1) == std::set<as_number>{1});

  REQUIRE_THROWS_AS(reachable_from(g, 9), graph_error);
}

TEST_CASE("reachable_from agrees with the transitive-closure oracle") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 200; ++i) {
    const digraph g = test_support::random_digraph(rng, 1, 8, 0.25);
    const auto closure = test_support::transitive_closure(g);
    for (std::size_t v = 0; v < g.order(); ++v) {
      const auto reached = reachable_from(g, g.vertices()[v]);
      std::set<as_number> expected;
      for (std::size_t w = 0; w < g.order(); ++w)
        if (closure[v][w]) expected.insert(g.vertices()[w]);
      REQUIRE(reached == expected);
    }
  }
}

TEST_CASE("is_arborescence") {
  REQUIRE(is_arborescence(digraph({1, 2, 3}, {{1, 2}, {1, 3}}), 1));
  // vertex 3 has in-degree 2
  REQUIRE_FALSE(is_arborescence(digraph({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}), 1));
  // vertex 2 unreachable
  REQUIRE_FALSE(is_arborescence(digraph({1, 2}, {}), 1));
  REQUIRE_THROWS_AS(is_arborescence(digraph({1, 2}, {}), 7), graph_error);
}

TEST_CASE("arborescence implies arc count and full reachability") {
  std::mt19937_64 rng(404);
  // random arborescences: parent drawn among earlier vertices
  for (int i = 0; i < 100; ++i) {
    const digraph base = test_support::random_digraph(rng, 2, 8, 0.0);
    const auto& vs = base.vertices();
    std::vector<arc> arcs;
    for (std::size_t v = 1; v < vs.size(); ++v)
      arcs.push_back({vs[rng() % v], vs[v]});
    const digraph tree(vs, arcs);
    REQUIRE(is_arborescence(tree, vs[0]));
    REQUIRE(tree.size() == tree.order() - 1);
    REQUIRE(reachable_from(tree, vs[0]).size() == tree.order());
  }
}

TEST_CASE("adjacency matrix round trip") {
  const digraph g({1, 2}, {{1, 2}});
  const adjacency_matrix m = to_adjacency_matrix(g);
  REQUIRE(m.vertices == std::vector<as_number>{1, 2});
  REQUIRE(m.cells == std::vector<std::vector<int>>{{0, 1}, {0, 0}});
  REQUIRE(from_adjacency_matrix(m) == g);

  const digraph isolated({5, 9}, {});
  const adjacency_matrix zero = to_adjacency_matrix(isolated);
  REQUIRE(zero.cells == std::vector<std::vector<int>>{{0, 0}, {0, 0}});

  std::mt19937_64 rng(505);
  for (int i = 0; i < 100; ++i) {
    const digraph r = test_support::random_digraph(rng, 1, 7, 0.3);
    REQUIRE(from_adjacency_matrix(to_adjacency_matrix(r)) == r);
  }
}

TEST_CASE("from_adjacency_matrix rejects malformed input") {
  REQUIRE_THROWS_MATCHES(
      from_adjacency_matrix({{1, 2}, {{1, 0}, {0, 0}}}), format_error,
      Catch::Matchers::MessageMatches(ContainsSubstring("nonzero diagonal at AS1")));
  REQUIRE_THROWS_MATCHES(
      from_adjacency_matrix({{1, 2, 3}, {{0, 1}, {0, 0}}}), format_error,
      Catch::Matchers::MessageMatches(ContainsSubstring("dimension mismatch")));
  REQUIRE_THROWS_MATCHES(
      from_adjacency_matrix({{1, 2}, {{0, 2}, {0, 0}}}), format_error,
      Catch::Matchers::MessageMatches(ContainsSubstring("row 1, column 2")));
  REQUIRE_THROWS_AS(from_adjacency_matrix({{1, 1}, {{0, 0}, {0, 0}}}), format_error);
}

TEST_CASE("to_dot emits deterministic sorted text") {
  const digraph g({1, 2}, {{1, 2}});
  const std::string dot = to_dot(g);
  REQUIRE_THAT(dot, ContainsSubstring("AS1 -> AS2;"));
  // exactly one edge line
  REQUIRE(dot.find("->") == dot.rfind("->"));
  REQUIRE(to_dot(g) == dot);

  REQUIRE(to_dot(digraph{}) == "digraph {\n}\n");

  const std::string highlighted = to_dot(g, as_number(2));
  REQUIRE_THAT(highlighted, ContainsSubstring("AS2 [style=filled, fillcolor=gold];"));
  REQUIRE_THAT(to_dot(g, as_number(9)), !ContainsSubstring("fillcolor"));
}

TEST_CASE("announcement digraph requires its origin as a vertex") {
  REQUIRE_NOTHROW(announcement_digraph(1, digraph({1, 2}, {{1, 2}})));
  REQUIRE_THROWS_AS(announcement_digraph(9, digraph({1, 2}, {{1, 2}})), graph_error);
}
