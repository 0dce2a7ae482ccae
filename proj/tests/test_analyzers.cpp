#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "wcw/analyzers.hpp"

using namespace wcw;

namespace {

Hypergraph make_h(int n, int k, std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.n = n;
  h.k = k;
  h.edges = std::move(edges);
  return h;
}

ClauseSet make_c(int n, int k, std::vector<std::vector<int>> clauses) {
  ClauseSet c;
  c.n = n;
  c.k = k;
  c.clauses = std::move(clauses);
  return c;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, int max_edges) {
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
  std::set<std::vector<int>> edges;
  int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges + 1));
  while (static_cast<int>(edges.size()) < m) {
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<int> e(verts.begin(), verts.begin() + k);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  return make_h(n, k, {edges.begin(), edges.end()});
}

}  // namespace

TEST_CASE("2- and 3-colorability of the triangle") {
  Hypergraph tri = make_h(3, 2, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(is_r_colorable(tri, 2).colorable);
  ColoringResult three = is_r_colorable(tri, 3);
  CHECK(three.colorable);
  CHECK(verify_coloring(tri, three.coloring));

  Hypergraph single = make_h(4, 3, {{0, 1, 2}});
  ColoringResult two = is_r_colorable(single, 2);
  CHECK(two.colorable);
  CHECK(verify_coloring(single, two.coloring));
}

TEST_CASE("the 7-point projective plane is not 2-colorable") {
  Hypergraph fano = make_h(7, 3,
                           {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                            {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  CHECK_FALSE(is_r_colorable(fano, 2).colorable);
  // Independent brute force over all 2^7 colorings.
  bool any_proper = false;
  for (int mask = 0; mask < 128 && !any_proper; ++mask) {
    bool proper = true;
    for (const auto& e : fano.edges) {
      int c0 = (mask >> e[0]) & 1;
      if (((mask >> e[1]) & 1) == c0 && ((mask >> e[2]) & 1) == c0) proper = false;
    }
    any_proper = proper;
  }
  CHECK_FALSE(any_proper);
  CHECK(is_r_colorable(fano, 3).colorable);
}

TEST_CASE("chromatic, independence, clique numbers on a complete graph") {
  std::vector<std::vector<int>> edges;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) edges.push_back({a, b});
  Hypergraph k5 = make_h(5, 2, edges);
  CHECK(chromatic_number(k5) == 5);
  CHECK(independence_number(k5) == 1);
  CliqueResult w = clique_number(k5);
  CHECK(w.value == 5);
  CHECK_FALSE(w.no_edge);
}

TEST_CASE("edgeless conventions") {
  Hypergraph empty = make_h(6, 3, {});
  CHECK(chromatic_number(empty) == 1);
  CHECK(independence_number(empty) == 6);
  CliqueResult w = clique_number(empty);
  CHECK(w.value == 2);  // k-1
  CHECK(w.no_edge);
}

TEST_CASE("chromatic times independence covers the vertex set") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = random_hypergraph(rng, 7, 3, 12);
    CHECK(chromatic_number(h) * independence_number(h) >= h.n);
  }
}

TEST_CASE("satisfiability oracles") {
  // All four width-2 clauses on two variables: unsatisfiable.
  ClauseSet all4 = make_c(2, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(is_satisfiable(all4).satisfiable);

  ClauseSet one = make_c(3, 2, {{1, 4}});
  SatResult r = is_satisfiable(one);
  CHECK(r.satisfiable);
  CHECK(satisfies(one, r.assignment));
}

TEST_CASE("search agrees with full truth-table enumeration at n=10") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 10;
    int m = 5 + static_cast<int>(rng() % 25);
    std::vector<std::vector<int>> clauses;
    for (int i = 0; i < m; ++i) {
      int v1 = static_cast<int>(rng() % n);
      int v2 = static_cast<int>(rng() % n);
      while (v2 == v1) v2 = static_cast<int>(rng() % n);
      if (v1 > v2) std::swap(v1, v2);
      clauses.push_back({2 * v1 + static_cast<int>(rng() % 2),
                         2 * v2 + static_cast<int>(rng() % 2)});
    }
    ClauseSet c = make_c(n, 2, clauses);
    bool table_sat = false;
    for (int mask = 0; mask < (1 << n) && !table_sat; ++mask) {
      std::vector<bool> a(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v)] = (mask >> v) & 1;
      table_sat = satisfies(c, a);
    }
    SatResult r = is_satisfiable(c);
    CHECK(r.satisfiable == table_sat);
    if (r.satisfiable) CHECK(satisfies(c, r.assignment));
  }
}

TEST_CASE("degree statistics") {
  std::vector<std::vector<int>> k4;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.push_back({a, b});
  CHECK(max_degree(make_h(4, 2, k4)) == 3);
  CHECK(max_degree(make_h(4, 2, {})) == 0);

  ClauseSet c = make_c(3, 2, {{0, 2}, {0, 5}, {3, 4}});
  std::vector<int> occ = block_occurrences(c);
  CHECK(occ == std::vector<int>{2, 2, 2});
  CHECK(block_occurrences(make_c(3, 2, {})) == std::vector<int>{0, 0, 0});
}

TEST_CASE("small-degree side conditions") {
  // k=7: threshold 128/56 ~ 2.28, so max degree 2 qualifies.
  Hypergraph h7 = make_h(14, 7, {{0, 1, 2, 3, 4, 5, 6}, {0, 7, 8, 9, 10, 11, 12}});
  CHECK(max_degree(h7) == 2);
  CHECK(lll_degree_condition(h7));
  // k=2: threshold 4/16 = 0.25, so even one edge fails.
  CHECK_FALSE(lll_degree_condition(make_h(3, 2, {{0, 1}})));

  // Occurrence condition: k=4 threshold 4/4 = 1.
  ClauseSet ok = make_c(8, 4, {{0, 2, 4, 6}, {8, 10, 12, 14}});
  CHECK(lll_occurrence_condition(ok));
  ClauseSet bad = make_c(8, 4, {{0, 2, 4, 6}, {0, 10, 12, 14}});
  CHECK_FALSE(lll_occurrence_condition(bad));
}

TEST_CASE("degree condition implies 2-colorability on random instances") {
  std::mt19937_64 rng(5);
  int confirmed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = random_hypergraph(rng, 16, 7, 4);
    if (!lll_degree_condition(h)) continue;
    ++confirmed;
    CHECK(is_r_colorable(h, 2).colorable);
  }
  CHECK(confirmed > 0);
}

TEST_CASE("one-degeneracy basics") {
  Hypergraph path = make_h(4, 2, {{0, 1}, {1, 2}, {2, 3}});
  DegeneracyResult forest = is_one_degenerate(path);
  CHECK(forest.one_degenerate);
  CHECK(forest.order.size() == 4);

  Hypergraph tri = make_h(3, 2, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(is_one_degenerate(tri).one_degenerate);
}

TEST_CASE("greedy elimination matches the universal-subset definition") {
  // All 3-uniform hypergraphs on 5 vertices with at most 4 edges.
  std::vector<std::vector<int>> all_edges;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) all_edges.push_back({a, b, c});
  const int total = static_cast<int>(all_edges.size());  // 10
  for (int mask = 0; mask < (1 << total); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) > 4) continue;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < total; ++i)
      if (mask & (1 << i)) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
    Hypergraph h = make_h(5, 3, edges);
    // Universal definition: every nonempty S has a vertex in <= 1 induced edge.
    bool universal = true;
    for (int smask = 1; smask < 32 && universal; ++smask) {
      int best = 1000;
      for (int v = 0; v < 5; ++v) {
        if (!((smask >> v) & 1)) continue;
        int deg = 0;
        for (const auto& e : edges) {
          bool inside = true;
          bool has_v = false;
          for (int u : e) {
            if (!((smask >> u) & 1)) inside = false;
            if (u == v) has_v = true;
          }
          if (inside && has_v) ++deg;
        }
        best = std::min(best, deg);
      }
      if (best >= 2) universal = false;
    }
    CHECK(is_one_degenerate(h).one_degenerate == universal);
  }
}

TEST_CASE("end-of-game complement identity on random partitions") {
  std::mt19937_64 rng(9);
  for (int n : {5, 6, 7}) {
    HypergraphBoard board(n, 2);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<ElementId> client, waiter;
      for (ElementId id = 0; id < board.edge_count(); ++id)
        (rng() % 2 ? client : waiter).push_back(id);
      Hypergraph hc = Hypergraph::from_board(board, client);
      Hypergraph hw = Hypergraph::from_board(board, waiter);
      int alpha = independence_number(hc);
      CliqueResult omega = clique_number(hw);
      CHECK(omega.value == alpha);
    }
  }
}
