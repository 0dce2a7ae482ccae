#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "wcw/common.hpp"
#include "wcw/engine.hpp"
#include "wcw/solver.hpp"
#include "wcw/strategies.hpp"

using namespace wcw;

namespace {

SetFamily explicit_family(std::vector<std::vector<ElementId>> sets, int board_size) {
  SetFamily f;
  f.source = "explicit";
  f.board_size = board_size;
  f.sets = std::move(sets);
  return f;
}

SetFamily random_family(std::mt19937_64& rng, int board_size, int max_sets) {
  SetFamily f;
  f.board_size = board_size;
  f.source = "explicit";
  int nsets = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_sets));
  for (int s = 0; s < nsets; ++s) {
    std::vector<ElementId> set;
    for (int e = 0; e < board_size; ++e)
      if (rng() % 3 == 0) set.push_back(e);
    if (set.empty()) set.push_back(static_cast<ElementId>(rng() % board_size));
    f.sets.push_back(set);
  }
  return f;
}

// Every subset of the board that meets all sets of `f` — the explicit
// intersecting family, used as an independent oracle for the Transversal
// objective.
SetFamily intersecting_family(const SetFamily& f, int board_size) {
  SetFamily out;
  out.board_size = board_size;
  out.source = "explicit";
  for (int mask = 0; mask < (1 << board_size); ++mask) {
    bool hits_all = true;
    for (const auto& set : f.sets) {
      bool hit = false;
      for (ElementId e : set)
        if (mask & (1 << e)) hit = true;
      if (!hit) hits_all = false;
    }
    if (!hits_all) continue;
    std::vector<ElementId> s;
    for (int e = 0; e < board_size; ++e)
      if (mask & (1 << e)) s.push_back(e);
    out.sets.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("forced short round hands the lone element to the offering side") {
  SetFamily f = explicit_family({{0}}, 1);
  ExactSolver solver(1, f, {GameKind::WaiterClient, 1});
  CHECK(solver.solve().winner == Winner::Client);

  ExactSolver cw(1, f, {GameKind::ClientWaiter, 1});
  CHECK(cw.solve().winner == Winner::Client);
}

TEST_CASE("two singletons on two elements is a forced loss for the picker") {
  SetFamily f = explicit_family({{0}, {1}}, 2);
  ExactSolver solver(2, f, {GameKind::WaiterClient, 1});
  SolveResult r = solver.solve();
  CHECK(r.winner == Winner::Waiter);
  CHECK(r.principal_offer == std::vector<ElementId>{0, 1});
}

TEST_CASE("triangle family on the 4-vertex complete graph") {
  HypergraphBoard b(4, 2);
  SetFamily f = clique_family(b, 3);
  f.board_size = 6;
  GameRules rules{GameKind::WaiterClient, 1};
  ExactSolver solver(6, f, rules);
  Winner memo = solver.solve().winner;
  CHECK(memo == solve_unmemoized(6, f, rules));
}

TEST_CASE("memoized and plain searches agree on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int board = 4 + static_cast<int>(rng() % 4);  // up to 7 here; 8 in acceptance
    SetFamily f = random_family(rng, board, 5);
    for (GameKind kind : {GameKind::WaiterClient, GameKind::ClientWaiter}) {
      GameRules rules{kind, 1};
      ExactSolver solver(board, f, rules);
      CHECK(solver.solve().winner == solve_unmemoized(board, f, rules));
    }
  }
}

TEST_CASE("threshold search: no flip when the late side always wins") {
  SetFamily f = explicit_family({{0}}, 1);
  ThresholdResult r = exact_threshold_bias(1, f, GameKind::WaiterClient, 4);
  CHECK_FALSE(r.flip_q.has_value());
  for (Winner w : r.winners) CHECK(w == Winner::Client);

  SetFamily empty = explicit_family({}, 3);
  ThresholdResult cw = exact_threshold_bias(3, empty, GameKind::ClientWaiter, 3);
  CHECK_FALSE(cw.flip_q.has_value());
  for (Winner w : cw.winners) CHECK(w == Winner::Waiter);
}

TEST_CASE("threshold search finds the singleton-family flip") {
  // Four singleton sets: the offering side wins every full-round game, but
  // once the bias eats the whole board in one short round the picker is safe.
  SetFamily f = explicit_family({{0}, {1}, {2}, {3}}, 4);
  ThresholdResult r = exact_threshold_bias(4, f, GameKind::WaiterClient, 6);
  REQUIRE(r.flip_q.has_value());
  CHECK(*r.flip_q == 4);
  CHECK(r.winners[0] == Winner::Waiter);
  CHECK(r.winners[2] == Winner::Waiter);
  CHECK(r.winners[3] == Winner::Client);
}

TEST_CASE("winner is monotone in the bias on random instances") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 15; ++trial) {
    int board = 4 + static_cast<int>(rng() % 3);
    SetFamily f = random_family(rng, board, 4);
    for (GameKind kind : {GameKind::WaiterClient, GameKind::ClientWaiter}) {
      // exact_threshold_bias throws on any monotonicity violation.
      CHECK_NOTHROW(exact_threshold_bias(board, f, kind, 3));
    }
  }
}

TEST_CASE("transversal objective matches the materialized intersecting family") {
  std::mt19937_64 rng(512);
  for (int trial = 0; trial < 25; ++trial) {
    int board = 4 + static_cast<int>(rng() % 3);
    SetFamily f = random_family(rng, board, 3);
    SetFamily star = intersecting_family(f, board);
    for (GameKind kind : {GameKind::WaiterClient, GameKind::ClientWaiter}) {
      GameRules rules{kind, 1};
      ExactSolver direct(board, f, rules, Objective::Transversal);
      ExactSolver oracle(board, star, rules, Objective::Containment);
      CHECK(direct.solve().winner == oracle.solve().winner);
    }
  }
}

TEST_CASE("best response vs best response reproduces the solved winner") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    int board = 4 + static_cast<int>(rng() % 3);
    SetFamily f = random_family(rng, board, 4);
    for (GameKind kind : {GameKind::WaiterClient, GameKind::ClientWaiter}) {
      GameRules rules{kind, 1};
      ExactSolver solver(board, f, rules);
      Winner expected = solver.solve().winner;
      ExactSolver ws(board, f, rules), cs(board, f, rules);
      BestResponseWaiter waiter(ws);
      BestResponseClient client(cs);
      Transcript t = play(board, f, rules, waiter, client);
      CHECK(t.outcome.winner == expected);
    }
  }
}

TEST_CASE("node budget is enforced with a diagnostic count") {
  HypergraphBoard b(5, 2);
  SetFamily f = clique_family(b, 3);
  f.board_size = 10;
  ExactSolver solver(10, f, {GameKind::ClientWaiter, 2}, Objective::Containment, 100);
  try {
    solver.solve();
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes_expanded >= 100);
  }
}

TEST_CASE("oversized boards are rejected up front") {
  SetFamily f = explicit_family({{0}}, 15);
  CHECK_THROWS(ExactSolver(15, f, {GameKind::WaiterClient, 1}));
}
