#pragma once

#include <vector>

#include "wcw/combinat.hpp"

namespace wcw {

/// A sub-hypergraph of a complete board: vertex set [n], explicit edge list.
struct Hypergraph {
  int n = 0;
  int k = 2;
  std::vector<std::vector<int>> edges;  // each sorted ascending

  static Hypergraph from_board(const HypergraphBoard& board,
                               const std::vector<ElementId>& edge_ids);
};

struct ClauseSet {
  int n = 0;
  int k = 2;
  std::vector<std::vector<int>> clauses;  // literal lists, sorted by variable

  static ClauseSet from_board(const ClauseBoard& board,
                              const std::vector<ElementId>& clause_ids);
};

struct ColoringResult {
  bool colorable = false;
  std::vector<int> coloring;  // per vertex, only when colorable
};

// Exact decision by backtracking; vertex 0's color is fixed to prune the
// color-permutation symmetry. Witness verified before return.
ColoringResult is_r_colorable(const Hypergraph& h, int r, int vertex_cap = 24);

int chromatic_number(const Hypergraph& h, int vertex_cap = 24);
int independence_number(const Hypergraph& h, int vertex_cap = 24);

struct CliqueResult {
  int value = 0;
  bool no_edge = false;  // edgeless convention: value = k-1
};
CliqueResult clique_number(const Hypergraph& h, int vertex_cap = 24);

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> assignment;  // per variable, only when satisfiable
};

// Unit-propagation backtracking search; desk-scale by design. `var_cap`
// guards runtime; callers may raise it (2-SAT instances stay cheap).
SatResult is_satisfiable(const ClauseSet& c, int var_cap = 40);

int max_degree(const Hypergraph& h);
std::vector<int> block_occurrences(const ClauseSet& c);

// Lemma-style side conditions: max degree <= 2^k/(8k); per-variable
// occurrences <= 2^(k-2)/k. Real-valued right-hand sides, as written.
bool lll_degree_condition(const Hypergraph& h);
bool lll_occurrence_condition(const ClauseSet& c);

struct DegeneracyResult {
  bool one_degenerate = false;
  std::vector<int> order;  // elimination ordering v_1..v_n on success
};

// Greedy minimum-degree elimination; true iff no remaining sub-hypergraph
// ever has minimum degree >= 2.
DegeneracyResult is_one_degenerate(const Hypergraph& h);

bool verify_coloring(const Hypergraph& h, const std::vector<int>& coloring);
bool satisfies(const ClauseSet& c, const std::vector<bool>& assignment);

}  // namespace wcw
