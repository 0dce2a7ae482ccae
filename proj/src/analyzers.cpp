#include "wcw/analyzers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "wcw/common.hpp"

namespace wcw {

Hypergraph Hypergraph::from_board(const HypergraphBoard& board,
                                  const std::vector<ElementId>& edge_ids) {
  Hypergraph h;
  h.n = board.n();
  h.k = board.k();
  h.edges.reserve(edge_ids.size());
  for (ElementId id : edge_ids) h.edges.push_back(board.unrank_edge(id));
  return h;
}

ClauseSet ClauseSet::from_board(const ClauseBoard& board,
                                const std::vector<ElementId>& clause_ids) {
  ClauseSet c;
  c.n = board.n();
  c.k = board.k();
  c.clauses.reserve(clause_ids.size());
  for (ElementId id : clause_ids) c.clauses.push_back(board.decode_clause(id));
  return c;
}

bool verify_coloring(const Hypergraph& h, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) < h.n) return false;
  for (const auto& e : h.edges) {
    bool mono = true;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (coloring[e[i]] != coloring[e[0]]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

bool satisfies(const ClauseSet& c, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) < c.n) return false;
  for (const auto& clause : c.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int v = ClauseBoard::literal_variable(lit);
      bool val = assignment[v];
      if (ClauseBoard::literal_negated(lit)) val = !val;
      if (val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// Backtracking r-coloring over vertices in id order; an edge is checked when
// its last vertex gets a color.
bool color_search(const Hypergraph& h, int r, int v, std::vector<int>& color,
                  const std::vector<std::vector<int>>& edges_ending_at) {
  if (v == h.n) return true;
  int limit = (v == 0) ? 1 : r;  // fix vertex 0's color
  for (int c = 0; c < limit; ++c) {
    color[v] = c;
    bool ok = true;
    for (int ei : edges_ending_at[v]) {
      const auto& e = h.edges[ei];
      bool mono = true;
      for (int u : e)
        if (color[u] != c) {
          mono = false;
          break;
        }
      if (mono) {
        ok = false;
        break;
      }
    }
    if (ok && color_search(h, r, v + 1, color, edges_ending_at)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

ColoringResult is_r_colorable(const Hypergraph& h, int r, int vertex_cap) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (h.n > vertex_cap) throw CapExceeded("is_r_colorable: vertex cap exceeded");
  std::vector<std::vector<int>> ending(h.n);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    if (h.edges[i].empty()) throw std::invalid_argument("empty edge");
    ending[h.edges[i].back()].push_back(static_cast<int>(i));
  }
  std::vector<int> color(h.n, -1);
  ColoringResult res;
  if (h.n == 0) {
    res.colorable = true;
    return res;
  }
  if (color_search(h, r, 0, color, ending)) {
    res.colorable = true;
    res.coloring = color;
    if (!verify_coloring(h, color)) throw std::logic_error("coloring witness failed verification");
  }
  return res;
}

int chromatic_number(const Hypergraph& h, int vertex_cap) {
  if (h.n == 0) return 0;
  if (h.edges.empty()) return 1;
  for (int r = 2; r <= h.n; ++r)
    if (is_r_colorable(h, r, vertex_cap).colorable) return r;
  return h.n;  // unreachable: n colors always work for k >= 2
}

namespace {

// Max independent set: include/exclude recursion; edges stored as bitmasks.
void mis_search(int v, int n, std::uint32_t current, int count,
                const std::vector<std::uint32_t>& edge_masks, int& best) {
  if (count + (n - v) <= best) return;
  if (v == n) {
    best = std::max(best, count);
    return;
  }
  std::uint32_t with = current | (1u << v);
  bool ok = true;
  for (std::uint32_t m : edge_masks)
    if ((m & with) == m) {
      ok = false;
      break;
    }
  if (ok) mis_search(v + 1, n, with, count + 1, edge_masks, best);
  mis_search(v + 1, n, current, count, edge_masks, best);
}

std::vector<std::uint32_t> edge_bitmasks(const Hypergraph& h) {
  std::vector<std::uint32_t> masks;
  masks.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << v;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

int independence_number(const Hypergraph& h, int vertex_cap) {
  if (h.n > vertex_cap || h.n > 31)
    throw CapExceeded("independence_number: vertex cap exceeded");
  int best = 0;
  mis_search(0, h.n, 0, 0, edge_bitmasks(h), best);
  return best;
}

namespace {

void clique_search(int v, int n, std::vector<int>& current,
                   const std::unordered_set<std::uint32_t>& edge_set, int k, int& best) {
  best = std::max(best, static_cast<int>(current.size()));
  if (static_cast<int>(current.size()) + (n - v) <= best) return;
  for (int u = v; u < n; ++u) {
    // current+u is a clique iff every k-subset through u is an edge.
    bool ok = true;
    if (static_cast<int>(current.size()) >= k - 1) {
      for_each_combination(current, k - 1, [&](const std::vector<int>& rest) {
        if (!ok) return;
        std::uint32_t m = 1u << u;
        for (int w : rest) m |= 1u << w;
        if (!edge_set.count(m)) ok = false;
      });
    }
    if (ok) {
      current.push_back(u);
      clique_search(u + 1, n, current, edge_set, k, best);
      current.pop_back();
    }
  }
}

}  // namespace

CliqueResult clique_number(const Hypergraph& h, int vertex_cap) {
  if (h.n > vertex_cap || h.n > 31)
    throw CapExceeded("clique_number: vertex cap exceeded");
  CliqueResult res;
  if (h.edges.empty()) {
    res.no_edge = true;
    res.value = std::min(h.n, h.k - 1);  // any k-1 vertices form a vacuous clique
    return res;
  }
  std::unordered_set<std::uint32_t> edge_set;
  for (std::uint32_t m : edge_bitmasks(h)) edge_set.insert(m);
  std::vector<int> current;
  int best = 0;
  clique_search(0, h.n, current, edge_set, h.k, best);
  res.value = best;
  return res;
}

namespace {

struct SatState {
  std::vector<std::vector<int>> clauses;
  std::vector<int> assign;  // -1 unknown, 0 false, 1 true

  bool lit_true(int lit) const {
    int v = ClauseBoard::literal_variable(lit);
    if (assign[v] < 0) return false;
    return (assign[v] == 1) != ClauseBoard::literal_negated(lit);
  }
  bool lit_false(int lit) const {
    int v = ClauseBoard::literal_variable(lit);
    if (assign[v] < 0) return false;
    return (assign[v] == 1) == ClauseBoard::literal_negated(lit);
  }
};

// Returns false on conflict. `trail` records assigned variables for undo.
bool unit_propagate(SatState& s, std::vector<int>& trail) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : s.clauses) {
      int unassigned = -1;
      int count = 0;
      bool sat = false;
      for (int lit : clause) {
        if (s.lit_true(lit)) {
          sat = true;
          break;
        }
        if (!s.lit_false(lit)) {
          unassigned = lit;
          ++count;
        }
      }
      if (sat) continue;
      if (count == 0) return false;
      if (count == 1) {
        int v = ClauseBoard::literal_variable(unassigned);
        s.assign[v] = ClauseBoard::literal_negated(unassigned) ? 0 : 1;
        trail.push_back(v);
        changed = true;
      }
    }
  }
  return true;
}

bool dpll(SatState& s) {
  std::vector<int> trail;
  if (!unit_propagate(s, trail)) {
    for (int v : trail) s.assign[v] = -1;
    return false;
  }
  int branch = -1;
  for (const auto& clause : s.clauses) {
    bool sat = false;
    for (int lit : clause)
      if (s.lit_true(lit)) {
        sat = true;
        break;
      }
    if (sat) continue;
    for (int lit : clause)
      if (!s.lit_false(lit)) {
        branch = ClauseBoard::literal_variable(lit);
        break;
      }
    if (branch >= 0) break;
  }
  if (branch < 0) return true;  // every clause satisfied
  for (int val : {1, 0}) {
    s.assign[branch] = val;
    if (dpll(s)) return true;
  }
  s.assign[branch] = -1;
  for (int v : trail) s.assign[v] = -1;
  return false;
}

}  // namespace

SatResult is_satisfiable(const ClauseSet& c, int var_cap) {
  if (c.n > var_cap) throw CapExceeded("is_satisfiable: variable cap exceeded");
  SatState s;
  s.clauses = c.clauses;
  s.assign.assign(c.n, -1);
  SatResult res;
  if (dpll(s)) {
    res.satisfiable = true;
    res.assignment.resize(c.n);
    for (int v = 0; v < c.n; ++v) res.assignment[v] = s.assign[v] == 1;
    if (!satisfies(c, res.assignment))
      throw std::logic_error("sat witness failed verification");
  }
  return res;
}

int max_degree(const Hypergraph& h) {
  std::vector<int> deg(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++deg[v];
  int best = 0;
  for (int d : deg) best = std::max(best, d);
  return best;
}

std::vector<int> block_occurrences(const ClauseSet& c) {
  std::vector<int> occ(c.n, 0);
  for (const auto& clause : c.clauses)
    for (int lit : clause) ++occ[ClauseBoard::literal_variable(lit)];
  return occ;
}

bool lll_degree_condition(const Hypergraph& h) {
  return max_degree(h) <= std::exp2(h.k) / (8.0 * h.k);
}

bool lll_occurrence_condition(const ClauseSet& c) {
  double rhs = std::exp2(c.k - 2) / c.k;
  for (int occ : block_occurrences(c))
    if (occ > rhs) return false;
  return true;
}

DegeneracyResult is_one_degenerate(const Hypergraph& h) {
  DegeneracyResult res;
  std::vector<bool> removed(h.n, false);
  std::vector<bool> edge_gone(h.edges.size(), false);
  for (int step = 0; step < h.n; ++step) {
    int pick = -1;
    for (int v = 0; v < h.n && pick < 0; ++v) {
      if (removed[v]) continue;
      int deg = 0;
      for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (edge_gone[i]) continue;
        for (int u : h.edges[i])
          if (u == v) {
            ++deg;
            break;
          }
      }
      if (deg <= 1) pick = v;
    }
    if (pick < 0) return res;  // some remaining sub-hypergraph has min degree >= 2
    res.order.push_back(pick);
    removed[pick] = true;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      if (edge_gone[i]) continue;
      for (int u : h.edges[i])
        if (u == pick) {
          edge_gone[i] = true;
          break;
        }
    }
  }
  res.one_degenerate = true;
  return res;
}

}  // namespace wcw
