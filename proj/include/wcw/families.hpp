#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wcw/combinat.hpp"

namespace wcw {

// Families of these types grow super-exponentially; constructions refuse to
// materialize more sets than this unless told otherwise.
inline constexpr std::uint64_t kDefaultFamilyCap = 2'000'000;

struct SetFamily {
  std::string source;      // clique-transversal | local-density | monochromatic-clause | explicit
  std::string board_desc;  // board parameters, recorded in file headers
  int board_size = 0;
  std::vector<std::vector<ElementId>> sets;  // each sorted ascending
};

// All m-vertex cliques of the board, each as its C(m,k) edge ids.
SetFamily clique_family(const HypergraphBoard& board, int m);

// All pairs (S, F) with S a nonempty vertex subset and F an edge subset
// inside S of size ceil(2|S|/k), emitted as the edge sets F.
SetFamily local_density_family(const HypergraphBoard& board,
                               std::uint64_t max_sets = kDefaultFamilyCap);

// One set per choice of a literal from each block: all C(n,k) clauses whose
// literals lie inside the chosen selection.
SetFamily monochromatic_clause_family(const ClauseBoard& board,
                                      std::uint64_t max_sets = kDefaultFamilyCap);

struct CriterionValue {
  double sum = 0.0;
  bool holds = false;
};

// sum over A of 2^(-|A|/(2q-1)); holds iff sum < 1/2 (Waiter wins the
// Waiter-Client transversal game).
CriterionValue waiter_wc_criterion(const SetFamily& family, int q);

// sum over A of (q/(q+1))^|A|; holds iff sum < 1 (Client wins the
// Client-Waiter transversal game).
CriterionValue client_cw_criterion(const SetFamily& family, int q);

// Initial potential: sum over A of (q+1)^(-|A|).
double phi_potential(const SetFamily& family, int q);

void write_family(std::ostream& os, const SetFamily& family);
SetFamily read_family(std::istream& is);

}  // namespace wcw
