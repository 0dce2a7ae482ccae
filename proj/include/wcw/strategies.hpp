#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <vector>

#include "wcw/analyzers.hpp"
#include "wcw/engine.hpp"

namespace wcw {

// Weight-function ledger: one term base^(free elements of A) per live
// set. Which claims shrink a term and which kill the set depends on the mode.
class PotentialLedger {
 public:
  enum class Mode {
    WcClient,  // base 1/(q+1); Client claims shrink, Waiter claims kill
    CwClient,  // base q/(q+1); Waiter claims shrink, Client claims satisfy
    WcWaiter,  // base 2^(-1/(2q-1)); Waiter claims shrink, Client claims satisfy
  };

  PotentialLedger(const SetFamily& family, int q, Mode mode);

  double potential() const { return potential_; }
  double base() const { return base_; }
  int q() const { return q_; }
  Mode mode() const { return mode_; }

  bool set_live(int i) const { return live_[i]; }
  int free_count(int i) const { return free_count_[i]; }
  double term(int i) const;
  const std::vector<ElementId>& set_elements(int i) const { return sets_[i]; }
  const std::vector<int>& sets_containing(ElementId e) const { return incidence_[e]; }
  int set_count() const { return static_cast<int>(sets_.size()); }

  void apply_claim(ElementId e, Owner who);

  // Sum of live terms of sets containing e (WcWaiter offer heuristic).
  double marginal_danger(ElementId e) const;

  // WcClient mode: live sets whose every element Client holds.
  int fully_claimed_count() const;

  void recompute();  // rebuilds the running sum from per-set state

 private:
  Mode mode_;
  int q_;
  double base_;
  double potential_ = 0.0;
  int rounds_since_recompute_ = 0;
  std::vector<std::vector<ElementId>> sets_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> free_count_;
  std::vector<char> live_;
};

// Greedy potential picks/offers (free functions so they unit-test directly).
ElementId wc_client_potential_pick(const PotentialLedger& ledger,
                                   const std::vector<ElementId>& offer);
ElementId cw_client_potential_pick(const PotentialLedger& ledger,
                                   const std::vector<ElementId>& offer);
std::vector<ElementId> wc_waiter_potential_offer(const PotentialLedger& ledger,
                                                 const GameState& state,
                                                 const GameRules& rules);

class WcClientPotential : public ClientStrategy {
 public:
  WcClientPotential(const SetFamily& family, int q);
  ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                 const GameRules& rules) override;
  void observe(const GameState& state, const std::vector<ElementId>& offer,
               std::optional<ElementId> pick) override;
  double diagnostic() const override { return ledger_.potential(); }
  const PotentialLedger& ledger() const { return ledger_; }

 private:
  PotentialLedger ledger_;
};

class CwClientPotential : public ClientStrategy {
 public:
  CwClientPotential(const SetFamily& family, int q);
  ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                 const GameRules& rules) override;
  void observe(const GameState& state, const std::vector<ElementId>& offer,
               std::optional<ElementId> pick) override;
  double diagnostic() const override { return ledger_.potential(); }
  const PotentialLedger& ledger() const { return ledger_; }

 private:
  PotentialLedger ledger_;
};

class WcWaiterPotential : public WaiterStrategy {
 public:
  WcWaiterPotential(const SetFamily& family, int q);
  std::vector<ElementId> offer(const GameState& state, const GameRules& rules) override;
  void observe(const GameState& state, const std::vector<ElementId>& offer,
               std::optional<ElementId> pick) override;
  double diagnostic() const override { return ledger_.potential(); }
  const PotentialLedger& ledger() const { return ledger_; }

 private:
  PotentialLedger ledger_;
};

// Anchor incidence: vertices of a hypergraph board or blocks of a clause
// board, with element <-> anchor maps.
struct AnchorIncidence {
  int anchor_count = 0;
  std::vector<std::vector<ElementId>> incident;  // anchor -> element ids, ascending
  std::vector<std::vector<int>> anchors_of;      // element -> anchors, claim order

  static AnchorIncidence from(const HypergraphBoard& board);
  static AnchorIncidence from(const ClauseBoard& board);
};

/// Waiter's batch response for the Client-Waiter games: after each Client
// claim, offer up to floor((q+1)/k) free elements at each of its k anchors,
// batches pairwise disjoint; falls back to older claims, then to arbitrary
// lowest-id elements.
class CwWaiterBatchOffer : public WaiterStrategy {
 public:
  explicit CwWaiterBatchOffer(AnchorIncidence incidence);
  std::vector<ElementId> offer(const GameState& state, const GameRules& rules) override;
  void observe(const GameState& state, const std::vector<ElementId>& offer,
               std::optional<ElementId> pick) override;

 private:
  std::vector<ElementId> batch_union(ElementId claim, const OwnedSets& owned, int per_anchor) const;

  AnchorIncidence incidence_;
  std::optional<ElementId> last_claim_;
  std::deque<ElementId> claim_queue_;  // oldest first
};

class RandomWaiter : public WaiterStrategy {
 public:
  explicit RandomWaiter(std::uint64_t seed) : rng_(seed) {}
  std::vector<ElementId> offer(const GameState& state, const GameRules& rules) override;

 private:
  std::mt19937_64 rng_;
};

class RandomClient : public ClientStrategy {
 public:
  explicit RandomClient(std::uint64_t seed) : rng_(seed) {}
  ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                 const GameRules& rules) override;

 private:
  std::mt19937_64 rng_;
};

// Adversarial baseline: picks the offered element that maximizes its own
// maximum anchor degree after the pick (tie: lowest id).
class GreedyDegreeClient : public ClientStrategy {
 public:
  explicit GreedyDegreeClient(AnchorIncidence incidence);
  ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                 const GameRules& rules) override;
  void observe(const GameState& state, const std::vector<ElementId>& offer,
               std::optional<ElementId> pick) override;

 private:
  AnchorIncidence incidence_;
  std::vector<int> degree_;
};

struct TwoColoring {
  std::vector<int> coloring;         // 0/1 per vertex
  std::vector<int> elimination_order;  // v_1..v_n
};

// Client's post-game certificate for the hypergraph games: 1-degenerate
// elimination then greedy coloring from v_n back to v_1. Empty optional
// signals the guarantee did not hold ("not 1-degenerate").
std::optional<TwoColoring> greedy_two_coloring(const Hypergraph& client_hypergraph);

struct ExtractedAssignment {
  std::vector<bool> assignment;  // per variable
  std::vector<int> block_order;
};

// Client's post-game certificate for the k-SAT games: block elimination
// setting the surviving literal of each eliminable block to true.
std::optional<ExtractedAssignment> extract_assignment(const ClauseSet& client_clauses);

}  // namespace wcw
