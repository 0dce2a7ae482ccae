#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wcw/engine.hpp"

namespace wcw {

// What Client is trying to build out of the family F. Containment plays
// (X, F) directly; Transversal plays (X, F*) — Client's elements must meet
// every member of F — without materializing F*.
enum class Objective { Containment, Transversal };

struct SolveResult {
  Winner winner = Winner::Client;
  std::vector<ElementId> principal_offer;     // optimal Waiter offer at the root
  std::optional<ElementId> principal_pick;    // Client's best reply to it
  std::uint64_t nodes = 0;
};

// Thrown with the count so budget failures reproduce.
// (See BudgetExceeded in common.hpp.)

// Exhaustive minimax over ownership positions, memoized on the ownership
// vector. Waiter nodes branch over all legal offers, Client nodes over all
// picks; win/loss cutoffs only.
class ExactSolver {
 public:
  static constexpr int kMaxBoard = 14;
  static constexpr std::uint64_t kDefaultBudget = 50'000'000;

  ExactSolver(int board_size, const SetFamily& family, GameRules rules,
              Objective objective = Objective::Containment,
              std::uint64_t node_budget = kDefaultBudget);

  SolveResult solve();

  // Waiter-win value of an arbitrary reachable position.
  bool waiter_wins(std::uint32_t client_mask, std::uint32_t waiter_mask);

  bool waiter_wins(const OwnedSets& owned);
  std::uint64_t nodes() const { return nodes_; }
  const GameRules& rules() const { return rules_; }
  Objective objective() const { return objective_; }
  int board_size() const { return board_size_; }

  static std::uint32_t mask_of(const std::vector<ElementId>& elements);

 private:
  bool client_achieved(std::uint32_t client_mask) const;
  bool client_blocked(std::uint32_t waiter_mask) const;

  int board_size_;
  GameRules rules_;
  Objective objective_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint32_t full_mask_;
  std::vector<std::uint32_t> set_masks_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

// Reference search without a memo table; independent consistency check for
// the memoized solver.
Winner solve_unmemoized(int board_size, const SetFamily& family, GameRules rules,
                        Objective objective = Objective::Containment,
                        std::uint64_t node_budget = ExactSolver::kDefaultBudget);

struct ThresholdResult {
  std::optional<int> flip_q;     // smallest q where the large-q side wins
  std::vector<Winner> winners;   // winner at q = 1..q_max
};

// Solves at every q in 1..q_max, verifies the winner is monotone in q, and
// returns the unique flip point (WC flips Waiter->Client, CW Client->Waiter).
// A monotonicity violation is a hard error.
ThresholdResult exact_threshold_bias(int board_size, const SetFamily& family, GameKind kind,
                                     int q_max, Objective objective = Objective::Containment,
                                     std::uint64_t node_budget = ExactSolver::kDefaultBudget);

// Minimax-optimal play exposed through the engine's strategy interface.
class BestResponseWaiter : public WaiterStrategy {
 public:
  explicit BestResponseWaiter(ExactSolver& solver) : solver_(solver) {}
  std::vector<ElementId> offer(const GameState& state, const GameRules& rules) override;

 private:
  ExactSolver& solver_;
};

class BestResponseClient : public ClientStrategy {
 public:
  explicit BestResponseClient(ExactSolver& solver) : solver_(solver) {}
  ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                 const GameRules& rules) override;

 private:
  ExactSolver& solver_;
};

}  // namespace wcw
