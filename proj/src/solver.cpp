#include "wcw/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "wcw/common.hpp"

namespace wcw {

namespace {

std::vector<ElementId> free_list(std::uint32_t client_mask, std::uint32_t waiter_mask,
                                 int board_size) {
  std::vector<ElementId> out;
  std::uint32_t taken = client_mask | waiter_mask;
  for (int e = 0; e < board_size; ++e)
    if (!((taken >> e) & 1)) out.push_back(e);
  return out;
}

// Visits offers (as masks) of the given size over `free` in lexicographic
// order of the sorted element list; fn returns true to stop early.
template <typename Fn>
bool for_each_offer(const std::vector<ElementId>& free, int size, Fn&& fn) {
  bool stop = false;
  for_each_combination(free, size, [&](const std::vector<ElementId>& combo) {
    if (stop) return;
    std::uint32_t m = 0;
    for (ElementId e : combo) m |= 1u << e;
    if (fn(m, combo)) stop = true;
  });
  return stop;
}

}  // namespace

std::uint32_t ExactSolver::mask_of(const std::vector<ElementId>& elements) {
  std::uint32_t m = 0;
  for (ElementId e : elements) m |= 1u << e;
  return m;
}

ExactSolver::ExactSolver(int board_size, const SetFamily& family, GameRules rules,
                         Objective objective, std::uint64_t node_budget)
    : board_size_(board_size), rules_(rules), objective_(objective), budget_(node_budget) {
  if (board_size < 1 || board_size > kMaxBoard)
    throw std::invalid_argument("ExactSolver supports 1..14 elements");
  if (rules.q < 1) throw std::invalid_argument("q must be >= 1");
  full_mask_ = (board_size == 32) ? ~0u : ((1u << board_size) - 1);
  for (const auto& set : family.sets) set_masks_.push_back(mask_of(set));
}

bool ExactSolver::client_achieved(std::uint32_t client_mask) const {
  if (objective_ == Objective::Containment) {
    for (std::uint32_t s : set_masks_)
      if ((s & client_mask) == s) return true;
    return false;
  }
  for (std::uint32_t s : set_masks_)
    if ((s & client_mask) == 0) return false;
  return true;
}

bool ExactSolver::client_blocked(std::uint32_t waiter_mask) const {
  if (objective_ == Objective::Containment) {
    for (std::uint32_t s : set_masks_)
      if ((s & waiter_mask) == 0) return false;
    return true;
  }
  for (std::uint32_t s : set_masks_)
    if ((s & waiter_mask) == s && s != 0) return true;
  return false;
}

bool ExactSolver::waiter_wins(std::uint32_t client_mask, std::uint32_t waiter_mask) {
  // "achieved" means Client built the target; by the winner rules that is a
  // Waiter win in WC and a Client win in CW.
  bool wc = rules_.kind == GameKind::WaiterClient;
  if (client_achieved(client_mask)) return wc;
  if (client_blocked(waiter_mask)) return !wc;
  std::uint32_t free_mask = full_mask_ & ~(client_mask | waiter_mask);
  if (free_mask == 0) return client_achieved(client_mask) ? wc : !wc;

  std::uint64_t key = (static_cast<std::uint64_t>(waiter_mask) << 32) | client_mask;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (++nodes_ > budget_)
    throw BudgetExceeded("solver node budget exceeded", nodes_);

  std::vector<ElementId> free = free_list(client_mask, waiter_mask, board_size_);
  int f = static_cast<int>(free.size());
  bool result;
  if (wc && f < rules_.q + 1) {
    // Forced short round: Waiter claims everything.
    result = waiter_wins(client_mask, waiter_mask | free_mask);
  } else {
    bool waiter_can_win = false;
    auto try_offer = [&](std::uint32_t offer_mask, const std::vector<ElementId>& combo) {
      bool all_picks_win = true;
      for (ElementId x : combo) {
        std::uint32_t c2 = client_mask | (1u << x);
        std::uint32_t w2 = waiter_mask | (offer_mask & ~(1u << x));
        if (!waiter_wins(c2, w2)) {
          all_picks_win = false;
          break;
        }
      }
      if (all_picks_win) waiter_can_win = true;
      return all_picks_win;  // stop at the first winning offer
    };
    if (wc) {
      for_each_offer(free, rules_.q + 1, try_offer);
    } else {
      for (int t = 1; t <= std::min(rules_.q + 1, f) && !waiter_can_win; ++t)
        for_each_offer(free, t, try_offer);
    }
    result = waiter_can_win;
  }
  memo_.emplace(key, result);
  return result;
}

bool ExactSolver::waiter_wins(const OwnedSets& owned) {
  return waiter_wins(mask_of(owned.elements_of(Owner::Client)),
                     mask_of(owned.elements_of(Owner::Waiter)));
}

SolveResult ExactSolver::solve() {
  SolveResult res;
  bool wc = rules_.kind == GameKind::WaiterClient;
  bool ww = waiter_wins(0, 0);
  res.winner = ww ? Winner::Waiter : Winner::Client;
  res.nodes = nodes_;
  // Principal variation: the root offer consistent with the computed value,
  // and Client's best reply to it.
  std::vector<ElementId> free = free_list(0, 0, board_size_);
  int f = static_cast<int>(free.size());
  if (wc && f < rules_.q + 1) {
    res.principal_offer = free;
    return res;
  }
  auto pick_reply = [&](const std::vector<ElementId>& combo, std::uint32_t offer_mask) {
    for (ElementId x : combo) {
      std::uint32_t c2 = 1u << x;
      std::uint32_t w2 = offer_mask & ~c2;
      if (!waiter_wins(c2, w2)) return std::optional<ElementId>(x);
    }
    return std::optional<ElementId>(combo.empty() ? std::nullopt
                                                  : std::optional<ElementId>(combo.front()));
  };
  auto scan = [&](std::uint32_t offer_mask, const std::vector<ElementId>& combo) {
    bool all_picks_win = true;
    for (ElementId x : combo) {
      std::uint32_t c2 = 1u << x;
      std::uint32_t w2 = offer_mask & ~c2;
      if (!waiter_wins(c2, w2)) {
        all_picks_win = false;
        break;
      }
    }
    if (all_picks_win == ww || res.principal_offer.empty()) {
      res.principal_offer = combo;
      res.principal_pick = pick_reply(combo, offer_mask);
      return all_picks_win == ww;
    }
    return false;
  };
  if (wc) {
    for_each_offer(free, rules_.q + 1, scan);
  } else {
    bool done = false;
    for (int t = 1; t <= std::min(rules_.q + 1, f) && !done; ++t)
      done = for_each_offer(free, t, scan);
  }
  res.nodes = nodes_;
  return res;
}

namespace {

struct PlainSearch {
  int board_size;
  GameRules rules;
  Objective objective;
  std::uint32_t full_mask;
  std::vector<std::uint32_t> set_masks;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  bool achieved(std::uint32_t c) const {
    if (objective == Objective::Containment) {
      for (std::uint32_t s : set_masks)
        if ((s & c) == s) return true;
      return false;
    }
    for (std::uint32_t s : set_masks)
      if ((s & c) == 0) return false;
    return true;
  }

  bool waiter_wins(std::uint32_t c, std::uint32_t w) {
    bool wc = rules.kind == GameKind::WaiterClient;
    std::uint32_t free_mask = full_mask & ~(c | w);
    if (free_mask == 0) return achieved(c) ? wc : !wc;
    if (++nodes > budget) throw BudgetExceeded("plain search budget exceeded", nodes);
    std::vector<ElementId> free = free_list(c, w, board_size);
    int f = static_cast<int>(free.size());
    if (wc && f < rules.q + 1) return waiter_wins(c, w | free_mask);
    bool can = false;
    auto try_offer = [&](std::uint32_t om, const std::vector<ElementId>& combo) {
      bool all = true;
      for (ElementId x : combo)
        if (!waiter_wins(c | (1u << x), w | (om & ~(1u << x)))) {
          all = false;
          break;
        }
      if (all) can = true;
      return all;
    };
    if (wc) {
      for_each_offer(free, rules.q + 1, try_offer);
    } else {
      for (int t = 1; t <= std::min(rules.q + 1, f) && !can; ++t)
        for_each_offer(free, t, try_offer);
    }
    return can;
  }
};

}  // namespace

Winner solve_unmemoized(int board_size, const SetFamily& family, GameRules rules,
                        Objective objective, std::uint64_t node_budget) {
  PlainSearch s;
  s.board_size = board_size;
  s.rules = rules;
  s.objective = objective;
  s.budget = node_budget;
  s.full_mask = (1u << board_size) - 1;
  for (const auto& set : family.sets) s.set_masks.push_back(ExactSolver::mask_of(set));
  return s.waiter_wins(0, 0) ? Winner::Waiter : Winner::Client;
}

ThresholdResult exact_threshold_bias(int board_size, const SetFamily& family, GameKind kind,
                                     int q_max, Objective objective,
                                     std::uint64_t node_budget) {
  ThresholdResult res;
  // Bias monotonicity: raising q helps Client in WC and Waiter in CW, so the
  // winner sequence may flip at most once.
  Winner late_side = kind == GameKind::WaiterClient ? Winner::Client : Winner::Waiter;
  for (int q = 1; q <= q_max; ++q) {
    ExactSolver solver(board_size, family, GameRules{kind, q}, objective, node_budget);
    res.winners.push_back(solver.solve().winner);
  }
  bool seen_late = false;
  for (int i = 0; i < static_cast<int>(res.winners.size()); ++i) {
    if (res.winners[i] == late_side) {
      if (!seen_late) {
        seen_late = true;
        res.flip_q = i + 1;
      }
    } else if (seen_late) {
      throw std::runtime_error("winner not monotone in q: engine or solver bug");
    }
  }
  if (res.flip_q == 1) res.flip_q.reset();  // never flipped inside 1..q_max; late side won throughout
  return res;
}

std::vector<ElementId> BestResponseWaiter::offer(const GameState& state,
                                                 const GameRules& rules) {
  std::uint32_t c = ExactSolver::mask_of(state.owned.elements_of(Owner::Client));
  std::uint32_t w = ExactSolver::mask_of(state.owned.elements_of(Owner::Waiter));
  std::vector<ElementId> free = state.owned.free_elements();
  int f = static_cast<int>(free.size());
  bool wc = rules.kind == GameKind::WaiterClient;
  std::vector<ElementId> fallback;
  std::vector<ElementId> winning;
  auto scan = [&](std::uint32_t om, const std::vector<ElementId>& combo) {
    if (fallback.empty()) fallback = combo;
    bool all = true;
    for (ElementId x : combo)
      if (!solver_.waiter_wins(c | (1u << x), w | (om & ~(1u << x)))) {
        all = false;
        break;
      }
    if (all) winning = combo;
    return all;
  };
  if (wc) {
    for_each_offer(free, std::min(rules.q + 1, f), scan);
  } else {
    bool done = false;
    for (int t = 1; t <= std::min(rules.q + 1, f) && !done; ++t)
      done = for_each_offer(free, t, scan);
  }
  return winning.empty() ? fallback : winning;
}

ElementId BestResponseClient::pick(const std::vector<ElementId>& offer, const GameState& state,
                                   const GameRules&) {
  std::uint32_t c = ExactSolver::mask_of(state.owned.elements_of(Owner::Client));
  std::uint32_t w = ExactSolver::mask_of(state.owned.elements_of(Owner::Waiter));
  std::vector<ElementId> sorted(offer);
  std::sort(sorted.begin(), sorted.end());
  std::uint32_t om = ExactSolver::mask_of(sorted);
  for (ElementId x : sorted)
    if (!solver_.waiter_wins(c | (1u << x), w | (om & ~(1u << x)))) return x;
  return sorted.front();
}

}  // namespace wcw
