#include "wcw/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "wcw/common.hpp"

namespace wcw {

PotentialLedger::PotentialLedger(const SetFamily& family, int q, Mode mode)
    : mode_(mode), q_(q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  switch (mode) {
    case Mode::WcClient: base_ = 1.0 / (q + 1.0); break;
    case Mode::CwClient: base_ = static_cast<double>(q) / (q + 1.0); break;
    case Mode::WcWaiter: base_ = std::exp2(-1.0 / (2.0 * q - 1.0)); break;
  }
  sets_ = family.sets;
  incidence_.resize(family.board_size);
  free_count_.resize(sets_.size());
  live_.assign(sets_.size(), 1);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    free_count_[i] = static_cast<int>(sets_[i].size());
    for (ElementId e : sets_[i]) incidence_.at(e).push_back(static_cast<int>(i));
  }
  recompute();
}

double PotentialLedger::term(int i) const {
  return std::pow(base_, static_cast<double>(free_count_[i]));
}

void PotentialLedger::apply_claim(ElementId e, Owner who) {
  if (who == Owner::Free) throw std::invalid_argument("claim must be Client or Waiter");
  bool shrink_on_client = mode_ == Mode::WcClient;
  for (int i : incidence_.at(e)) {
    if (!live_[i]) continue;
    bool shrinks = (who == Owner::Client) == shrink_on_client;
    if (shrinks) {
      double old = term(i);
      --free_count_[i];
      potential_ += term(i) - old;
    } else {
      live_[i] = 0;
      potential_ -= term(i);
    }
  }
  // Bound floating-point drift on the incremental sum.
  if (++rounds_since_recompute_ >= 64) recompute();
}

double PotentialLedger::marginal_danger(ElementId e) const {
  KahanSum s;
  for (int i : incidence_.at(e))
    if (live_[i]) s.add(term(i));
  return s.value();
}

int PotentialLedger::fully_claimed_count() const {
  int count = 0;
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (live_[i] && free_count_[i] == 0) ++count;
  return count;
}

void PotentialLedger::recompute() {
  KahanSum s;
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (live_[i]) s.add(term(static_cast<int>(i)));
  potential_ = s.value();
  rounds_since_recompute_ = 0;
}

ElementId wc_client_potential_pick(const PotentialLedger& ledger,
                                   const std::vector<ElementId>& offer) {
  if (offer.empty()) throw std::invalid_argument("empty offer");
  // Picking x keeps exactly the live sets with A /\ offer == {x}; their term
  // grows by 1/base. Everything else the offer touches dies.
  std::vector<ElementId> sorted(offer);
  std::sort(sorted.begin(), sorted.end());
  std::set<int> touched;
  for (ElementId e : sorted)
    for (int i : ledger.sets_containing(e))
      if (ledger.set_live(i)) touched.insert(i);
  ElementId best = sorted.front();
  double best_contrib = std::numeric_limits<double>::infinity();
  for (ElementId x : sorted) {
    KahanSum contrib;
    for (int i : touched) {
      const auto& a = ledger.set_elements(i);
      int inter = 0;
      bool has_x = false;
      for (ElementId e : sorted)
        if (std::binary_search(a.begin(), a.end(), e)) {
          ++inter;
          if (e == x) has_x = true;
        }
      if (inter == 1 && has_x) contrib.add(ledger.term(i) / ledger.base());
    }
    if (contrib.value() < best_contrib - 1e-15) {
      best_contrib = contrib.value();
      best = x;
    }
  }
  return best;
}

ElementId cw_client_potential_pick(const PotentialLedger& ledger,
                                   const std::vector<ElementId>& offer) {
  if (offer.empty()) throw std::invalid_argument("empty offer");
  std::vector<ElementId> sorted(offer);
  std::sort(sorted.begin(), sorted.end());
  std::set<int> touched;
  for (ElementId e : sorted)
    for (int i : ledger.sets_containing(e))
      if (ledger.set_live(i)) touched.insert(i);
  double gamma = 1.0 / ledger.base();  // (q+1)/q
  ElementId best = sorted.front();
  double best_post = std::numeric_limits<double>::infinity();
  for (ElementId x : sorted) {
    // Sets containing x become satisfied; each surviving touched set pays a
    // factor gamma per offered element of it handed to Waiter.
    KahanSum post;
    for (int i : touched) {
      const auto& a = ledger.set_elements(i);
      if (std::binary_search(a.begin(), a.end(), x)) continue;
      int inter = 0;
      for (ElementId e : sorted)
        if (std::binary_search(a.begin(), a.end(), e)) ++inter;
      post.add(ledger.term(i) * std::pow(gamma, inter));
    }
    if (post.value() < best_post - 1e-15) {
      best_post = post.value();
      best = x;
    }
  }
  return best;
}

std::vector<ElementId> wc_waiter_potential_offer(const PotentialLedger& ledger,
                                                 const GameState& state,
                                                 const GameRules& rules) {
  std::vector<ElementId> free = state.owned.free_elements();
  if (free.empty()) throw std::invalid_argument("no free elements");
  int want = std::min(rules.q + 1, static_cast<int>(free.size()));
  std::stable_sort(free.begin(), free.end(), [&](ElementId a, ElementId b) {
    double da = ledger.marginal_danger(a), db = ledger.marginal_danger(b);
    if (da != db) return da > db;
    return a < b;
  });
  free.resize(want);
  std::sort(free.begin(), free.end());
  return free;
}

namespace {

// Shared observe logic: the picked element goes to Client, the rest of the
// offer to Waiter (no pick: everything to Waiter, the WC short round).
void apply_round(PotentialLedger& ledger, const std::vector<ElementId>& offer,
                 std::optional<ElementId> pick) {
  for (ElementId e : offer) {
    if (pick && e == *pick)
      ledger.apply_claim(e, Owner::Client);
    else
      ledger.apply_claim(e, Owner::Waiter);
  }
}

}  // namespace

WcClientPotential::WcClientPotential(const SetFamily& family, int q)
    : ledger_(family, q, PotentialLedger::Mode::WcClient) {}

ElementId WcClientPotential::pick(const std::vector<ElementId>& offer, const GameState&,
                                  const GameRules&) {
  return wc_client_potential_pick(ledger_, offer);
}

void WcClientPotential::observe(const GameState&, const std::vector<ElementId>& offer,
                                std::optional<ElementId> pick) {
  apply_round(ledger_, offer, pick);
}

CwClientPotential::CwClientPotential(const SetFamily& family, int q)
    : ledger_(family, q, PotentialLedger::Mode::CwClient) {}

ElementId CwClientPotential::pick(const std::vector<ElementId>& offer, const GameState&,
                                  const GameRules&) {
  return cw_client_potential_pick(ledger_, offer);
}

void CwClientPotential::observe(const GameState&, const std::vector<ElementId>& offer,
                                std::optional<ElementId> pick) {
  apply_round(ledger_, offer, pick);
}

WcWaiterPotential::WcWaiterPotential(const SetFamily& family, int q)
    : ledger_(family, q, PotentialLedger::Mode::WcWaiter) {}

std::vector<ElementId> WcWaiterPotential::offer(const GameState& state,
                                                const GameRules& rules) {
  return wc_waiter_potential_offer(ledger_, state, rules);
}

void WcWaiterPotential::observe(const GameState&, const std::vector<ElementId>& offer,
                                std::optional<ElementId> pick) {
  apply_round(ledger_, offer, pick);
}

AnchorIncidence AnchorIncidence::from(const HypergraphBoard& board) {
  AnchorIncidence inc;
  inc.anchor_count = board.n();
  inc.incident.resize(board.n());
  inc.anchors_of.resize(static_cast<std::size_t>(board.edge_count()));
  for (int v = 0; v < board.n(); ++v) inc.incident[v] = board.edges_at_vertex(v);
  for (ElementId e = 0; e < board.edge_count(); ++e)
    inc.anchors_of[e] = board.unrank_edge(e);
  return inc;
}

AnchorIncidence AnchorIncidence::from(const ClauseBoard& board) {
  AnchorIncidence inc;
  inc.anchor_count = board.n();
  inc.incident.resize(board.n());
  inc.anchors_of.resize(static_cast<std::size_t>(board.clause_count()));
  for (int i = 0; i < board.n(); ++i) inc.incident[i] = board.clauses_with_block(i);
  for (ElementId c = 0; c < board.clause_count(); ++c) {
    std::vector<int> blocks;
    for (int lit : board.decode_clause(c)) blocks.push_back(ClauseBoard::literal_variable(lit));
    inc.anchors_of[c] = std::move(blocks);
  }
  return inc;
}

CwWaiterBatchOffer::CwWaiterBatchOffer(AnchorIncidence incidence)
    : incidence_(std::move(incidence)) {}

std::vector<ElementId> CwWaiterBatchOffer::batch_union(ElementId claim, const OwnedSets& owned,
                                                       int per_anchor) const {
  std::vector<ElementId> result;
  std::set<ElementId> used;
  for (int anchor : incidence_.anchors_of.at(claim)) {
    int taken = 0;
    for (ElementId e : incidence_.incident[anchor]) {
      if (taken >= per_anchor) break;
      if (!owned.is_free(e) || used.count(e)) continue;
      used.insert(e);
      result.push_back(e);
      ++taken;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<ElementId> CwWaiterBatchOffer::offer(const GameState& state,
                                                 const GameRules& rules) {
  const OwnedSets& owned = state.owned;
  int f = owned.free_count();
  if (f == 0) throw std::invalid_argument("no free elements");
  auto arbitrary = [&]() {
    std::vector<ElementId> out;
    int want = std::min(rules.q + 1, f);
    for (ElementId e = 0; e < owned.size() && static_cast<int>(out.size()) < want; ++e)
      if (owned.is_free(e)) out.push_back(e);
    return out;
  };
  if (!last_claim_) return arbitrary();  // first round: q+1 arbitrary free elements
  int per_anchor = (rules.q + 1) / static_cast<int>(incidence_.anchors_of.at(*last_claim_).size());
  std::vector<ElementId> batch = batch_union(*last_claim_, owned, per_anchor);
  if (!batch.empty()) return batch;
  for (ElementId earlier : claim_queue_) {  // oldest unexhausted first
    batch = batch_union(earlier, owned, per_anchor);
    if (!batch.empty()) return batch;
  }
  return arbitrary();
}

void CwWaiterBatchOffer::observe(const GameState&, const std::vector<ElementId>&,
                                 std::optional<ElementId> pick) {
  if (!pick) return;
  if (last_claim_) claim_queue_.push_back(*last_claim_);
  last_claim_ = *pick;
}

std::vector<ElementId> RandomWaiter::offer(const GameState& state, const GameRules& rules) {
  std::vector<ElementId> free = state.owned.free_elements();
  if (free.empty()) throw std::invalid_argument("no free elements");
  int t;
  if (rules.kind == GameKind::WaiterClient) {
    t = std::min(rules.q + 1, static_cast<int>(free.size()));
  } else {
    int max_t = std::min(rules.q + 1, static_cast<int>(free.size()));
    t = std::uniform_int_distribution<int>(1, max_t)(rng_);
  }
  std::shuffle(free.begin(), free.end(), rng_);
  free.resize(t);
  std::sort(free.begin(), free.end());
  return free;
}

ElementId RandomClient::pick(const std::vector<ElementId>& offer, const GameState&,
                             const GameRules&) {
  if (offer.empty()) throw std::invalid_argument("empty offer");
  std::size_t i = std::uniform_int_distribution<std::size_t>(0, offer.size() - 1)(rng_);
  return offer[i];
}

GreedyDegreeClient::GreedyDegreeClient(AnchorIncidence incidence)
    : incidence_(std::move(incidence)), degree_(incidence_.anchor_count, 0) {}

ElementId GreedyDegreeClient::pick(const std::vector<ElementId>& offer, const GameState&,
                                   const GameRules&) {
  if (offer.empty()) throw std::invalid_argument("empty offer");
  std::vector<ElementId> sorted(offer);
  std::sort(sorted.begin(), sorted.end());
  ElementId best = sorted.front();
  int best_score = -1;
  for (ElementId e : sorted) {
    int score = 0;
    for (int a : incidence_.anchors_of.at(e)) score = std::max(score, degree_[a] + 1);
    if (score > best_score) {
      best_score = score;
      best = e;
    }
  }
  return best;
}

void GreedyDegreeClient::observe(const GameState&, const std::vector<ElementId>&,
                                 std::optional<ElementId> pick) {
  if (!pick) return;
  for (int a : incidence_.anchors_of.at(*pick)) ++degree_[a];
}

std::optional<TwoColoring> greedy_two_coloring(const Hypergraph& h) {
  DegeneracyResult degen = is_one_degenerate(h);
  if (!degen.one_degenerate) return std::nullopt;
  const std::vector<int>& order = degen.order;
  std::vector<int> position(h.n, -1);
  for (int i = 0; i < h.n; ++i) position[order[i]] = i;
  std::vector<int> color(h.n, -1);
  // Color from v_n back to v_1; edge e constrains v_i only when all of e lies
  // in the already-colored suffix {v_i..v_n}.
  for (int i = h.n - 1; i >= 0; --i) {
    int v = order[i];
    bool forbid[2] = {false, false};
    for (const auto& e : h.edges) {
      bool contains_v = false, in_suffix = true;
      for (int u : e) {
        if (u == v) contains_v = true;
        if (position[u] < i) in_suffix = false;
      }
      if (!contains_v || !in_suffix) continue;
      bool mono = true;
      int c = -1;
      for (int u : e) {
        if (u == v) continue;
        if (c < 0) c = color[u];
        if (color[u] != c) mono = false;
      }
      if (mono && c >= 0) forbid[c] = true;
    }
    if (forbid[0] && forbid[1]) return std::nullopt;  // cannot happen when 1-degenerate
    color[v] = forbid[0] ? 1 : 0;
  }
  TwoColoring result;
  result.coloring = color;
  result.elimination_order = order;
  if (!verify_coloring(h, color)) return std::nullopt;
  return result;
}

std::optional<ExtractedAssignment> extract_assignment(const ClauseSet& c) {
  std::vector<bool> remaining(c.n, true);
  ExtractedAssignment out;
  out.assignment.assign(c.n, true);
  int left = c.n;
  while (left > 0) {
    // Clauses whose variables all lie in remaining blocks.
    std::vector<const std::vector<int>*> live;
    for (const auto& clause : c.clauses) {
      bool inside = true;
      for (int lit : clause)
        if (!remaining[ClauseBoard::literal_variable(lit)]) {
          inside = false;
          break;
        }
      if (inside) live.push_back(&clause);
    }
    std::vector<char> pos_seen(c.n, 0), neg_seen(c.n, 0);
    for (const auto* clause : live)
      for (int lit : *clause) {
        int v = ClauseBoard::literal_variable(lit);
        (ClauseBoard::literal_negated(lit) ? neg_seen : pos_seen)[v] = 1;
      }
    int pick = -1;
    for (int v = 0; v < c.n; ++v) {
      if (!remaining[v]) continue;
      if (!(pos_seen[v] && neg_seen[v])) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;  // every remaining block occurs both ways
    // Make the occurring literal true; default x=1 when neither occurs.
    out.assignment[pick] = !neg_seen[pick];
    out.block_order.push_back(pick);
    remaining[pick] = false;
    --left;
  }
  if (!satisfies(c, out.assignment)) return std::nullopt;
  return out;
}

}  // namespace wcw
