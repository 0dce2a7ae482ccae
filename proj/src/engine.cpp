#include "wcw/engine.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "wcw/common.hpp"

namespace wcw {

std::string to_string(GameKind kind) {
  return kind == GameKind::WaiterClient ? "WC" : "CW";
}

std::string to_string(Winner w) { return w == Winner::Client ? "client" : "waiter"; }

bool legal_offer(const OwnedSets& owned, const GameRules& rules,
                 const std::vector<ElementId>& offer, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (owned.free_count() == 0) return fail("game already finished");
  std::unordered_set<ElementId> seen;
  for (ElementId e : offer) {
    if (e < 0 || e >= owned.size()) return fail("element out of range");
    if (!owned.is_free(e)) return fail("offered element is not free");
    if (!seen.insert(e).second) return fail("duplicate element in offer");
  }
  int t = static_cast<int>(offer.size());
  int f = owned.free_count();
  if (rules.kind == GameKind::WaiterClient) {
    int want = std::min(rules.q + 1, f);
    if (t != want) return fail("WC offer must have exactly min(q+1, free) elements");
    // When f < q+1 the full free set is forced; t == want == f already implies it.
  } else {
    if (t < 1 || t > rules.q + 1) return fail("CW offer size must be in 1..q+1");
  }
  return true;
}

Outcome winner_of_final_position(const OwnedSets& owned, const SetFamily& family,
                                 GameKind kind) {
  std::optional<std::vector<ElementId>> witness;
  for (const auto& set : family.sets) {
    bool inside = true;
    for (ElementId e : set)
      if (owned.owner(e) != Owner::Client) {
        inside = false;
        break;
      }
    if (inside) {
      witness = set;
      break;
    }
  }
  Outcome out;
  out.witness = witness;
  bool claimed = witness.has_value();
  if (kind == GameKind::WaiterClient)
    out.winner = claimed ? Winner::Waiter : Winner::Client;
  else
    out.winner = claimed ? Winner::Client : Winner::Waiter;
  return out;
}

Transcript play(int board_size, const SetFamily& family, const GameRules& rules,
                WaiterStrategy& waiter, ClientStrategy& client,
                const std::string& board_desc) {
  if (rules.q < 1) throw std::invalid_argument("q must be >= 1");
  Transcript t;
  t.rules = rules;
  t.board_desc = board_desc;
  t.board_size = board_size;
  GameState state(board_size);
  int round_cap = board_size + 1;  // nontermination guard
  while (state.owned.free_count() > 0) {
    ++state.round;
    if (state.round > round_cap) throw std::runtime_error("round cap exceeded");
    RoundRecord rec;
    rec.round = state.round;
    int f = state.owned.free_count();
    if (rules.kind == GameKind::WaiterClient && f < rules.q + 1) {
      // Short final round: Waiter claims all remaining, no Client pick.
      rec.offer = state.owned.free_elements();
      for (ElementId e : rec.offer) state.owned.claim(e, Owner::Waiter);
      waiter.observe(state, rec.offer, std::nullopt);
      client.observe(state, rec.offer, std::nullopt);
    } else {
      std::vector<ElementId> offer = waiter.offer(state, rules);
      std::sort(offer.begin(), offer.end());
      std::string why;
      if (!legal_offer(state.owned, rules, offer, &why)) throw IllegalMove("waiter", why);
      ElementId picked = client.pick(offer, state, rules);
      if (std::find(offer.begin(), offer.end(), picked) == offer.end())
        throw IllegalMove("client", "pick not in offer");
      state.owned.claim(picked, Owner::Client);
      for (ElementId e : offer)
        if (e != picked) state.owned.claim(e, Owner::Waiter);
      rec.offer = offer;
      rec.pick = picked;
      waiter.observe(state, offer, picked);
      client.observe(state, offer, picked);
    }
    rec.waiter_diag = waiter.diagnostic();
    rec.client_diag = client.diagnostic();
    t.rounds.push_back(std::move(rec));
  }
  state.finished = true;
  t.outcome = winner_of_final_position(state.owned, family, rules.kind);
  t.client_elements = state.owned.elements_of(Owner::Client);
  t.waiter_elements = state.owned.elements_of(Owner::Waiter);
  return t;
}

void write_transcript(std::ostream& os, const Transcript& t) {
  os << "# wcw-transcript v1\n";
  os << "kind=" << to_string(t.rules.kind) << " q=" << t.rules.q
     << " size=" << t.board_size << " board=" << t.board_desc << "\n";
  for (const auto& r : t.rounds) {
    os << "round " << r.round << " offer";
    for (ElementId e : r.offer) os << " " << e;
    os << " pick " << (r.pick ? std::to_string(*r.pick) : std::string("-"));
    if (!std::isnan(r.client_diag)) os << " cpot " << r.client_diag;
    if (!std::isnan(r.waiter_diag)) os << " wpot " << r.waiter_diag;
    os << "\n";
  }
  os << "outcome winner=" << to_string(t.outcome.winner) << "\n";
  if (t.outcome.witness) {
    os << "witness";
    for (ElementId e : *t.outcome.witness) os << " " << e;
    os << "\n";
  }
  os << "client";
  for (ElementId e : t.client_elements) os << " " << e;
  os << "\nwaiter";
  for (ElementId e : t.waiter_elements) os << " " << e;
  os << "\n";
}

Transcript read_transcript(std::istream& is) {
  Transcript t;
  std::string line;
  if (!std::getline(is, line) || line != "# wcw-transcript v1")
    throw std::runtime_error("missing wcw-transcript header");
  if (!std::getline(is, line)) throw std::runtime_error("truncated transcript");
  {
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("kind=", 0) == 0)
        t.rules.kind = tok.substr(5) == "WC" ? GameKind::WaiterClient : GameKind::ClientWaiter;
      else if (tok.rfind("q=", 0) == 0)
        t.rules.q = std::stoi(tok.substr(2));
      else if (tok.rfind("size=", 0) == 0)
        t.board_size = std::stoi(tok.substr(5));
      else if (tok.rfind("board=", 0) == 0) {
        t.board_desc = tok.substr(6);
        std::string rest;
        std::getline(hs, rest);
        t.board_desc += rest;
      }
    }
  }
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "round") {
      RoundRecord r;
      ls >> r.round >> word;  // "offer"
      std::string tok;
      while (ls >> tok) {
        if (tok == "pick") break;
        r.offer.push_back(std::stoi(tok));
      }
      if (ls >> tok && tok != "-") r.pick = std::stoi(tok);
      while (ls >> tok) {
        double v;
        if (tok == "cpot" && ls >> v) r.client_diag = v;
        else if (tok == "wpot" && ls >> v) r.waiter_diag = v;
      }
      t.rounds.push_back(std::move(r));
    } else if (word == "outcome") {
      std::string tok;
      ls >> tok;
      t.outcome.winner = tok == "winner=client" ? Winner::Client : Winner::Waiter;
    } else if (word == "witness") {
      std::vector<ElementId> w;
      ElementId e;
      while (ls >> e) w.push_back(e);
      t.outcome.witness = std::move(w);
    } else if (word == "client") {
      ElementId e;
      while (ls >> e) t.client_elements.push_back(e);
    } else if (word == "waiter") {
      ElementId e;
      while (ls >> e) t.waiter_elements.push_back(e);
    }
  }
  return t;
}

Outcome replay(const Transcript& t, const SetFamily& family) {
  OwnedSets owned(t.board_size);
  for (const auto& r : t.rounds) {
    if (r.pick) {
      owned.claim(*r.pick, Owner::Client);
      for (ElementId e : r.offer)
        if (e != *r.pick) owned.claim(e, Owner::Waiter);
    } else {
      for (ElementId e : r.offer) owned.claim(e, Owner::Waiter);
    }
  }
  if (owned.free_count() != 0) throw std::runtime_error("replay: board not exhausted");
  Outcome out = winner_of_final_position(owned, family, t.rules.kind);
  if (out.winner != t.outcome.winner)
    throw std::runtime_error("replay: winner mismatch");
  if (owned.elements_of(Owner::Client) != t.client_elements ||
      owned.elements_of(Owner::Waiter) != t.waiter_elements)
    throw std::runtime_error("replay: final sets mismatch");
  return out;
}

}  // namespace wcw
