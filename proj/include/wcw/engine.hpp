#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wcw/combinat.hpp"
#include "wcw/families.hpp"

namespace wcw {

enum class GameKind { WaiterClient, ClientWaiter };
enum class Winner { Client, Waiter };

std::string to_string(GameKind kind);
std::string to_string(Winner w);

struct GameRules {
  GameKind kind = GameKind::WaiterClient;
  int q = 1;  // Waiter bias, >= 1
};

struct GameState {
  explicit GameState(int board_size) : owned(board_size) {}
  OwnedSets owned;
  int round = 0;
  bool finished = false;
};

struct RoundRecord {
  int round = 0;
  std::vector<ElementId> offer;
  std::optional<ElementId> pick;  // absent in the short final WC round
  double waiter_diag = std::numeric_limits<double>::quiet_NaN();
  double client_diag = std::numeric_limits<double>::quiet_NaN();
};

struct Outcome {
  Winner winner = Winner::Client;
  std::optional<std::vector<ElementId>> witness;  // a fully-Client-claimed winning set
};

struct Transcript {
  GameRules rules;
  std::string board_desc;
  int board_size = 0;
  std::vector<RoundRecord> rounds;
  Outcome outcome;
  std::vector<ElementId> client_elements;
  std::vector<ElementId> waiter_elements;
};

class WaiterStrategy {
 public:
  virtual ~WaiterStrategy() = default;
  virtual std::vector<ElementId> offer(const GameState& state, const GameRules& rules) = 0;
  virtual void observe(const GameState& state, const std::vector<ElementId>& offer,
                       std::optional<ElementId> pick) {
    (void)state; (void)offer; (void)pick;
  }
  // Optional per-round diagnostic (e.g. potential) streamed into transcripts.
  virtual double diagnostic() const { return std::numeric_limits<double>::quiet_NaN(); }
};

class ClientStrategy {
 public:
  virtual ~ClientStrategy() = default;
  virtual ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                         const GameRules& rules) = 0;
  virtual void observe(const GameState& state, const std::vector<ElementId>& offer,
                       std::optional<ElementId> pick) {
    (void)state; (void)offer; (void)pick;
  }
  virtual double diagnostic() const { return std::numeric_limits<double>::quiet_NaN(); }
};

// WC: the offer must be exactly min(q+1, free) free elements, and when fewer
// than q+1 remain it must be the whole free set. CW: 1..q+1 distinct free
// elements. `reason`, when given, receives the rejection cause.
bool legal_offer(const OwnedSets& owned, const GameRules& rules,
                 const std::vector<ElementId>& offer, std::string* reason = nullptr);

// Scans the family for a set fully inside Client's elements. WC: Waiter wins
// iff one exists; CW: Client wins iff one exists.
Outcome winner_of_final_position(const OwnedSets& owned, const SetFamily& family,
                                 GameKind kind);

// Runs a game to exhaustion of the board. Illegal strategy moves abort with
// IllegalMove naming the offender. The short final WC round is a Waiter-only
// move with no Client pick.
Transcript play(int board_size, const SetFamily& family, const GameRules& rules,
                WaiterStrategy& waiter, ClientStrategy& client,
                const std::string& board_desc = "");

void write_transcript(std::ostream& os, const Transcript& t);
Transcript read_transcript(std::istream& is);

// Re-applies the recorded rounds and recomputes the outcome; throws if the
// result disagrees with what the transcript recorded.
Outcome replay(const Transcript& t, const SetFamily& family);

}  // namespace wcw
