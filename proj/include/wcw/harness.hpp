#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wcw/engine.hpp"
#include "wcw/strategies.hpp"

namespace wcw {

enum class GameFamilyKind { Non2Col, KSat };
enum class GameVersion { WC, CW };

// Side of a theorem bound: Below is the small-q regime (the building side
// wins: Waiter in WC, Client in CW), Above is the large-q regime.
enum class BoundSide { Below, Above };

struct TheoremBound {
  GameFamilyKind game;
  GameVersion version;
  BoundSide side;
  std::string formula;
  double value = 0.0;
};

// The eight closed-form bounds on the threshold bias. Exact integer
// binomials, floating point only at the end.
TheoremBound theorem_bound(GameFamilyKind game, GameVersion version, BoundSide side,
                           int n, int k);

// Constant factor between the two sides (asymptotic o(1) terms omitted).
double theorem_gap_factor(GameFamilyKind game, GameVersion version, int k);

struct ReferenceConstants {
  double c2k_lower = 0.0;   // 2-colorability edge-density threshold bracket
  double c2k_upper = 0.0;
  double crk_lower = 0.0;   // general-r bracket
  double crk_upper = 0.0;
  double ksat_threshold = 0.0;  // satisfiability threshold density (o_k(1) omitted)
};

// Report-annotation constants only; no gameplay role.
ReferenceConstants reference_constants(int k, int r);

struct ExperimentConfig {
  GameFamilyKind game = GameFamilyKind::Non2Col;
  GameVersion version = GameVersion::WC;
  int n = 6;
  int k = 2;
  int q_min = 1;
  int q_max = 1;
  std::string family_key = "clique";  // clique[:m] | local-density | mono-clause | path to file
  std::string waiter_key = "random";
  std::string client_key = "random";
  int reps = 10;
  std::uint64_t seed = 1;
  std::string out;            // empty = stdout
  std::string format = "csv"; // csv | text
  double crossing = 0.5;      // win-rate level for bisect

  void validate() const;
};

// Board + family + rules resolved from a config; strategies are created
// against this context.
struct GameSetup {
  std::optional<HypergraphBoard> hboard;
  std::optional<ClauseBoard> cboard;
  SetFamily family;
  GameRules rules;
  int board_size = 0;
  std::string board_desc;
};

GameSetup make_setup(const ExperimentConfig& config, int q);

// Strategy string keys: random | wc-client-potential | cw-client-potential |
// wc-waiter-potential | cw-waiter-batch | greedy-degree | best-response.
std::unique_ptr<WaiterStrategy> make_waiter(const std::string& key, const GameSetup& setup,
                                            std::uint64_t seed);
std::unique_ptr<ClientStrategy> make_client(const std::string& key, const GameSetup& setup,
                                            std::uint64_t seed);

struct SweepRow {
  int q = 0;
  int games = 0;
  int client_wins = 0;
  int waiter_wins = 0;
  double client_win_rate = 0.0;
  double mean_rounds = 0.0;
  double mean_client_elements = 0.0;
  double mean_final_potential = 0.0;  // NaN when no potential strategy in play
  int max_client_anchor_degree = -1;  // -1 when the board has no anchors
};

struct SweepResult {
  std::string header;  // one-line '#' comment: version, config, seed
  std::vector<SweepRow> rows;
};

SweepResult sweep(const ExperimentConfig& config);
void write_sweep(std::ostream& os, const SweepResult& result, const std::string& format);

struct BisectResult {
  int q_star = 0;
  double rate_at_q_star = 0.0;
  std::vector<std::pair<int, double>> profile;  // probed (q, rate)
};

// Smallest q in [q_min, q_max] where the large-q side's win rate reaches the
// crossing level. The empirical profile must straddle the level; otherwise a
// diagnostic error carries the measured rates.
BisectResult bisect_threshold(const ExperimentConfig& config);

struct BaselineRow {
  int m = 0;
  double fraction = 0.0;  // fraction of sampled m-subsets with the property
};

struct BaselineResult {
  std::vector<BaselineRow> rows;
  std::optional<double> crossing_m;  // interpolated 1/2-crossing
};

// Random-subset threshold estimate for the winning-set property:
// non-2-colorability (Non2Col) or unsatisfiability (KSat).
BaselineResult random_baseline(GameFamilyKind game, int n, int k, int m_min, int m_max,
                               int m_step, int reps, std::uint64_t seed, int sat_cap = 40);

// Plain key=value configuration file; unknown keys are errors.
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

std::string to_string(GameFamilyKind g);
std::string to_string(GameVersion v);

}  // namespace wcw
