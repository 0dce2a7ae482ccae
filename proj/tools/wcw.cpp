// Command-line front end: bounds, play, sweep, bisect, solve, baseline, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "wcw/analyzers.hpp"
#include "wcw/common.hpp"
#include "wcw/harness.hpp"
#include "wcw/solver.hpp"

namespace {

using namespace wcw;

// Relative output paths land in $WCW_OUT_DIR when it is set.
std::string resolve_out(const std::string& out) {
  if (out.empty() || out.front() == '/') return out;
  const char* dir = std::getenv("WCW_OUT_DIR");
  if (!dir || !*dir) return out;
  return std::string(dir) + "/" + out;
}

// Writes through `fn` to the resolved path, or stdout when no path is given.
template <typename Fn>
void with_output(const std::string& out, Fn fn) {
  std::string path = resolve_out(out);
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  fn(os);
}

struct CliOptions {
  ExperimentConfig cfg;
  std::string config_file;
};

// Registers the shared experiment flags on a subcommand. Values land in
// `opt.cfg` after config-file resolution (flags beat file keys).
void add_experiment_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_file, "key=value configuration file");
  auto* game = cmd->add_option_function<std::string>(
      "--game",
      [&opt](const std::string& v) {
        opt.cfg.game = v == "ksat" ? GameFamilyKind::KSat : GameFamilyKind::Non2Col;
      },
      "board family: non2col | ksat");
  game->check(CLI::IsMember({"non2col", "ksat"}));
  auto* ver = cmd->add_option_function<std::string>(
      "--version",
      [&opt](const std::string& v) {
        opt.cfg.version = v == "cw" ? GameVersion::CW : GameVersion::WC;
      },
      "game version: wc | cw");
  ver->check(CLI::IsMember({"wc", "cw"}));
  cmd->add_option("--n", opt.cfg.n, "ground parameter n");
  cmd->add_option("--k", opt.cfg.k, "uniformity / clause width k");
  cmd->add_option_function<int>(
      "--q", [&opt](int q) { opt.cfg.q_min = opt.cfg.q_max = q; }, "single bias value");
  cmd->add_option("--q-min", opt.cfg.q_min, "bias range start");
  cmd->add_option("--q-max", opt.cfg.q_max, "bias range end");
  cmd->add_option("--family", opt.cfg.family_key,
                  "winning-set family: clique[:m] | local-density | mono-clause | file path");
  cmd->add_option("--waiter", opt.cfg.waiter_key, "Waiter strategy key");
  cmd->add_option("--client", opt.cfg.client_key, "Client strategy key");
  cmd->add_option("--reps", opt.cfg.reps, "games per data point");
  cmd->add_option("--seed", opt.cfg.seed, "master RNG seed");
  cmd->add_option("--out", opt.cfg.out, "output file (default stdout)");
  cmd->add_option("--format", opt.cfg.format, "csv | text")
      ->check(CLI::IsMember({"csv", "text"}));
  cmd->add_option("--crossing", opt.cfg.crossing, "win-rate crossing level for bisect");
  // The config file provides defaults; explicit flags override it, so load
  // the file first and replay the flag values on top.
  cmd->parse_complete_callback([cmd, &opt]() {
    if (opt.config_file.empty()) return;
    ExperimentConfig flags = opt.cfg;
    opt.cfg = load_config_file(opt.config_file);
    auto passed = [cmd](const std::string& name) { return cmd->count(name) > 0; };
    if (passed("--game")) opt.cfg.game = flags.game;
    if (passed("--version")) opt.cfg.version = flags.version;
    if (passed("--n")) opt.cfg.n = flags.n;
    if (passed("--k")) opt.cfg.k = flags.k;
    if (passed("--q")) { opt.cfg.q_min = flags.q_min; opt.cfg.q_max = flags.q_max; }
    if (passed("--q-min")) opt.cfg.q_min = flags.q_min;
    if (passed("--q-max")) opt.cfg.q_max = flags.q_max;
    if (passed("--family")) opt.cfg.family_key = flags.family_key;
    if (passed("--waiter")) opt.cfg.waiter_key = flags.waiter_key;
    if (passed("--client")) opt.cfg.client_key = flags.client_key;
    if (passed("--reps")) opt.cfg.reps = flags.reps;
    if (passed("--seed")) opt.cfg.seed = flags.seed;
    if (passed("--out")) opt.cfg.out = flags.out;
    if (passed("--format")) opt.cfg.format = flags.format;
    if (passed("--crossing")) opt.cfg.crossing = flags.crossing;
  });
}

int cmd_bounds(const CliOptions& opt) {
  const ExperimentConfig& c = opt.cfg;
  with_output(c.out, [&](std::ostream& os) {
    os << "# bounds n=" << c.n << " k=" << c.k << "\n";
    os << "game,version,side,value,formula\n";
    for (GameFamilyKind g : {GameFamilyKind::Non2Col, GameFamilyKind::KSat})
      for (GameVersion v : {GameVersion::WC, GameVersion::CW})
        for (BoundSide s : {BoundSide::Below, BoundSide::Above}) {
          TheoremBound b = theorem_bound(g, v, s, c.n, c.k);
          os << to_string(g) << "," << to_string(v) << ","
             << (s == BoundSide::Below ? "below" : "above") << "," << b.value << ",\""
             << b.formula << "\"\n";
        }
    for (GameFamilyKind g : {GameFamilyKind::Non2Col, GameFamilyKind::KSat})
      for (GameVersion v : {GameVersion::WC, GameVersion::CW})
        os << "# gap-factor " << to_string(g) << "/" << to_string(v) << " = "
           << theorem_gap_factor(g, v, c.k) << "\n";
    ReferenceConstants rc = reference_constants(c.k, 3);
    os << "# reference c2k=[" << rc.c2k_lower << "," << rc.c2k_upper << "] c3k=["
       << rc.crk_lower << "," << rc.crk_upper << "] ksat=" << rc.ksat_threshold
       << " (asymptotic correction terms omitted)\n";
  });
  return 0;
}

int cmd_play(const CliOptions& opt) {
  const ExperimentConfig& c = opt.cfg;
  c.validate();
  GameSetup setup = make_setup(c, c.q_min);
  auto waiter = make_waiter(c.waiter_key, setup, derive_seed(c.seed, 0));
  auto client = make_client(c.client_key, setup, derive_seed(c.seed, 1));
  Transcript t =
      play(setup.board_size, setup.family, setup.rules, *waiter, *client, setup.board_desc);
  with_output(c.out, [&](std::ostream& os) { write_transcript(os, t); });
  return 0;
}

int cmd_sweep(const CliOptions& opt) {
  SweepResult r = sweep(opt.cfg);
  with_output(opt.cfg.out, [&](std::ostream& os) { write_sweep(os, r, opt.cfg.format); });
  return 0;
}

int cmd_bisect(const CliOptions& opt) {
  BisectResult r = bisect_threshold(opt.cfg);
  with_output(opt.cfg.out, [&](std::ostream& os) {
    os << "# empirical threshold under " << opt.cfg.waiter_key << " vs "
       << opt.cfg.client_key << " (strategy-pair-relative, not the optimal-play value)\n";
    os << "q* = " << r.q_star << " (rate " << r.rate_at_q_star << " at crossing "
       << opt.cfg.crossing << ")\n";
    for (auto [q, rate] : r.profile) os << "  probe q=" << q << " rate=" << rate << "\n";
  });
  return 0;
}

int cmd_solve(const CliOptions& opt) {
  const ExperimentConfig& c = opt.cfg;
  c.validate();
  GameSetup setup = make_setup(c, c.q_min);
  with_output(c.out, [&](std::ostream& os) {
    os << "instance " << setup.board_desc << " family=" << c.family_key << " ("
       << setup.family.sets.size() << " sets) " << to_string(c.version) << "\n";
    if (c.q_min == c.q_max) {
      ExactSolver solver(setup.board_size, setup.family, setup.rules);
      SolveResult r = solver.solve();
      os << "q=" << c.q_min << " winner="
         << (r.winner == Winner::Client ? "client" : "waiter") << " nodes=" << r.nodes
         << "\n";
      os << "principal offer:";
      for (ElementId e : r.principal_offer) os << " " << e;
      if (r.principal_pick) os << " / pick " << *r.principal_pick;
      os << "\n";
    } else {
      ThresholdResult r = exact_threshold_bias(setup.board_size, setup.family,
                                               setup.rules.kind, c.q_max);
      for (int q = 1; q <= c.q_max; ++q)
        os << "q=" << q << " winner="
           << (r.winners[static_cast<std::size_t>(q - 1)] == Winner::Client ? "client"
                                                                            : "waiter")
           << "\n";
      if (r.flip_q)
        os << "threshold: winner flips at q=" << *r.flip_q << "\n";
      else
        os << "threshold: no flip in range\n";
    }
  });
  return 0;
}

int cmd_baseline(const CliOptions& opt, int m_min, int m_max, int m_step, int sat_cap) {
  const ExperimentConfig& c = opt.cfg;
  BaselineResult r =
      random_baseline(c.game, c.n, c.k, m_min, m_max, m_step, c.reps, c.seed, sat_cap);
  with_output(c.out, [&](std::ostream& os) {
    os << "# baseline game=" << to_string(c.game) << " n=" << c.n << " k=" << c.k
       << " reps=" << c.reps << " seed=" << c.seed << "\n";
    os << "m,fraction\n";
    for (const BaselineRow& row : r.rows) os << row.m << "," << row.fraction << "\n";
    if (r.crossing_m)
      os << "# half-crossing m ~ " << *r.crossing_m << "\n";
    else
      os << "# no half-crossing inside the sampled range\n";
  });
  return 0;
}

int cmd_verify() {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  // Bound evaluators are monotone in n for fixed k. The two formulas built
  // on C(ceil(n/2),k) only grow along same-parity steps (the odd->even step
  // keeps the binomial fixed while the denominator grows), so those are
  // scanned with stride 2.
  bool monotone = true;
  for (int k = 2; k <= 4; ++k)
    for (GameFamilyKind g : {GameFamilyKind::Non2Col, GameFamilyKind::KSat})
      for (GameVersion v : {GameVersion::WC, GameVersion::CW})
        for (BoundSide s : {BoundSide::Below, BoundSide::Above}) {
          int stride = (g == GameFamilyKind::Non2Col && s == BoundSide::Below) ? 2 : 1;
          for (int start = k; start < k + stride; ++start) {
            double prev = theorem_bound(g, v, s, start, k).value;
            for (int n = start + stride; n <= 60; n += stride) {
              double cur = theorem_bound(g, v, s, n, k).value;
              if (cur < prev) monotone = false;
              prev = cur;
            }
          }
        }
  check("theorem bounds monotone in n (k=2..4, n<=60)", monotone);

  bool gaps = true;
  for (int k = 2; k <= 6; ++k)
    if (theorem_gap_factor(GameFamilyKind::KSat, GameVersion::CW, k) !=
        16.0 * k * k * k)
      gaps = false;
  check("clause-game CW gap factor equals 16k^3", gaps);

  bool brackets = true;
  for (int k = 2; k <= 20; ++k) {
    ReferenceConstants rc = reference_constants(k, 3);
    if (!(rc.c2k_lower <= rc.c2k_upper && rc.crk_lower <= rc.crk_upper)) brackets = false;
  }
  check("reference brackets ordered (k=2..20)", brackets);

  // Memoized solver agrees with the plain recursive search.
  bool solver_ok = true;
  for (std::uint64_t i = 0; i < 20 && solver_ok; ++i) {
    std::mt19937_64 rng(derive_seed(99, i));
    int board = 4 + static_cast<int>(rng() % 4);
    SetFamily fam;
    fam.board_size = board;
    fam.source = "explicit";
    int nsets = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < nsets; ++s) {
      std::vector<ElementId> set;
      for (int e = 0; e < board; ++e)
        if (rng() % 3 == 0) set.push_back(e);
      if (set.empty()) set.push_back(static_cast<ElementId>(rng() % board));
      fam.sets.push_back(set);
    }
    for (GameKind kind : {GameKind::WaiterClient, GameKind::ClientWaiter}) {
      GameRules rules{kind, 1};
      ExactSolver solver(board, fam, rules);
      if (solver.solve().winner != solve_unmemoized(board, fam, rules)) solver_ok = false;
    }
  }
  check("memoized solver matches reference search", solver_ok);

  // Identical seeds reproduce a sweep byte-for-byte.
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.k = 2;
  cfg.q_min = 1;
  cfg.q_max = 2;
  cfg.reps = 8;
  cfg.seed = 7;
  std::ostringstream a, b;
  write_sweep(a, sweep(cfg), cfg.format);
  write_sweep(b, sweep(cfg), cfg.format);
  check("sweeps are deterministic per seed", a.str() == b.str());

  std::cout << (failures == 0 ? "verify: all checks passed\n"
                              : "verify: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biased Waiter-Client / Client-Waiter positional game laboratory"};
  app.require_subcommand(1);

  CliOptions opt;
  int m_min = 0, m_max = 0, m_step = 1, sat_cap = 40;

  auto* bounds = app.add_subcommand("bounds", "print the closed-form threshold bounds");
  add_experiment_flags(bounds, opt);
  auto* play_cmd = app.add_subcommand("play", "run one game and print its transcript");
  add_experiment_flags(play_cmd, opt);
  auto* sweep_cmd = app.add_subcommand("sweep", "win-rate sweep over a bias range");
  add_experiment_flags(sweep_cmd, opt);
  auto* bisect_cmd = app.add_subcommand("bisect", "bisect the empirical win-rate crossing");
  add_experiment_flags(bisect_cmd, opt);
  auto* solve_cmd = app.add_subcommand("solve", "exact small-board solve");
  add_experiment_flags(solve_cmd, opt);
  auto* baseline_cmd =
      app.add_subcommand("baseline", "random-subset property-threshold estimate");
  add_experiment_flags(baseline_cmd, opt);
  baseline_cmd->add_option("--m-min", m_min, "smallest sample size")->required();
  baseline_cmd->add_option("--m-max", m_max, "largest sample size")->required();
  baseline_cmd->add_option("--m-step", m_step, "sample-size step");
  baseline_cmd->add_option("--sat-cap", sat_cap, "variable cap for the SAT checker");
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in invariant suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed()) return cmd_bounds(opt);
    if (play_cmd->parsed()) return cmd_play(opt);
    if (sweep_cmd->parsed()) return cmd_sweep(opt);
    if (bisect_cmd->parsed()) return cmd_bisect(opt);
    if (solve_cmd->parsed()) return cmd_solve(opt);
    if (baseline_cmd->parsed()) return cmd_baseline(opt, m_min, m_max, m_step, sat_cap);
    if (verify_cmd->parsed()) return cmd_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
