#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wcw/harness.hpp"

using namespace wcw;

TEST_CASE("closed-form bound spot checks") {
  CHECK(theorem_bound(GameFamilyKind::KSat, GameVersion::CW, BoundSide::Below, 10, 2).value ==
        doctest::Approx(4.5));
  CHECK(theorem_bound(GameFamilyKind::KSat, GameVersion::WC, BoundSide::Below, 10, 2).value ==
        doctest::Approx(2.25));
  double ln2 = std::log(2.0);
  CHECK(theorem_bound(GameFamilyKind::Non2Col, GameVersion::CW, BoundSide::Below, 10, 2).value ==
        doctest::Approx(10.0 * ln2 / ((1.0 + ln2) * 10.0)));
  CHECK(theorem_bound(GameFamilyKind::KSat, GameVersion::CW, BoundSide::Above, 10, 2).value ==
        doctest::Approx(16.0 * 8.0 * 45.0 / 10.0));
  CHECK_THROWS(theorem_bound(GameFamilyKind::KSat, GameVersion::CW, BoundSide::Below, 3, 4));
}

TEST_CASE("gap factors") {
  CHECK(theorem_gap_factor(GameFamilyKind::KSat, GameVersion::CW, 3) == doctest::Approx(432.0));
  for (int k = 2; k <= 8; ++k)
    CHECK(theorem_gap_factor(GameFamilyKind::KSat, GameVersion::CW, k) ==
          16.0 * k * k * k);
}

TEST_CASE("bounds are monotone in n, minding the half-ceiling parity") {
  for (int k = 2; k <= 4; ++k)
    for (GameFamilyKind g : {GameFamilyKind::Non2Col, GameFamilyKind::KSat})
      for (GameVersion v : {GameVersion::WC, GameVersion::CW})
        for (BoundSide s : {BoundSide::Below, BoundSide::Above}) {
          int stride = (g == GameFamilyKind::Non2Col && s == BoundSide::Below) ? 2 : 1;
          for (int start = k; start < k + stride; ++start) {
            double prev = theorem_bound(g, v, s, start, k).value;
            for (int n = start + stride; n <= 200; n += stride) {
              double cur = theorem_bound(g, v, s, n, k).value;
              CHECK(cur >= prev);
              prev = cur;
            }
          }
        }
}

TEST_CASE("the one-sided colorability lower bound trails the other version's") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k; n <= 100; ++n)
      CHECK(theorem_bound(GameFamilyKind::Non2Col, GameVersion::WC, BoundSide::Below, n, k).value <
            theorem_bound(GameFamilyKind::Non2Col, GameVersion::CW, BoundSide::Below, n, k).value);
}

TEST_CASE("reference constants") {
  ReferenceConstants c2 = reference_constants(2, 3);
  CHECK(c2.c2k_upper == doctest::Approx(1.5 * std::log(2.0)));
  CHECK(c2.ksat_threshold == doctest::Approx(4.0 * std::log(2.0) - (1.0 + std::log(2.0)) / 2.0));
  CHECK(c2.ksat_threshold == doctest::Approx(1.9260).epsilon(1e-3));
  for (int k = 2; k <= 20; ++k) {
    ReferenceConstants c = reference_constants(k, 3);
    CHECK(c.c2k_lower <= c.c2k_upper);
    CHECK(c.crk_lower <= c.crk_upper);
  }
}

TEST_CASE("setup resolves boards and families from config keys") {
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.k = 2;
  GameSetup s = make_setup(cfg, 1);
  CHECK(s.board_size == 10);
  CHECK(s.family.sets.size() == 10);  // 3-cliques of the 5-vertex board

  cfg.family_key = "clique:4";
  CHECK(make_setup(cfg, 1).family.sets.size() == 5);

  cfg.game = GameFamilyKind::KSat;
  cfg.family_key = "mono-clause";
  GameSetup ks = make_setup(cfg, 1);
  CHECK(ks.board_size == 40);
  CHECK(ks.family.sets.size() == 32);

  cfg.family_key = "clique";
  CHECK_THROWS(make_setup(cfg, 1));  // clique family needs a hypergraph board
}

TEST_CASE("strategy factories resolve every documented key") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.k = 2;
  GameSetup s = make_setup(cfg, 1);
  for (const char* key : {"random", "wc-waiter-potential", "cw-waiter-batch", "best-response"})
    CHECK(make_waiter(key, s, 1) != nullptr);
  for (const char* key : {"random", "wc-client-potential", "cw-client-potential",
                          "greedy-degree", "best-response"})
    CHECK(make_client(key, s, 1) != nullptr);
  CHECK_THROWS(make_waiter("nope", s, 1));
  CHECK_THROWS(make_client("nope", s, 1));
}

TEST_CASE("an empty sweep still carries its header") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.k = 2;
  cfg.reps = 0;
  SweepResult r = sweep(cfg);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].games == 0);
  std::ostringstream os;
  write_sweep(os, r, "csv");
  CHECK(os.str().rfind("# wcw", 0) == 0);
}

TEST_CASE("uniform random play splits the board evenly") {
  ExperimentConfig cfg;
  cfg.n = 4;  // 6 edges; q=2 gives 6/3 = 2 picks per game
  cfg.k = 2;
  cfg.q_min = cfg.q_max = 2;
  cfg.reps = 12;
  SweepResult r = sweep(cfg);
  CHECK(r.rows[0].mean_client_elements == doctest::Approx(2.0));
}

TEST_CASE("sweeps reproduce byte-for-byte under one seed") {
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.k = 2;
  cfg.q_min = 1;
  cfg.q_max = 3;
  cfg.reps = 10;
  cfg.seed = 99;
  cfg.client_key = "wc-client-potential";
  std::ostringstream a, b;
  write_sweep(a, sweep(cfg), "csv");
  write_sweep(b, sweep(cfg), "csv");
  CHECK(a.str() == b.str());
  CHECK(a.str().find("seed=99") != std::string::npos);

  cfg.seed = 100;
  std::ostringstream c;
  write_sweep(c, sweep(cfg), "csv");
  CHECK(a.str() != c.str());
}

TEST_CASE("degenerate bisection bracket returns its only point") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.k = 2;
  cfg.q_min = cfg.q_max = 2;
  cfg.reps = 6;
  BisectResult r = bisect_threshold(cfg);
  CHECK(r.q_star == 2);
}

TEST_CASE("bisection pins a strategy-independent jump") {
  // Four singleton winning sets on four elements: the offering side wins
  // every full-round game and loses once the short round eats the board, so
  // the win rate jumps 0 -> 1 at q = 4 regardless of strategy.
  std::string path = "/tmp/wcw-test-singletons.family";
  {
    std::ofstream out(path);
    SetFamily f;
    f.source = "explicit";
    f.board_size = 4;
    f.board_desc = "explicit size=4";
    f.sets = {{0}, {1}, {2}, {3}};
    write_family(out, f);
  }
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.k = 2;
  cfg.family_key = path;
  cfg.q_min = 1;
  cfg.q_max = 6;
  cfg.reps = 8;
  BisectResult r = bisect_threshold(cfg);
  CHECK(r.q_star == 4);
  CHECK(r.rate_at_q_star == doctest::Approx(1.0));
  std::remove(path.c_str());
}

TEST_CASE("bisection refuses a bracket with no crossing") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.k = 2;
  cfg.family_key = "clique:2";  // singleton edge-sets: picker always loses small q
  cfg.q_min = 1;
  cfg.q_max = 2;
  cfg.reps = 10;
  cfg.waiter_key = "wc-waiter-potential";
  CHECK_THROWS(bisect_threshold(cfg));
}

TEST_CASE("random baseline reaches certainty at full board") {
  // All four width-2 clauses over two variables are jointly unsatisfiable.
  BaselineResult r = random_baseline(GameFamilyKind::KSat, 2, 2, 4, 4, 1, 10, 5);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].fraction == doctest::Approx(1.0));
  REQUIRE(r.crossing_m.has_value());
  CHECK(*r.crossing_m == doctest::Approx(4.0));
}

TEST_CASE("baseline fractions grow with the sample size") {
  BaselineResult r = random_baseline(GameFamilyKind::KSat, 4, 2, 4, 24, 4, 60, 11);
  // Monotone up to sampling noise: allow small dips.
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    CHECK(r.rows[i].fraction >= r.rows[i - 1].fraction - 0.15);
  CHECK(r.rows.back().fraction == doctest::Approx(1.0));
}

TEST_CASE("config files load with flag-style keys") {
  std::string path = "/tmp/wcw-test-config.cfg";
  {
    std::ofstream out(path);
    out << "# experiment\n";
    out << "game = ksat\n";
    out << "version=cw\n";
    out << "n = 8\n";
    out << "k = 3\n";
    out << "q-min = 2\n";
    out << "q-max = 5\n";
    out << "reps = 40\n";
    out << "seed = 1234\n";
    out << "family = mono-clause\n";
  }
  ExperimentConfig cfg = load_config_file(path);
  CHECK(cfg.game == GameFamilyKind::KSat);
  CHECK(cfg.version == GameVersion::CW);
  CHECK(cfg.n == 8);
  CHECK(cfg.k == 3);
  CHECK(cfg.q_min == 2);
  CHECK(cfg.q_max == 5);
  CHECK(cfg.reps == 40);
  CHECK(cfg.seed == 1234);
  CHECK(cfg.family_key == "mono-clause");
  std::remove(path.c_str());

  std::string bad = "/tmp/wcw-test-config-bad.cfg";
  {
    std::ofstream out(bad);
    out << "mystery = 1\n";
  }
  CHECK_THROWS(load_config_file(bad));
  std::remove(bad.c_str());
}

TEST_CASE("config validation rejects nonsense") {
  ExperimentConfig cfg;
  cfg.n = 2;
  cfg.k = 3;
  CHECK_THROWS(cfg.validate());
  cfg = ExperimentConfig{};
  cfg.q_min = 3;
  cfg.q_max = 1;
  CHECK_THROWS(cfg.validate());
  cfg = ExperimentConfig{};
  cfg.format = "xml";
  CHECK_THROWS(cfg.validate());
}
