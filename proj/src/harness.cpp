#include "wcw/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wcw/analyzers.hpp"
#include "wcw/common.hpp"
#include "wcw/solver.hpp"

namespace wcw {

namespace {
constexpr const char* kToolVersion = "wcw 1.0";
const double kLn2 = std::log(2.0);
}  // namespace

std::string to_string(GameFamilyKind g) {
  return g == GameFamilyKind::Non2Col ? "non2col" : "ksat";
}
std::string to_string(GameVersion v) { return v == GameVersion::WC ? "wc" : "cw"; }

TheoremBound theorem_bound(GameFamilyKind game, GameVersion version, BoundSide side,
                           int n, int k) {
  if (k < 2 || n < k) throw std::invalid_argument("theorem_bound requires n >= k >= 2");
  TheoremBound b{game, version, side, "", 0.0};
  double n_d = n;
  double cnk = static_cast<double>(binomial(n, k));
  double chalf = static_cast<double>(binomial((n + 1) / 2, k));
  if (game == GameFamilyKind::Non2Col && version == GameVersion::WC) {
    if (side == BoundSide::Below) {
      b.formula = "C(ceil(n/2),k)*ln2 / (2*((1+ln2)*n + ln2))";
      b.value = chalf * kLn2 / (2.0 * ((1.0 + kLn2) * n_d + kLn2));
    } else {
      b.formula = "2^(k/2)*e^(k/2+1)*k*C(n,k)/n";
      b.value = std::exp2(k / 2.0) * std::exp(k / 2.0 + 1.0) * k * cnk / n_d;
    }
  } else if (game == GameFamilyKind::Non2Col && version == GameVersion::CW) {
    if (side == BoundSide::Below) {
      b.formula = "C(ceil(n/2),k)*ln2 / ((1+ln2)*n)";
      b.value = chalf * kLn2 / ((1.0 + kLn2) * n_d);
    } else {
      b.formula = "k^3*2^(-k+5)*C(n,k)/n";
      b.value = std::pow(static_cast<double>(k), 3) * std::exp2(5 - k) * cnk / n_d;
    }
  } else if (game == GameFamilyKind::KSat && version == GameVersion::WC) {
    if (side == BoundSide::Below) {
      b.formula = "C(n,k)/(2n)";
      b.value = cnk / (2.0 * n_d);
    } else {
      b.formula = "2^(3k/2)*e^(k/2+1)*k*C(n,k)/n";
      b.value = std::exp2(3.0 * k / 2.0) * std::exp(k / 2.0 + 1.0) * k * cnk / n_d;
    }
  } else {  // KSat, CW
    if (side == BoundSide::Below) {
      b.formula = "C(n,k)/n (strict <)";
      b.value = cnk / n_d;
    } else {
      b.formula = "16*k^3*C(n,k)/n";
      b.value = 16.0 * std::pow(static_cast<double>(k), 3) * cnk / n_d;
    }
  }
  return b;
}

double theorem_gap_factor(GameFamilyKind game, GameVersion version, int k) {
  double k_d = k;
  if (game == GameFamilyKind::Non2Col && version == GameVersion::WC)
    return (1.0 + 1.0 / kLn2) * k_d * std::exp2(3.0 * k / 2.0 + 1.0) * std::exp(k / 2.0 + 1.0);
  if (game == GameFamilyKind::Non2Col && version == GameVersion::CW)
    return (1.0 + 1.0 / kLn2) * 32.0 * k_d * k_d * k_d;
  if (game == GameFamilyKind::KSat && version == GameVersion::WC)
    return k_d * std::exp2(3.0 * k / 2.0 + 1.0) * std::exp(k / 2.0 + 1.0);
  return 16.0 * k_d * k_d * k_d;
}

ReferenceConstants reference_constants(int k, int r) {
  if (k < 2 || r < 2) throw std::invalid_argument("reference_constants requires k,r >= 2");
  ReferenceConstants c;
  double p = std::exp2(k - 1);
  c.c2k_upper = p * kLn2 - kLn2 / 2.0;
  // Lower bound with the additive improvement; the epsilon slack is taken to
  // its limit (epsilon -> 0).
  c.c2k_lower = p * kLn2 - kLn2 / 2.0 - 0.5 + (1.0 - kLn2) / 2.0;
  c.crk_lower = std::pow(static_cast<double>(r - 1), k - 1) * std::log(static_cast<double>(r - 1));
  c.crk_upper = (std::pow(static_cast<double>(r), k - 1) - 0.5) * std::log(static_cast<double>(r));
  c.ksat_threshold = std::exp2(k) * kLn2 - (1.0 + kLn2) / 2.0;
  return c;
}

void ExperimentConfig::validate() const {
  if (k < 2 || n < k) throw std::invalid_argument("config: need n >= k >= 2");
  if (q_min < 1 || q_max < q_min) throw std::invalid_argument("config: need 1 <= q_min <= q_max");
  if (reps < 0) throw std::invalid_argument("config: reps must be >= 0");
  if (format != "csv" && format != "text") throw std::invalid_argument("config: format must be csv or text");
  if (!(crossing > 0.0 && crossing < 1.0)) throw std::invalid_argument("config: crossing must be in (0,1)");
}

GameSetup make_setup(const ExperimentConfig& config, int q) {
  GameSetup setup;
  setup.rules.kind = config.version == GameVersion::WC ? GameKind::WaiterClient
                                                       : GameKind::ClientWaiter;
  setup.rules.q = q;
  const std::string& fkey = config.family_key;
  bool from_file = fkey.rfind("clique", 0) != 0 && fkey != "local-density" &&
                   fkey != "mono-clause";
  if (from_file) {
    // Explicit family files carry their own board; n and k are ignored.
    std::ifstream in(fkey);
    if (!in) throw std::invalid_argument("cannot open family file: " + fkey);
    setup.family = read_family(in);
    setup.board_size = setup.family.board_size;
    setup.board_desc = setup.family.board_desc;
    if (setup.board_size <= 0)
      throw std::invalid_argument("family file lacks a board size: " + fkey);
    return setup;
  }
  if (config.game == GameFamilyKind::Non2Col) {
    setup.hboard.emplace(config.n, config.k);
    setup.board_size = static_cast<int>(setup.hboard->edge_count());
    setup.board_desc = setup.hboard->describe();
  } else {
    setup.cboard.emplace(config.n, config.k);
    setup.board_size = static_cast<int>(setup.cboard->clause_count());
    setup.board_desc = setup.cboard->describe();
  }
  if (fkey.rfind("clique", 0) == 0) {
    if (!setup.hboard) throw std::invalid_argument("clique family requires a hypergraph board");
    int m = (config.n + 1) / 2;
    if (fkey.size() > 7 && fkey[6] == ':') m = std::stoi(fkey.substr(7));
    setup.family = clique_family(*setup.hboard, m);
  } else if (fkey == "local-density") {
    if (!setup.hboard) throw std::invalid_argument("local-density family requires a hypergraph board");
    setup.family = local_density_family(*setup.hboard);
  } else {
    if (!setup.cboard) throw std::invalid_argument("mono-clause family requires a clause board");
    setup.family = monochromatic_clause_family(*setup.cboard);
  }
  return setup;
}

namespace {

AnchorIncidence setup_incidence(const GameSetup& setup) {
  if (setup.hboard) return AnchorIncidence::from(*setup.hboard);
  if (setup.cboard) return AnchorIncidence::from(*setup.cboard);
  throw std::invalid_argument("strategy requires a board with anchors");
}

// Best-response strategies bundled with the solver they consult.
class SolverWaiter : public WaiterStrategy {
 public:
  SolverWaiter(const GameSetup& setup)
      : solver_(setup.board_size, setup.family, setup.rules), inner_(solver_) {}
  std::vector<ElementId> offer(const GameState& state, const GameRules& rules) override {
    return inner_.offer(state, rules);
  }

 private:
  ExactSolver solver_;
  BestResponseWaiter inner_;
};

class SolverClient : public ClientStrategy {
 public:
  SolverClient(const GameSetup& setup)
      : solver_(setup.board_size, setup.family, setup.rules), inner_(solver_) {}
  ElementId pick(const std::vector<ElementId>& offer, const GameState& state,
                 const GameRules& rules) override {
    return inner_.pick(offer, state, rules);
  }

 private:
  ExactSolver solver_;
  BestResponseClient inner_;
};

}  // namespace

std::unique_ptr<WaiterStrategy> make_waiter(const std::string& key, const GameSetup& setup,
                                            std::uint64_t seed) {
  if (key == "random") return std::make_unique<RandomWaiter>(seed);
  if (key == "wc-waiter-potential")
    return std::make_unique<WcWaiterPotential>(setup.family, setup.rules.q);
  if (key == "cw-waiter-batch")
    return std::make_unique<CwWaiterBatchOffer>(setup_incidence(setup));
  if (key == "best-response") return std::make_unique<SolverWaiter>(setup);
  throw std::invalid_argument("unknown waiter strategy: " + key);
}

std::unique_ptr<ClientStrategy> make_client(const std::string& key, const GameSetup& setup,
                                            std::uint64_t seed) {
  if (key == "random") return std::make_unique<RandomClient>(seed);
  if (key == "wc-client-potential")
    return std::make_unique<WcClientPotential>(setup.family, setup.rules.q);
  if (key == "cw-client-potential")
    return std::make_unique<CwClientPotential>(setup.family, setup.rules.q);
  if (key == "greedy-degree")
    return std::make_unique<GreedyDegreeClient>(setup_incidence(setup));
  if (key == "best-response") return std::make_unique<SolverClient>(setup);
  throw std::invalid_argument("unknown client strategy: " + key);
}

namespace {

struct GameSummary {
  Winner winner = Winner::Client;
  int rounds = 0;
  int client_elements = 0;
  double final_potential = std::numeric_limits<double>::quiet_NaN();
  int max_anchor_degree = -1;
};

GameSummary run_one_game(const ExperimentConfig& config, int q, std::uint64_t game_seed) {
  GameSetup setup = make_setup(config, q);
  auto waiter = make_waiter(config.waiter_key, setup, splitmix64(game_seed));
  auto client = make_client(config.client_key, setup, splitmix64(game_seed ^ 0x5a5a5a5aULL));
  Transcript t = play(setup.board_size, setup.family, setup.rules, *waiter, *client,
                      setup.board_desc);
  GameSummary s;
  s.winner = t.outcome.winner;
  s.rounds = static_cast<int>(t.rounds.size());
  s.client_elements = static_cast<int>(t.client_elements.size());
  if (!t.rounds.empty()) {
    const RoundRecord& last = t.rounds.back();
    s.final_potential = !std::isnan(last.client_diag) ? last.client_diag : last.waiter_diag;
  }
  if (setup.hboard || setup.cboard) {
    AnchorIncidence inc = setup_incidence(setup);
    std::vector<int> deg(inc.anchor_count, 0);
    for (ElementId e : t.client_elements)
      for (int a : inc.anchors_of.at(e)) ++deg[a];
    s.max_anchor_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }
  return s;
}

std::string sweep_header(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "# " << kToolVersion << " sweep game=" << to_string(c.game)
     << " version=" << to_string(c.version) << " n=" << c.n << " k=" << c.k
     << " q=" << c.q_min << ".." << c.q_max << " family=" << c.family_key
     << " waiter=" << c.waiter_key << " client=" << c.client_key << " reps=" << c.reps
     << " seed=" << c.seed;
  return os.str();
}

}  // namespace

SweepResult sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult result;
  result.header = sweep_header(config);
  for (int q = config.q_min; q <= config.q_max; ++q) {
    std::uint64_t base_index =
        static_cast<std::uint64_t>(q - config.q_min) * static_cast<std::uint64_t>(config.reps);
    std::vector<GameSummary> games = parallel_map<GameSummary>(
        static_cast<std::size_t>(config.reps), [&](std::size_t i) {
          return run_one_game(config, q, derive_seed(config.seed, base_index + i));
        });
    SweepRow row;
    row.q = q;
    row.games = config.reps;
    KahanSum rounds, elements, potential;
    int with_potential = 0;
    for (const GameSummary& g : games) {
      if (g.winner == Winner::Client)
        ++row.client_wins;
      else
        ++row.waiter_wins;
      rounds.add(g.rounds);
      elements.add(g.client_elements);
      if (!std::isnan(g.final_potential)) {
        potential.add(g.final_potential);
        ++with_potential;
      }
      row.max_client_anchor_degree = std::max(row.max_client_anchor_degree, g.max_anchor_degree);
    }
    if (config.reps > 0) {
      row.client_win_rate = static_cast<double>(row.client_wins) / config.reps;
      row.mean_rounds = rounds.value() / config.reps;
      row.mean_client_elements = elements.value() / config.reps;
    }
    row.mean_final_potential = with_potential > 0
                                   ? potential.value() / with_potential
                                   : std::numeric_limits<double>::quiet_NaN();
    result.rows.push_back(row);
  }
  return result;
}

void write_sweep(std::ostream& os, const SweepResult& result, const std::string& format) {
  auto fmt = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf);
  };
  os << result.header << "\n";
  const char* sep = format == "text" ? "\t" : ",";
  os << "q" << sep << "games" << sep << "client_wins" << sep << "waiter_wins" << sep
     << "client_win_rate" << sep << "mean_rounds" << sep << "mean_client_elements" << sep
     << "mean_final_potential" << sep << "max_client_anchor_degree\n";
  for (const SweepRow& r : result.rows) {
    os << r.q << sep << r.games << sep << r.client_wins << sep << r.waiter_wins << sep
       << fmt(r.client_win_rate) << sep << fmt(r.mean_rounds) << sep
       << fmt(r.mean_client_elements) << sep << fmt(r.mean_final_potential) << sep
       << r.max_client_anchor_degree << "\n";
  }
}

namespace {

double measure_rate(const ExperimentConfig& config, int q,
                    std::vector<std::pair<int, double>>& profile) {
  ExperimentConfig probe = config;
  probe.q_min = probe.q_max = q;
  SweepResult r = sweep(probe);
  const SweepRow& row = r.rows.front();
  // The side that benefits from larger q: Client in WC, Waiter in CW.
  double rate = config.version == GameVersion::WC
                    ? row.client_win_rate
                    : 1.0 - row.client_win_rate;
  profile.emplace_back(q, rate);
  return rate;
}

}  // namespace

BisectResult bisect_threshold(const ExperimentConfig& config) {
  config.validate();
  BisectResult result;
  int lo = config.q_min, hi = config.q_max;
  double rate_lo = measure_rate(config, lo, result.profile);
  if (lo == hi) {
    result.q_star = lo;
    result.rate_at_q_star = rate_lo;
    return result;
  }
  if (rate_lo >= config.crossing) {
    result.q_star = lo;
    result.rate_at_q_star = rate_lo;
    return result;
  }
  double rate_hi = measure_rate(config, hi, result.profile);
  if (rate_hi < config.crossing) {
    std::ostringstream os;
    os << "empirical win-rate profile does not cross " << config.crossing
       << " inside the bracket:";
    for (auto [q, rate] : result.profile) os << " q=" << q << ":" << rate;
    throw std::runtime_error(os.str());
  }
  // Invariant: rate(lo) < crossing <= rate(hi).
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    double rate_mid = measure_rate(config, mid, result.profile);
    if (rate_mid >= config.crossing) {
      hi = mid;
      rate_hi = rate_mid;
    } else {
      lo = mid;
    }
  }
  result.q_star = hi;
  result.rate_at_q_star = rate_hi;
  std::sort(result.profile.begin(), result.profile.end());
  return result;
}

BaselineResult random_baseline(GameFamilyKind game, int n, int k, int m_min, int m_max,
                               int m_step, int reps, std::uint64_t seed, int sat_cap) {
  if (m_step < 1 || m_min < 0 || m_max < m_min) throw std::invalid_argument("bad m range");
  std::int64_t board_count;
  std::optional<HypergraphBoard> hboard;
  std::optional<ClauseBoard> cboard;
  if (game == GameFamilyKind::Non2Col) {
    hboard.emplace(n, k);
    board_count = hboard->edge_count();
  } else {
    cboard.emplace(n, k);
    board_count = cboard->clause_count();
  }
  if (m_max > board_count) throw std::invalid_argument("m exceeds board size");
  BaselineResult result;
  std::uint64_t task = 0;
  for (int m = m_min; m <= m_max; m += m_step) {
    std::uint64_t base = task;
    task += static_cast<std::uint64_t>(reps);
    std::vector<char> hits = parallel_map<char>(
        static_cast<std::size_t>(reps), [&](std::size_t i) -> char {
          std::mt19937_64 rng(derive_seed(seed, base + i));
          // Sample m distinct element ids.
          std::vector<ElementId> ids(static_cast<std::size_t>(board_count));
          for (std::int64_t e = 0; e < board_count; ++e) ids[static_cast<std::size_t>(e)] = static_cast<ElementId>(e);
          for (int j = 0; j < m; ++j) {
            std::uniform_int_distribution<std::size_t> d(j, ids.size() - 1);
            std::swap(ids[j], ids[d(rng)]);
          }
          ids.resize(m);
          if (hboard) {
            Hypergraph h = Hypergraph::from_board(*hboard, ids);
            return !is_r_colorable(h, 2).colorable;
          }
          ClauseSet c = ClauseSet::from_board(*cboard, ids);
          return !is_satisfiable(c, sat_cap).satisfiable;
        });
    BaselineRow row;
    row.m = m;
    int count = 0;
    for (char h : hits) count += h;
    row.fraction = reps > 0 ? static_cast<double>(count) / reps : 0.0;
    result.rows.push_back(row);
  }
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    double f0 = result.rows[i - 1].fraction, f1 = result.rows[i].fraction;
    if (f0 < 0.5 && f1 >= 0.5) {
      double span = f1 - f0;
      double frac = span > 0 ? (0.5 - f0) / span : 1.0;
      result.crossing_m = result.rows[i - 1].m + frac * (result.rows[i].m - result.rows[i - 1].m);
      break;
    }
  }
  if (!result.crossing_m && !result.rows.empty() && result.rows.front().fraction >= 0.5)
    result.crossing_m = result.rows.front().m;
  return result;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trimmed.substr(0, eq), value = trimmed.substr(eq + 1);
    if (key == "game")
      base.game = value == "ksat" ? GameFamilyKind::KSat : GameFamilyKind::Non2Col;
    else if (key == "version")
      base.version = value == "cw" ? GameVersion::CW : GameVersion::WC;
    else if (key == "n") base.n = std::stoi(value);
    else if (key == "k") base.k = std::stoi(value);
    else if (key == "q") base.q_min = base.q_max = std::stoi(value);
    else if (key == "q-min") base.q_min = std::stoi(value);
    else if (key == "q-max") base.q_max = std::stoi(value);
    else if (key == "family") base.family_key = value;
    else if (key == "waiter") base.waiter_key = value;
    else if (key == "client") base.client_key = value;
    else if (key == "reps") base.reps = std::stoi(value);
    else if (key == "seed") base.seed = std::stoull(value);
    else if (key == "out") base.out = value;
    else if (key == "format") base.format = value;
    else if (key == "crossing") base.crossing = std::stod(value);
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
  }
  return base;
}

}  // namespace wcw
