#include "wcw/families.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wcw/common.hpp"

namespace wcw {

SetFamily clique_family(const HypergraphBoard& board, int m) {
  if (m < board.k() || m > board.n())
    throw std::invalid_argument("clique_family requires k <= m <= n");
  SetFamily fam;
  fam.source = "clique-transversal";
  fam.board_desc = board.describe();
  fam.board_size = static_cast<int>(board.edge_count());
  std::vector<int> vertices(board.n());
  for (int i = 0; i < board.n(); ++i) vertices[i] = i;
  for_each_combination(vertices, m, [&](const std::vector<int>& clique) {
    std::vector<ElementId> set;
    set.reserve(static_cast<std::size_t>(binomial(m, board.k())));
    for_each_combination(clique, board.k(), [&](const std::vector<int>& edge) {
      set.push_back(board.rank_edge(edge));
    });
    std::sort(set.begin(), set.end());
    fam.sets.push_back(std::move(set));
  });
  return fam;
}

SetFamily local_density_family(const HypergraphBoard& board, std::uint64_t max_sets) {
  int n = board.n(), k = board.k();
  if (n > 24) throw CapExceeded("local_density_family: board too large to enumerate");
  // Count before materializing.
  unsigned __int128 total = 0;
  for (int t = 1; t <= n; ++t) {
    int f = (2 * t + k - 1) / k;  // ceil(2t/k)
    std::uint64_t edges_in = binomial(t, k);
    if (f > static_cast<int>(edges_in) || static_cast<std::uint64_t>(f) > edges_in) continue;
    total += static_cast<unsigned __int128>(binomial(n, t)) *
             binomial(static_cast<int>(edges_in), f);
    if (total > max_sets)
      throw CapExceeded("local_density_family: family size exceeds cap");
  }
  SetFamily fam;
  fam.source = "local-density";
  fam.board_desc = board.describe();
  fam.board_size = static_cast<int>(board.edge_count());
  std::vector<int> vertices(n);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  for (int t = 1; t <= n; ++t) {
    int f = (2 * t + k - 1) / k;
    for_each_combination(vertices, t, [&](const std::vector<int>& s) {
      if (t < k) return;
      std::vector<ElementId> inside;
      for_each_combination(s, k, [&](const std::vector<int>& edge) {
        inside.push_back(board.rank_edge(edge));
      });
      if (f > static_cast<int>(inside.size())) return;
      std::sort(inside.begin(), inside.end());
      for_each_combination(inside, f, [&](const std::vector<ElementId>& chosen) {
        fam.sets.push_back(chosen);
      });
    });
  }
  return fam;
}

SetFamily monochromatic_clause_family(const ClauseBoard& board, std::uint64_t max_sets) {
  int n = board.n(), k = board.k();
  if (n > 30) throw CapExceeded("monochromatic_clause_family: board too large");
  std::uint64_t count = std::uint64_t{1} << n;
  if (count > max_sets)
    throw CapExceeded("monochromatic_clause_family: family size exceeds cap");
  SetFamily fam;
  fam.source = "monochromatic-clause";
  fam.board_desc = board.describe();
  fam.board_size = static_cast<int>(board.clause_count());
  std::vector<int> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = i;
  for (std::uint64_t sel = 0; sel < count; ++sel) {
    std::vector<ElementId> set;
    set.reserve(static_cast<std::size_t>(binomial(n, k)));
    for_each_combination(vars, k, [&](const std::vector<int>& vs) {
      std::vector<int> lits(vs.size());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        bool negated = (sel >> vs[i]) & 1;
        lits[i] = negated ? ClauseBoard::negative_literal(vs[i])
                          : ClauseBoard::positive_literal(vs[i]);
      }
      set.push_back(board.encode_clause(lits));
    });
    std::sort(set.begin(), set.end());
    fam.sets.push_back(std::move(set));
  }
  return fam;
}

CriterionValue waiter_wc_criterion(const SetFamily& family, int q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  KahanSum sum;
  for (const auto& a : family.sets)
    sum.add(std::exp2(-static_cast<double>(a.size()) / (2.0 * q - 1.0)));
  return {sum.value(), sum.value() < 0.5};
}

CriterionValue client_cw_criterion(const SetFamily& family, int q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  KahanSum sum;
  double base = static_cast<double>(q) / (q + 1.0);
  for (const auto& a : family.sets)
    sum.add(std::pow(base, static_cast<double>(a.size())));
  return {sum.value(), sum.value() < 1.0};
}

double phi_potential(const SetFamily& family, int q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  KahanSum sum;
  for (const auto& a : family.sets)
    sum.add(std::pow(q + 1.0, -static_cast<double>(a.size())));
  return sum.value();
}

void write_family(std::ostream& os, const SetFamily& family) {
  os << "# wcw-family v1 source=" << family.source << " board_size=" << family.board_size
     << " board=" << family.board_desc << "\n";
  for (const auto& set : family.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) os << (i ? " " : "") << set[i];
    os << "\n";
  }
}

SetFamily read_family(std::istream& is) {
  SetFamily fam;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# wcw-family v1", 0) != 0)
    throw std::runtime_error("missing wcw-family header");
  {
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("source=", 0) == 0) fam.source = tok.substr(7);
      if (tok.rfind("board_size=", 0) == 0) fam.board_size = std::stoi(tok.substr(11));
      if (tok.rfind("board=", 0) == 0) {
        fam.board_desc = tok.substr(6);
        std::string rest;
        std::getline(hs, rest);
        fam.board_desc += rest;
      }
    }
  }
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<ElementId> set;
    ElementId e;
    while (ls >> e) set.push_back(e);
    fam.sets.push_back(std::move(set));
  }
  return fam;
}

}  // namespace wcw
