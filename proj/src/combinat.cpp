#include "wcw/combinat.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wcw {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

// Colex rank of a sorted k-subset: sum of C(s_i, i+1).
std::int64_t colex_rank(const std::vector<int>& sorted) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    r += static_cast<std::int64_t>(binomial(sorted[i], static_cast<int>(i) + 1));
  return r;
}

std::vector<int> colex_unrank(std::int64_t rank, int k) {
  std::vector<int> out(k);
  for (int i = k; i >= 1; --i) {
    int v = i - 1;
    while (static_cast<std::int64_t>(binomial(v + 1, i)) <= rank) ++v;
    out[i - 1] = v;
    rank -= static_cast<std::int64_t>(binomial(v, i));
  }
  return out;
}

}  // namespace

HypergraphBoard::HypergraphBoard(int n, int k) : n_(n), k_(k) {
  if (k < 2 || k > n)
    throw std::invalid_argument("HypergraphBoard requires 2 <= k <= n");
  edge_count_ = static_cast<std::int64_t>(binomial(n, k));
}

ElementId HypergraphBoard::rank_edge(const std::vector<int>& vertices) const {
  if (static_cast<int>(vertices.size()) != k_)
    throw std::invalid_argument("edge must have exactly k vertices");
  std::vector<int> s(vertices);
  std::sort(s.begin(), s.end());
  for (int i = 0; i < k_; ++i) {
    if (s[i] < 0 || s[i] >= n_) throw std::invalid_argument("vertex out of range");
    if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("repeated vertex");
  }
  return static_cast<ElementId>(colex_rank(s));
}

std::vector<int> HypergraphBoard::unrank_edge(ElementId id) const {
  if (id < 0 || id >= edge_count_) throw std::invalid_argument("edge id out of range");
  return colex_unrank(id, k_);
}

std::vector<ElementId> HypergraphBoard::edges_at_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  std::vector<int> others;
  others.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) others.push_back(u);
  std::vector<ElementId> out;
  out.reserve(static_cast<std::size_t>(binomial(n_ - 1, k_ - 1)));
  for_each_combination(others, k_ - 1, [&](const std::vector<int>& rest) {
    std::vector<int> edge(rest);
    edge.push_back(v);
    out.push_back(rank_edge(edge));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string HypergraphBoard::describe() const {
  std::ostringstream os;
  os << "hypergraph n=" << n_ << " k=" << k_;
  return os.str();
}

ClauseBoard::ClauseBoard(int n, int k) : n_(n), k_(k), varsets_(n, k) {
  if (k < 2 || k > n)
    throw std::invalid_argument("ClauseBoard requires 2 <= k <= n");
  std::int64_t vs = varsets_.edge_count();
  if (k >= 62 || vs > (std::numeric_limits<std::int64_t>::max() >> k))
    throw std::overflow_error("clause count overflows");
  clause_count_ = vs << k;
}

ElementId ClauseBoard::encode_clause(const std::vector<int>& literals) const {
  if (static_cast<int>(literals.size()) != k_)
    throw std::invalid_argument("clause must have exactly k literals");
  std::vector<int> lits(literals);
  std::sort(lits.begin(), lits.end(),
            [](int a, int b) { return literal_variable(a) < literal_variable(b); });
  std::vector<int> vars(k_);
  int signs = 0;
  for (int i = 0; i < k_; ++i) {
    int v = literal_variable(lits[i]);
    if (lits[i] < 0 || v >= n_) throw std::invalid_argument("literal out of range");
    if (i > 0 && v == vars[i - 1])
      throw std::invalid_argument("complementary or repeated variable in clause");
    vars[i] = v;
    if (literal_negated(lits[i])) signs |= 1 << i;
  }
  std::int64_t vr = varsets_.rank_edge(vars);
  return static_cast<ElementId>((vr << k_) | signs);
}

std::vector<int> ClauseBoard::decode_clause(ElementId id) const {
  if (id < 0 || id >= clause_count_) throw std::invalid_argument("clause id out of range");
  std::int64_t vr = id >> k_;
  int signs = id & ((1 << k_) - 1);
  std::vector<int> vars = varsets_.unrank_edge(static_cast<ElementId>(vr));
  std::vector<int> lits(k_);
  for (int i = 0; i < k_; ++i)
    lits[i] = (signs >> i) & 1 ? negative_literal(vars[i]) : positive_literal(vars[i]);
  return lits;
}

std::vector<ElementId> ClauseBoard::clauses_with_block(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("block index out of range");
  std::vector<ElementId> out;
  for (ElementId e : varsets_.edges_at_vertex(i)) {
    std::int64_t base = static_cast<std::int64_t>(e) << k_;
    for (int s = 0; s < (1 << k_); ++s) out.push_back(static_cast<ElementId>(base | s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ClauseBoard::describe() const {
  std::ostringstream os;
  os << "clauses n=" << n_ << " k=" << k_;
  return os.str();
}

OwnedSets::OwnedSets(int board_size) : owner_(static_cast<std::size_t>(board_size), Owner::Free) {
  if (board_size < 0) throw std::invalid_argument("negative board size");
  counts_[0] = board_size;
  counts_[1] = counts_[2] = 0;
}

void OwnedSets::claim(ElementId e, Owner who) {
  if (who == Owner::Free) throw std::invalid_argument("cannot claim for Free");
  Owner& slot = owner_.at(static_cast<std::size_t>(e));
  if (slot != Owner::Free) throw std::invalid_argument("element already claimed");
  slot = who;
  --counts_[0];
  ++counts_[static_cast<int>(who)];
}

std::vector<ElementId> OwnedSets::elements_of(Owner who) const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < owner_.size(); ++i)
    if (owner_[i] == who) out.push_back(static_cast<ElementId>(i));
  return out;
}

}  // namespace wcw
