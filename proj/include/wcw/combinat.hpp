#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wcw {

using ElementId = int;

// C(n, k) in 64 bits; throws std::overflow_error if the value does not fit.
std::uint64_t binomial(int n, int k);

// Visits all k-subsets of items in lexicographic order over positions.
template <typename T, typename Fn>
void for_each_combination(const std::vector<T>& items, int k, Fn&& fn) {
  int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> combo(k);
  for (;;) {
    for (int i = 0; i < k; ++i) combo[i] = items[idx[i]];
    fn(const_cast<const std::vector<T>&>(combo));
    if (k == 0) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Complete k-uniform hypergraph on [n]: edges are k-subsets of {0..n-1},
// indexed 0..C(n,k)-1 in colexicographic order (combinatorial number system).
class HypergraphBoard {
 public:
  HypergraphBoard(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::int64_t edge_count() const { return edge_count_; }

  ElementId rank_edge(const std::vector<int>& vertices) const;
  std::vector<int> unrank_edge(ElementId id) const;  // sorted ascending
  std::vector<ElementId> edges_at_vertex(int v) const;

  std::string describe() const;

 private:
  int n_, k_;
  std::int64_t edge_count_;
};

// All 2^k * C(n,k) k-clauses over n boolean variables. Literal id 2i stands
// for x_{i+1}, 2i+1 for !x_{i+1}. Clause id = colex rank of the variable set
// times 2^k plus the sign pattern (bit i set iff the i-th variable in sorted
// order appears negated).
class ClauseBoard {
 public:
  ClauseBoard(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::int64_t clause_count() const { return clause_count_; }

  ElementId encode_clause(const std::vector<int>& literals) const;
  std::vector<int> decode_clause(ElementId id) const;  // sorted by variable
  std::vector<ElementId> clauses_with_block(int i) const;

  static int positive_literal(int var) { return 2 * var; }
  static int negative_literal(int var) { return 2 * var + 1; }
  static int literal_variable(int lit) { return lit >> 1; }
  static bool literal_negated(int lit) { return (lit & 1) != 0; }

  std::string describe() const;

 private:
  int n_, k_;
  std::int64_t clause_count_;
  HypergraphBoard varsets_;  // variable-set indexing shares the edge ranking
};

enum class Owner : std::uint8_t { Free = 0, Client = 1, Waiter = 2 };

// Ownership partition of a board's id range. Boards themselves stay
// immutable; all game state lives here.
class OwnedSets {
 public:
  explicit OwnedSets(int board_size);

  int size() const { return static_cast<int>(owner_.size()); }
  int free_count() const { return counts_[0]; }
  int client_count() const { return counts_[1]; }
  int waiter_count() const { return counts_[2]; }

  Owner owner(ElementId e) const { return owner_.at(static_cast<std::size_t>(e)); }
  bool is_free(ElementId e) const { return owner(e) == Owner::Free; }

  void claim(ElementId e, Owner who);

  std::vector<ElementId> free_elements() const { return elements_of(Owner::Free); }
  std::vector<ElementId> elements_of(Owner who) const;

 private:
  std::vector<Owner> owner_;
  int counts_[3];
};

}  // namespace wcw
