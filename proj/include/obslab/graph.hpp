#pragma once

#include <string>
#include <utility>
#include <vector>

#include "obslab/gf2.hpp"

// Labeled simple graphs with a canonical edge order, the index of
// independent edge pairs, and enumeration of the subgraph families
// (cliques, complete bipartite splits, disjoint cycle pairs) that feed
// the parity constraint systems.

namespace obslab {

inline constexpr int kMaxEdges = 64;
inline constexpr int kMaxIndependentPairs = 4096;

struct Graph {
  int vertex_count = 0;
  // Each edge (u, v) has u < v; the list is sorted lexicographically,
  // which defines the canonical edge index 0..m-1.
  std::vector<std::pair<int, int>> edges;
  // Optional display names; empty means "use the vertex number".
  std::vector<std::string> labels;

  int edge_count() const { return static_cast<int>(edges.size()); }
  // Canonical index of edge {u, v} in either endpoint order, -1 if absent.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  int degree(int v) const;
  std::vector<int> edges_at(int v) const;
  bool incident(int edge, int v) const {
    return edges[edge].first == v || edges[edge].second == v;
  }
};

// Validates and canonicalizes: endpoints in range, no loops, no
// duplicates, edges sorted. Throws std::invalid_argument on violations
// and std::domain_error when the edge cap is exceeded.
Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels = {});

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);  // n vertices, n-1 edges
Graph matching_graph(int k);  // k disjoint edges on vertices (2i, 2i+1)

// Two edges are independent when they share no endpoint.
bool edges_independent(const Graph& g, int e, int f);

// The set PG of unordered independent edge pairs, sorted
// lexicographically on (min edge index, max edge index). Bit positions
// of every CrossingSet refer to this order.
class PairIndex {
 public:
  PairIndex() = default;
  explicit PairIndex(const Graph& g);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::pair<int, int> pair_at(int i) const { return pairs_[i]; }
  // Order-insensitive lookup; -1 when {e, f} is not an independent pair.
  int index_of(int e, int f) const;

 private:
  friend PairIndex independent_pairs(const Graph& g);
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> lookup_;  // dense m*m table of indices, -1 elsewhere
  int edge_count_ = 0;
};

PairIndex independent_pairs(const Graph& g);

// A subset of PG as a bit-vector of length |PG|: one bit per
// independent pair, in PairIndex order. Doubles as a symmetric
// 2-cochain of the quotient deleted product.
using CrossingSet = gf2::BitVector;

// Pair subsets below are sorted index lists into a PairIndex; the outer
// sequences follow the deterministic enumeration orders documented per
// function.

// For each ordered-by-construction pair of disjoint vertex sets X
// (|X| = a) and Y (|Y| = b) whose complete bipartite edge set lies in
// g, the independent pairs with both edges between X and Y. When a = b
// the (X, Y) / (Y, X) duplicates are merged by requiring min(X) < min(Y).
std::vector<std::vector<int>> enumerate_bipartition_subgraphs(const Graph& g,
                                                              const PairIndex& idx,
                                                              int a, int b);

// For each unordered pair of vertex-disjoint len-cycles of g, the pairs
// {e, f} with e in one cycle and f in the other.
std::vector<std::vector<int>> enumerate_disjoint_cycle_pairs(const Graph& g,
                                                             const PairIndex& idx,
                                                             int len);

// For each k-clique of g (lex order on vertex sets), the independent
// pairs with all four endpoints inside the clique.
std::vector<std::vector<int>> enumerate_complete_subgraphs(const Graph& g,
                                                           const PairIndex& idx,
                                                           int k);

std::string vertex_name(const Graph& g, int v);

}  // namespace obslab
