#pragma once

#include <string>
#include <utility>
#include <vector>

#include "obslab/graph.hpp"

// The deleted product complex of a graph and its quotient by the
// coordinate-swap involution: cell lists, incidence, the closed-surface
// test, Euler characteristics, and the exhaustive scan for graphs whose
// quotient is a closed surface.

namespace obslab {

// A 1-cell of the ordered complex is either vertex x edge (v, e) or
// edge x vertex (e, v); both are stored as (vertex, edge) with a flag.
struct OrderedOneCell {
  int vertex = 0;
  int edge = 0;
  bool vertex_first = true;
};

// Cells of the product complex G x G avoiding the diagonal. 1-cells are
// laid out as the full vertex-first block followed by its mirrored
// edge-first block, so the swap involution on 1-cells is
// k <-> k +- (|cells1| / 2). cells0 and cells2 are sorted
// lexicographically and the involution swaps components.
struct OrderedComplex {
  Graph graph;
  std::vector<std::pair<int, int>> cells0;  // ordered vertex pairs (u, v)
  std::vector<OrderedOneCell> cells1;
  std::vector<std::pair<int, int>> cells2;  // ordered independent edge pairs (e, f)
  std::vector<std::vector<int>> incidence;  // 1-cell index -> 2-cell indices

  int swap_cell0(int i) const;
  int swap_cell1(int i) const {
    const int half = static_cast<int>(cells1.size()) / 2;
    return i < half ? i + half : i - half;
  }
  int swap_cell2(int i) const;
};

// The quotient complex: one cell per swap orbit. Vertices are unordered
// pairs {u, v}, edges are orbits {(v,e),(e,v)} keyed by (v, e), and
// faces are unordered independent edge pairs in PairIndex order.
struct SymmetricComplex {
  Graph graph;
  std::vector<std::pair<int, int>> vertices;   // u < v
  std::vector<std::pair<int, int>> edges;      // (vertex, non-incident edge)
  PairIndex faces;
  std::vector<std::vector<int>> incidence;     // edge index -> face indices

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return faces.size(); }
};

OrderedComplex build_deleted_product(const Graph& g);
SymmetricComplex symmetric_quotient(const OrderedComplex& c);

struct StarViolation {
  int edge = 0;
  int vertex = 0;
  int count = 0;  // edges at vertex independent of edge; 2 when fine

  friend bool operator==(const StarViolation&, const StarViolation&) = default;
};

// All non-incident (edge, vertex) pairs where the count of edges at the
// vertex independent of the edge differs from 2, sorted by (edge,
// vertex). Empty exactly when the quotient is a closed surface.
std::vector<StarViolation> star_condition_violations(const Graph& g);

// True when every edge of the quotient lies in exactly two faces.
// Throws std::domain_error on a complex without faces.
bool is_closed_surface(const SymmetricComplex& c);

int euler_characteristic(const OrderedComplex& c);
int euler_characteristic(const SymmetricComplex& c);

// Minimum over all vertex relabelings of the adjacency bitstring,
// prefixed by the vertex count: equal strings <=> isomorphic. Intended
// for the small graphs of the surface scan (n <= 8).
std::string canonical_adjacency(const Graph& g);

// All graphs with at most max_n vertices, no isolated vertices, at
// least one independent edge pair, and no star-condition violations;
// one representative per isomorphism class, ordered by vertex count,
// then edge count, then canonical form. Throws std::domain_error for
// max_n > 7 (exhaustive-search guard).
std::vector<Graph> find_surface_graphs(int max_n);

}  // namespace obslab
