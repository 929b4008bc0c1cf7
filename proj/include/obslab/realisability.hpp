#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "obslab/gf2.hpp"
#include "obslab/graph.hpp"

// The obstruction engine: reference parity cocycle of the convex
// drawing, the symmetric differential, realisability of crossing sets
// as membership in the obstruction coset, the weight spectrum over the
// whole coset, the parity-constraint characterisation, and the general
// upper bound on realisable cardinalities.

namespace obslab {

// Crossing parities of the straight-line drawing with the vertices in
// convex position in the given cyclic order: independent chords cross
// exactly once iff their endpoints interleave around the circle. Purely
// combinatorial, so a vertex order fully determines the result.
CrossingSet convex_reference_cocycle(const Graph& g, const PairIndex& idx,
                                     const std::vector<int>& order);
CrossingSet convex_reference_cocycle(const Graph& g, const PairIndex& idx);  // label order

// Rows indexed by the symmetric 1-cells (v, e) sorted by (v, e);
// columns by PairIndex. Row (v, e) marks the faces {e, e'} with e'
// incident to v and independent of e.
gf2::BitMatrix differential_matrix(const Graph& g, const PairIndex& idx);

// Everything needed to answer realisability queries: the coset
// reference + Im(d) together with a prebuilt solver over the
// differential rows for witness extraction.
struct ObstructionModel {
  Graph graph;
  PairIndex pairs;
  std::vector<std::pair<int, int>> one_cells;  // (vertex, edge) per differential row
  gf2::BitMatrix differential;
  CrossingSet reference;
  gf2::AffineSubspace coset;     // basepoint = reference, basis = image basis
  gf2::EchelonForm solver;       // echelon form of the differential rows

  int coset_dimension() const { return coset.dimension(); }
};

ObstructionModel obstruction_model(const Graph& g);

// A crossing set is 2-realisable iff it lies in the obstruction coset.
// The witness names differential rows (symmetric 1-cells) whose sum is
// a XOR reference, canonical with free variables at zero.
bool is_two_realisable(const ObstructionModel& m, const CrossingSet& a);
std::optional<std::vector<int>> realisability_witness(const ObstructionModel& m,
                                                      const CrossingSet& a);

// Weight histogram over the full coset; see gf2::weight_histogram for
// the sweep contract and the basis-size cap.
gf2::WeightHistogram realisable_spectrum(const ObstructionModel& m, int workers);

enum class ConstraintKind { kClique, kBipartition, kDisjointCycles };

// Parity conditions indexed over PG: 5-clique subsets must meet A in an
// odd number of pairs, complete bipartite (3,3) subsets odd, disjoint
// 3-cycle pair subsets even. Rows in that family order, canonical
// within each family.
struct ConstraintSystem {
  gf2::BitMatrix rows;        // indicator of each pair subset
  gf2::BitVector parities;    // 1 = odd intersection required, 0 = even
  std::vector<ConstraintKind> provenance;

  int row_count() const { return rows.row_count(); }
};

ConstraintSystem parity_constraint_system(const Graph& g, const PairIndex& idx);

struct CharacterisationReport {
  bool holds = false;
  bool basepoint_ok = false;       // reference satisfies every constraint
  bool directions_ok = false;      // every coset basis vector orthogonal to rows
  int constraint_rank = 0;
  int coset_dim = 0;
  int pair_count = 0;
};

// Checks that the constraint system cuts out exactly the obstruction
// coset: the reference satisfies the parities, the coset directions are
// orthogonal to all rows, and the constraint rank equals |PG| - dim.
CharacterisationReport verify_condition_characterisation(const ObstructionModel& m,
                                                          const ConstraintSystem& sys);
CharacterisationReport verify_condition_characterisation(const Graph& g);

// floor((8/3) * C(n, 4)); defined for n >= 6, throws std::domain_error
// below that.
std::int64_t max_realisable_bound(int n);

// Whether the empty crossing set is realisable, i.e. the obstruction
// class vanishes; equivalent to planarity.
bool planarity_crosscheck(const Graph& g);

}  // namespace obslab
