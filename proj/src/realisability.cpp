#include "obslab/realisability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace obslab {

namespace {

bool is_permutation_of(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

CrossingSet convex_reference_cocycle(const Graph& g, const PairIndex& idx,
                                     const std::vector<int>& order) {
  if (!is_permutation_of(order, g.vertex_count))
    throw std::invalid_argument("order is not a permutation of the vertices");
  std::vector<int> pos(g.vertex_count);
  for (int i = 0; i < g.vertex_count; ++i) pos[order[i]] = i;

  CrossingSet out(idx.size());
  for (int i = 0; i < idx.size(); ++i) {
    const auto [e, f] = idx.pair_at(i);
    int a = pos[g.edges[e].first], b = pos[g.edges[e].second];
    if (a > b) std::swap(a, b);
    const int c = pos[g.edges[f].first], d = pos[g.edges[f].second];
    // Chords cross exactly when one endpoint of f lies strictly between
    // a and b in the cyclic order and the other does not.
    const bool c_inside = a < c && c < b;
    const bool d_inside = a < d && d < b;
    if (c_inside != d_inside) out.set(i);
  }
  return out;
}

CrossingSet convex_reference_cocycle(const Graph& g, const PairIndex& idx) {
  std::vector<int> order(g.vertex_count);
  std::iota(order.begin(), order.end(), 0);
  return convex_reference_cocycle(g, idx, order);
}

gf2::BitMatrix differential_matrix(const Graph& g, const PairIndex& idx) {
  gf2::BitMatrix d(idx.size());
  for (int v = 0; v < g.vertex_count; ++v) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.incident(e, v)) continue;
      gf2::BitVector row(idx.size());
      for (int ep : g.edges_at(v)) {
        const int col = idx.index_of(e, ep);
        if (col >= 0) row.set(col);
      }
      d.add_row(std::move(row));
    }
  }
  return d;
}

ObstructionModel obstruction_model(const Graph& g) {
  ObstructionModel m;
  m.graph = g;
  m.pairs = independent_pairs(g);
  for (int v = 0; v < g.vertex_count; ++v)
    for (int e = 0; e < g.edge_count(); ++e)
      if (!g.incident(e, v)) m.one_cells.emplace_back(v, e);
  m.differential = differential_matrix(g, m.pairs);
  m.reference = convex_reference_cocycle(g, m.pairs);
  m.solver = gf2::EchelonForm::build(m.differential);
  m.coset = gf2::AffineSubspace{m.reference, gf2::image_basis(m.differential)};
  return m;
}

bool is_two_realisable(const ObstructionModel& m, const CrossingSet& a) {
  if (a.length() != m.pairs.size()) throw std::invalid_argument("crossing set size mismatch");
  return m.solver.solve(a ^ m.reference).has_value();
}

std::optional<std::vector<int>> realisability_witness(const ObstructionModel& m,
                                                      const CrossingSet& a) {
  if (a.length() != m.pairs.size()) throw std::invalid_argument("crossing set size mismatch");
  const auto combo = m.solver.solve(a ^ m.reference);
  if (!combo) return std::nullopt;
  return combo->to_indices();
}

gf2::WeightHistogram realisable_spectrum(const ObstructionModel& m, int workers) {
  return gf2::weight_histogram(m.coset, workers);
}

ConstraintSystem parity_constraint_system(const Graph& g, const PairIndex& idx) {
  struct Family {
    std::vector<std::vector<int>> subsets;
    ConstraintKind kind;
    bool odd;
  };
  const Family families[] = {
      {enumerate_complete_subgraphs(g, idx, 5), ConstraintKind::kClique, true},
      {enumerate_bipartition_subgraphs(g, idx, 3, 3), ConstraintKind::kBipartition, true},
      {enumerate_disjoint_cycle_pairs(g, idx, 3), ConstraintKind::kDisjointCycles, false},
  };

  std::size_t total = 0;
  for (const Family& fam : families) total += fam.subsets.size();

  ConstraintSystem sys;
  sys.rows = gf2::BitMatrix(idx.size());
  sys.parities = gf2::BitVector(static_cast<int>(total));
  for (const Family& fam : families) {
    for (const std::vector<int>& subset : fam.subsets) {
      if (fam.odd) sys.parities.set(sys.rows.row_count());
      sys.rows.add_row(gf2::BitVector::from_indices(idx.size(), subset));
      sys.provenance.push_back(fam.kind);
    }
  }
  return sys;
}

CharacterisationReport verify_condition_characterisation(const ObstructionModel& m,
                                                          const ConstraintSystem& sys) {
  CharacterisationReport r;
  r.pair_count = m.pairs.size();
  r.coset_dim = m.coset.dimension();
  r.constraint_rank = gf2::rank(sys.rows);

  r.basepoint_ok = true;
  for (int i = 0; i < sys.row_count(); ++i)
    if (gf2::dot(sys.rows.rows[i], m.reference) != sys.parities.get(i)) r.basepoint_ok = false;

  r.directions_ok = true;
  for (const gf2::BitVector& dir : m.coset.basis)
    for (const gf2::BitVector& row : sys.rows.rows)
      if (gf2::dot(row, dir)) r.directions_ok = false;

  // basepoint + orthogonal directions put the coset inside the solution
  // set; matching dimensions force equality.
  r.holds = r.basepoint_ok && r.directions_ok &&
            r.constraint_rank == r.pair_count - r.coset_dim;
  return r;
}

CharacterisationReport verify_condition_characterisation(const Graph& g) {
  const ObstructionModel m = obstruction_model(g);
  return verify_condition_characterisation(m, parity_constraint_system(g, m.pairs));
}

std::int64_t max_realisable_bound(int n) {
  if (n < 6) throw std::domain_error("bound only applies for n >= 6");
  const std::int64_t choose4 =
      std::int64_t{n} * (n - 1) * (n - 2) * (n - 3) / 24;
  return 8 * choose4 / 3;
}

bool planarity_crosscheck(const Graph& g) {
  const ObstructionModel m = obstruction_model(g);
  return is_two_realisable(m, CrossingSet(m.pairs.size()));
}

}  // namespace obslab
