#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "obslab/realisability.hpp"
#include "oracles.hpp"

using namespace obslab;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

CrossingSet random_coset_element(const ObstructionModel& m, std::mt19937_64& rng) {
  CrossingSet v = m.reference;
  for (const auto& dir : m.coset.basis)
    if (rng() & 1) v.xor_with(dir);
  return v;
}

}  // namespace

TEST_CASE("convex reference cocycle weights") {
  // In convex position every 4-subset of vertices of a complete graph
  // contributes exactly one crossing, independent of the cyclic order.
  const Graph k4 = complete_graph(4);
  const PairIndex idx4(k4);
  const CrossingSet ref4 = convex_reference_cocycle(k4, idx4);
  CHECK(ref4.popcount() == 1);
  CHECK(ref4.get(idx4.index_of(k4.edge_index(0, 2), k4.edge_index(1, 3))));

  const Graph k5 = complete_graph(5);
  const PairIndex idx5(k5);
  CHECK(convex_reference_cocycle(k5, idx5).popcount() == 5);

  std::mt19937_64 rng(11);
  std::vector<int> order(5);
  std::iota(order.begin(), order.end(), 0);
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(convex_reference_cocycle(k5, idx5, order).popcount() == 5);
  }

  const Graph k33 = complete_bipartite_graph(3, 3);
  CHECK(convex_reference_cocycle(k33, PairIndex(k33)).popcount() == 9);

  const Graph p4 = path_graph(4);
  CHECK(convex_reference_cocycle(p4, PairIndex(p4)).popcount() == 0);

  CHECK_THROWS_AS(convex_reference_cocycle(k4, idx4, {0, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("differential dimensions and rank") {
  const Graph k6 = complete_graph(6);
  const gf2::BitMatrix d6 = differential_matrix(k6, PairIndex(k6));
  CHECK(d6.row_count() == 60);
  CHECK(d6.cols == 45);
  CHECK(gf2::rank(d6) == 35);

  const Graph k23 = complete_bipartite_graph(2, 3);
  const gf2::BitMatrix d23 = differential_matrix(k23, PairIndex(k23));
  CHECK(d23.row_count() == 18);
  CHECK(d23.cols == 6);
  CHECK(gf2::rank(d23) == 6);

  // In a perfect matching d{v, e} is the single pair {e, edge at v}, so
  // the image spans everything.
  const Graph m4 = matching_graph(4);
  const gf2::BitMatrix dm = differential_matrix(m4, PairIndex(m4));
  CHECK(dm.cols == 6);
  CHECK(gf2::rank(dm) == 6);
}

TEST_CASE("coset dimensions") {
  CHECK(obstruction_model(complete_graph(5)).coset_dimension() == 14);
  CHECK(obstruction_model(complete_bipartite_graph(3, 3)).coset_dimension() == 17);
  CHECK(obstruction_model(complete_graph(6)).coset_dimension() == 35);
}

TEST_CASE("realisability membership for K5") {
  const ObstructionModel m = obstruction_model(complete_graph(5));
  CHECK_FALSE(is_two_realisable(m, CrossingSet(15)));  // K5 is not planar
  for (int i = 0; i < 15; ++i) {
    CrossingSet single(15);
    single.set(i);
    CHECK(is_two_realisable(m, single));
  }
  CHECK_THROWS_AS(is_two_realisable(m, CrossingSet(14)), std::invalid_argument);
}

TEST_CASE("every crossing set of K4 is realisable") {
  const ObstructionModel m = obstruction_model(complete_graph(4));
  REQUIRE(m.pairs.size() == 3);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CrossingSet a(3);
    for (int i = 0; i < 3; ++i)
      if ((mask >> i) & 1) a.set(i);
    CHECK(is_two_realisable(m, a));
  }
}

TEST_CASE("witness rows rebuild the target") {
  std::mt19937_64 rng(13);
  for (const Graph& g : {complete_graph(5), complete_graph(6), complete_bipartite_graph(3, 3)}) {
    const ObstructionModel m = obstruction_model(g);
    for (int trial = 0; trial < 25; ++trial) {
      const CrossingSet a = random_coset_element(m, rng);
      const auto witness = realisability_witness(m, a);
      REQUIRE(witness.has_value());
      CrossingSet sum(a.length());
      for (int row : *witness) {
        REQUIRE(row >= 0);
        REQUIRE(row < m.differential.row_count());
        sum.xor_with(m.differential.rows[row]);
      }
      CHECK(sum == (a ^ m.reference));
    }
  }

  // Outside the coset there is no witness.
  const ObstructionModel m6 = obstruction_model(complete_graph(6));
  CrossingSet even = m6.reference;
  even.flip(0);  // parity of a 5-clique row breaks
  CHECK_FALSE(realisability_witness(m6, even).has_value());
}

TEST_CASE("realisable sets match the brute force coset") {
  // Small enough to enumerate every subset of differential rows.
  for (const Graph& g : {complete_graph(4), complete_bipartite_graph(2, 3)}) {
    const ObstructionModel m = obstruction_model(g);
    const std::set<std::uint64_t> coset = oracles::brute_force_coset(m.differential, m.reference);
    const int len = static_cast<int>(m.pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      CrossingSet a(len);
      for (int i = 0; i < len; ++i)
        if ((mask >> i) & 1) a.set(i);
      CHECK(is_two_realisable(m, a) == (coset.count(mask) > 0));
    }
  }
}

TEST_CASE("weight spectra of the small graphs") {
  const gf2::WeightHistogram k5 = realisable_spectrum(obstruction_model(complete_graph(5)), 1);
  CHECK(k5.total() == (std::uint64_t{1} << 14));
  CHECK(k5.vector_length == 15);
  for (int k = 0; k <= 15; ++k) {
    const auto it = k5.counts.find(k);
    if (k % 2 == 1) {
      REQUIRE(it != k5.counts.end());
      CHECK(it->second == binomial(15, k));
    } else {
      CHECK(it == k5.counts.end());
    }
  }

  const gf2::WeightHistogram k33 =
      realisable_spectrum(obstruction_model(complete_bipartite_graph(3, 3)), 1);
  CHECK(k33.total() == (std::uint64_t{1} << 17));
  for (const auto& [weight, count] : k33.counts) {
    CHECK(weight % 2 == 1);
    CHECK(count == binomial(18, weight));
  }

  const gf2::WeightHistogram k23 =
      realisable_spectrum(obstruction_model(complete_bipartite_graph(2, 3)), 1);
  CHECK(k23.total() == 64);
  for (int k = 0; k <= 6; ++k) CHECK(k23.counts.at(k) == binomial(6, k));
}

TEST_CASE("parity constraint systems") {
  const Graph k6 = complete_graph(6);
  const ConstraintSystem sys6 = parity_constraint_system(k6, PairIndex(k6));
  REQUIRE(sys6.row_count() == 26);
  int cliques = 0, bipartitions = 0, cycles = 0;
  for (int i = 0; i < sys6.row_count(); ++i) {
    switch (sys6.provenance[i]) {
      case ConstraintKind::kClique:
        ++cliques;
        CHECK(sys6.rows.rows[i].popcount() == 15);
        CHECK(sys6.parities.get(i));
        break;
      case ConstraintKind::kBipartition:
        ++bipartitions;
        CHECK(sys6.rows.rows[i].popcount() == 18);
        CHECK(sys6.parities.get(i));
        break;
      case ConstraintKind::kDisjointCycles:
        ++cycles;
        CHECK(sys6.rows.rows[i].popcount() == 9);
        CHECK_FALSE(sys6.parities.get(i));
        break;
    }
  }
  CHECK(cliques == 6);
  CHECK(bipartitions == 10);
  CHECK(cycles == 10);
  CHECK(gf2::rank(sys6.rows) == 10);

  const Graph k5 = complete_graph(5);
  const ConstraintSystem sys5 = parity_constraint_system(k5, PairIndex(k5));
  REQUIRE(sys5.row_count() == 1);
  CHECK(sys5.provenance[0] == ConstraintKind::kClique);
  CHECK(sys5.rows.rows[0].popcount() == 15);
  CHECK(sys5.parities.get(0));

  const Graph k33 = complete_bipartite_graph(3, 3);
  const ConstraintSystem sys33 = parity_constraint_system(k33, PairIndex(k33));
  REQUIRE(sys33.row_count() == 1);
  CHECK(sys33.provenance[0] == ConstraintKind::kBipartition);
  CHECK(sys33.rows.rows[0].popcount() == 18);
}

TEST_CASE("constraints characterise the coset") {
  for (const Graph& g :
       {complete_graph(5), complete_graph(6), complete_bipartite_graph(3, 3)}) {
    const CharacterisationReport rep = verify_condition_characterisation(g);
    CHECK(rep.holds);
    CHECK(rep.basepoint_ok);
    CHECK(rep.directions_ok);
    CHECK(rep.constraint_rank + rep.coset_dim == rep.pair_count);
  }

  const CharacterisationReport k6 = verify_condition_characterisation(complete_graph(6));
  CHECK(k6.constraint_rank == 10);
  CHECK(k6.coset_dim == 35);
  CHECK(k6.pair_count == 45);

  // Tampering with the required parities must be caught at the basepoint.
  const Graph g = complete_graph(5);
  const ObstructionModel m = obstruction_model(g);
  ConstraintSystem sys = parity_constraint_system(g, m.pairs);
  sys.parities.flip(0);
  const CharacterisationReport broken = verify_condition_characterisation(m, sys);
  CHECK_FALSE(broken.holds);
  CHECK_FALSE(broken.basepoint_ok);
  CHECK(broken.directions_ok);
}

TEST_CASE("membership and constraint parities agree on random sets") {
  const ObstructionModel m = obstruction_model(complete_graph(6));
  const ConstraintSystem sys = parity_constraint_system(m.graph, m.pairs);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    CrossingSet a(45);
    for (int i = 0; i < 45; ++i)
      if (rng() & 1) a.set(i);
    bool satisfied = true;
    for (int r = 0; r < sys.row_count(); ++r)
      if (gf2::dot(sys.rows.rows[r], a) != sys.parities.get(r)) satisfied = false;
    CHECK(is_two_realisable(m, a) == satisfied);
  }
}

TEST_CASE("cardinality bound") {
  CHECK(max_realisable_bound(6) == 40);
  CHECK(max_realisable_bound(7) == 93);
  CHECK(max_realisable_bound(8) == 186);
  CHECK_THROWS_AS(max_realisable_bound(5), std::domain_error);
}

TEST_CASE("obstruction vanishes exactly for planar graphs") {
  CHECK(planarity_crosscheck(complete_graph(4)));
  CHECK(planarity_crosscheck(complete_bipartite_graph(2, 3)));
  CHECK(planarity_crosscheck(cycle_graph(6)));
  CHECK_FALSE(planarity_crosscheck(complete_graph(5)));
  CHECK_FALSE(planarity_crosscheck(complete_bipartite_graph(3, 3)));

  // Exhaustive n = 5 sweep against the subdivision search.
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    int s = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v, ++s)
        if ((mask >> s) & 1) edges.emplace_back(u, v);
    const Graph g = make_graph(5, std::move(edges));
    CHECK(planarity_crosscheck(g) == !oracles::kuratowski_nonplanar(g));
  }

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    const Graph g = make_graph(6, std::move(edges));
    CHECK(planarity_crosscheck(g) == !oracles::kuratowski_nonplanar(g));
  }
}
