#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "obslab/deleted_product.hpp"

using namespace obslab;

namespace {

// Cell counts straight from the definitions, with no complex machinery:
// ordered 0-cells n(n-1), 1-cells 2 sum_v #(edges missing v), 2-cells
// 2 |PG|.
struct CountOracle {
  int cells0, cells1, cells2;
};

CountOracle count_cells(const Graph& g) {
  CountOracle c{g.vertex_count * (g.vertex_count - 1), 0, 0};
  for (int v = 0; v < g.vertex_count; ++v)
    for (int e = 0; e < g.edge_count(); ++e)
      if (!g.incident(e, v)) c.cells1 += 2;
  c.cells2 = 2 * independent_pairs(g).size();
  return c;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("ordered complex cell counts") {
  const OrderedComplex k5 = build_deleted_product(complete_graph(5));
  CHECK(k5.cells0.size() == 20);
  CHECK(k5.cells1.size() == 60);
  CHECK(k5.cells2.size() == 30);

  const OrderedComplex k6 = build_deleted_product(complete_graph(6));
  CHECK(k6.cells0.size() == 30);
  CHECK(k6.cells1.size() == 120);
  CHECK(k6.cells2.size() == 90);

  const OrderedComplex p3 = build_deleted_product(path_graph(3));
  CHECK(p3.cells2.empty());

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 4));
    const OrderedComplex c = build_deleted_product(g);
    const CountOracle expect = count_cells(g);
    CHECK(static_cast<int>(c.cells0.size()) == expect.cells0);
    CHECK(static_cast<int>(c.cells1.size()) == expect.cells1);
    CHECK(static_cast<int>(c.cells2.size()) == expect.cells2);
  }
}

TEST_CASE("every 2-cell has four boundary 1-cells and tau is fixed point free") {
  const Graph g = complete_graph(5);
  const OrderedComplex c = build_deleted_product(g);

  std::vector<int> boundary_degree(c.cells2.size(), 0);
  for (const auto& faces : c.incidence)
    for (int t : faces) ++boundary_degree[t];
  for (int deg : boundary_degree) CHECK(deg == 4);

  for (int i = 0; i < static_cast<int>(c.cells0.size()); ++i) {
    CHECK(c.swap_cell0(i) != i);
    CHECK(c.swap_cell0(c.swap_cell0(i)) == i);
  }
  for (int i = 0; i < static_cast<int>(c.cells1.size()); ++i) {
    CHECK(c.swap_cell1(i) != i);
    CHECK(c.swap_cell1(c.swap_cell1(i)) == i);
    // The involution preserves incidence: a 1-cell's faces map to the
    // swapped faces of the swapped 1-cell.
    std::set<int> swapped;
    for (int t : c.incidence[i]) swapped.insert(c.swap_cell2(t));
    const std::set<int> other(c.incidence[c.swap_cell1(i)].begin(),
                              c.incidence[c.swap_cell1(i)].end());
    CHECK(swapped == other);
  }
  for (int i = 0; i < static_cast<int>(c.cells2.size()); ++i) {
    CHECK(c.swap_cell2(i) != i);
    CHECK(c.swap_cell2(c.swap_cell2(i)) == i);
  }
}

TEST_CASE("symmetric quotient halves every cell count") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 3));
    const OrderedComplex c = build_deleted_product(g);
    const SymmetricComplex q = symmetric_quotient(c);
    CHECK(2 * q.vertex_count() == static_cast<int>(c.cells0.size()));
    CHECK(2 * q.edge_count() == static_cast<int>(c.cells1.size()));
    CHECK(2 * q.face_count() == static_cast<int>(c.cells2.size()));
  }
}

TEST_CASE("quotient cell counts for the named graphs") {
  const SymmetricComplex k6 = symmetric_quotient(build_deleted_product(complete_graph(6)));
  CHECK(k6.face_count() == 45);
  CHECK(k6.edge_count() == 60);
  CHECK(k6.vertex_count() == 15);

  const SymmetricComplex k5 = symmetric_quotient(build_deleted_product(complete_graph(5)));
  CHECK(k5.vertex_count() == 10);
  CHECK(k5.edge_count() == 30);
  CHECK(k5.face_count() == 15);

  const SymmetricComplex k33 =
      symmetric_quotient(build_deleted_product(complete_bipartite_graph(3, 3)));
  CHECK(k33.vertex_count() == 15);
  CHECK(k33.edge_count() == 36);
  CHECK(k33.face_count() == 18);
}

TEST_CASE("star condition violations") {
  CHECK(star_condition_violations(complete_graph(5)).empty());
  CHECK(star_condition_violations(complete_bipartite_graph(3, 3)).empty());

  // K6: every one of the 15*4 non-incident pairs counts 3 edges.
  const Graph k6 = complete_graph(6);
  const auto v6 = star_condition_violations(k6);
  CHECK(v6.size() == 60);
  for (const StarViolation& v : v6) CHECK(v.count == 3);
  CHECK(std::is_sorted(v6.begin(), v6.end(), [](const auto& a, const auto& b) {
    return std::pair(a.edge, a.vertex) < std::pair(b.edge, b.vertex);
  }));

  // K2,3 fails; a degree-2 vertex opposite an incident-free edge sees
  // only one independent edge.
  const auto v23 = star_condition_violations(complete_bipartite_graph(2, 3));
  CHECK_FALSE(v23.empty());
  CHECK(std::any_of(v23.begin(), v23.end(), [](const StarViolation& v) { return v.count == 1; }));
}

TEST_CASE("closed surface test") {
  CHECK(is_closed_surface(symmetric_quotient(build_deleted_product(complete_graph(5)))));
  CHECK(is_closed_surface(
      symmetric_quotient(build_deleted_product(complete_bipartite_graph(3, 3)))));
  CHECK_FALSE(is_closed_surface(symmetric_quotient(build_deleted_product(complete_graph(6)))));
  CHECK_THROWS_AS(is_closed_surface(symmetric_quotient(build_deleted_product(path_graph(3)))),
                  std::domain_error);
}

TEST_CASE("star condition is equivalent to the surface property") {
  // Exhaustive on 5 vertices, sampled on 6.
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    int s = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v, ++s)
        if ((mask >> s) & 1) edges.emplace_back(u, v);
    const Graph g = make_graph(5, std::move(edges));
    const SymmetricComplex q = symmetric_quotient(build_deleted_product(g));
    if (q.face_count() == 0) continue;  // surface test undefined without faces
    CHECK(star_condition_violations(g).empty() == is_closed_surface(q));
  }

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 6);
    const SymmetricComplex q = symmetric_quotient(build_deleted_product(g));
    if (q.face_count() == 0) continue;
    CHECK(star_condition_violations(g).empty() == is_closed_surface(q));
  }
}

TEST_CASE("euler characteristics") {
  CHECK(euler_characteristic(symmetric_quotient(build_deleted_product(complete_graph(5)))) == -5);
  CHECK(euler_characteristic(
            symmetric_quotient(build_deleted_product(complete_bipartite_graph(3, 3)))) == -3);
  CHECK(euler_characteristic(symmetric_quotient(build_deleted_product(complete_graph(6)))) == 0);
  CHECK(euler_characteristic(build_deleted_product(complete_graph(5))) == -10);
  CHECK(euler_characteristic(build_deleted_product(complete_bipartite_graph(3, 3))) == -6);
}

TEST_CASE("canonical adjacency separates isomorphism classes") {
  const Graph a = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b = make_graph(4, {{2, 0}, {0, 3}, {3, 1}});  // relabeled path
  const Graph c = make_graph(4, {{0, 1}, {1, 2}, {0, 2}});  // triangle + isolated vertex
  CHECK(canonical_adjacency(a) == canonical_adjacency(b));
  CHECK(canonical_adjacency(a) != canonical_adjacency(c));
  CHECK(canonical_adjacency(complete_graph(3)) != canonical_adjacency(c));  // differing n
}

TEST_CASE("surface scan finds exactly K5 and K3,3") {
  CHECK(find_surface_graphs(4).empty());

  const auto five = find_surface_graphs(5);
  REQUIRE(five.size() == 1);
  CHECK(canonical_adjacency(five[0]) == canonical_adjacency(complete_graph(5)));

  const auto six = find_surface_graphs(6);
  REQUIRE(six.size() == 2);
  CHECK(canonical_adjacency(six[0]) == canonical_adjacency(complete_graph(5)));
  CHECK(canonical_adjacency(six[1]) == canonical_adjacency(complete_bipartite_graph(3, 3)));

  CHECK_THROWS_AS(find_surface_graphs(8), std::domain_error);
}
