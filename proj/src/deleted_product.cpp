#include "obslab/deleted_product.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace obslab {

int OrderedComplex::swap_cell0(int i) const {
  const auto [u, v] = cells0[i];
  const auto it = std::lower_bound(cells0.begin(), cells0.end(), std::pair<int, int>{v, u});
  return static_cast<int>(it - cells0.begin());
}

int OrderedComplex::swap_cell2(int i) const {
  const auto [e, f] = cells2[i];
  const auto it = std::lower_bound(cells2.begin(), cells2.end(), std::pair<int, int>{f, e});
  return static_cast<int>(it - cells2.begin());
}

OrderedComplex build_deleted_product(const Graph& g) {
  OrderedComplex c;
  c.graph = g;

  for (int u = 0; u < g.vertex_count; ++u)
    for (int v = 0; v < g.vertex_count; ++v)
      if (u != v) c.cells0.emplace_back(u, v);

  // Vertex-first block, sorted by (vertex, edge); the edge-first block
  // mirrors it so the swap involution is an index shift by half.
  for (int v = 0; v < g.vertex_count; ++v)
    for (int e = 0; e < g.edge_count(); ++e)
      if (!g.incident(e, v)) c.cells1.push_back({v, e, true});
  const int half = static_cast<int>(c.cells1.size());
  for (int i = 0; i < half; ++i)
    c.cells1.push_back({c.cells1[i].vertex, c.cells1[i].edge, false});

  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = 0; f < g.edge_count(); ++f)
      if (e != f && edges_independent(g, e, f)) c.cells2.emplace_back(e, f);

  // Boundary of the square e x f: the 1-cells (u, f) for u in e and
  // (e, w) for w in f; all four survive deletion because e and f are
  // independent.
  std::map<std::pair<int, int>, int> ve_index;  // (v, e) -> vertex-first cell
  for (int i = 0; i < half; ++i) ve_index[{c.cells1[i].vertex, c.cells1[i].edge}] = i;

  c.incidence.assign(c.cells1.size(), {});
  for (int t = 0; t < static_cast<int>(c.cells2.size()); ++t) {
    const auto [e, f] = c.cells2[t];
    const auto [a, b] = g.edges[e];
    const auto [x, y] = g.edges[f];
    c.incidence[ve_index.at({a, f})].push_back(t);
    c.incidence[ve_index.at({b, f})].push_back(t);
    c.incidence[ve_index.at({x, e}) + half].push_back(t);
    c.incidence[ve_index.at({y, e}) + half].push_back(t);
  }
  return c;
}

SymmetricComplex symmetric_quotient(const OrderedComplex& c) {
  SymmetricComplex q;
  q.graph = c.graph;

  for (const auto& [u, v] : c.cells0)
    if (u < v) q.vertices.emplace_back(u, v);

  const int half = static_cast<int>(c.cells1.size()) / 2;
  for (int i = 0; i < half; ++i) q.edges.emplace_back(c.cells1[i].vertex, c.cells1[i].edge);

  q.faces = independent_pairs(c.graph);

  // An orbit edge {(v,e),(e,v)} lies in an orbit face {e', f'} once for
  // each ordered representative; the quotient incidence is the
  // deduplicated projection.
  q.incidence.assign(q.edges.size(), {});
  for (int i = 0; i < half; ++i) {
    std::vector<int>& faces = q.incidence[i];
    for (int side : {i, i + half})
      for (int t : c.incidence[side]) {
        const auto [e, f] = c.cells2[t];
        faces.push_back(q.faces.index_of(e, f));
      }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  }
  return q;
}

std::vector<StarViolation> star_condition_violations(const Graph& g) {
  std::vector<StarViolation> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edges[e];
    for (int v = 0; v < g.vertex_count; ++v) {
      if (v == a || v == b) continue;
      // Edges {v, w} independent of e are exactly those with w outside e.
      const int count = g.degree(v) - (g.adjacent(v, a) ? 1 : 0) - (g.adjacent(v, b) ? 1 : 0);
      if (count != 2) out.push_back({e, v, count});
    }
  }
  return out;
}

bool is_closed_surface(const SymmetricComplex& c) {
  if (c.face_count() == 0) throw std::domain_error("empty complex: no faces");
  for (const std::vector<int>& faces : c.incidence)
    if (faces.size() != 2) return false;
  return true;
}

int euler_characteristic(const OrderedComplex& c) {
  return static_cast<int>(c.cells0.size()) - static_cast<int>(c.cells1.size()) +
         static_cast<int>(c.cells2.size());
}

int euler_characteristic(const SymmetricComplex& c) {
  return c.vertex_count() - c.edge_count() + c.face_count();
}

std::string canonical_adjacency(const Graph& g) {
  const int n = g.vertex_count;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::string best;
  do {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) s.push_back(g.adjacent(perm[u], perm[v]) ? '1' : '0');
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

namespace {

// Condition check on an adjacency-bitmask graph: every vertex has a
// neighbor, some independent pair exists, and every non-incident
// (edge, vertex) pair sees exactly two independent edges at the vertex.
bool passes_star_condition(int n, const std::vector<std::uint32_t>& adj) {
  for (int v = 0; v < n; ++v)
    if (adj[v] == 0) return false;

  bool has_independent_pair = false;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!((adj[a] >> b) & 1)) continue;
      const std::uint32_t ends = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
      for (int v = 0; v < n; ++v) {
        if (ends & (std::uint32_t{1} << v)) continue;
        const int count = std::popcount(adj[v] & ~ends);
        if (count != 2) return false;
        has_independent_pair = true;
      }
    }
  }
  return has_independent_pair;
}

}  // namespace

std::vector<Graph> find_surface_graphs(int max_n) {
  if (max_n > 7) throw std::domain_error("surface scan limited to at most 7 vertices");

  std::vector<std::pair<std::string, Graph>> found;
  // Isolated vertices are excluded, so every isomorphism class appears
  // at exactly one vertex count and labeled enumeration per n suffices.
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);

    const std::uint32_t total = std::uint32_t{1} << slots.size();
    std::vector<std::uint32_t> adj(n);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      std::fill(adj.begin(), adj.end(), 0);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((mask >> s) & 1) {
          adj[slots[s].first] |= std::uint32_t{1} << slots[s].second;
          adj[slots[s].second] |= std::uint32_t{1} << slots[s].first;
        }
      }
      if (!passes_star_condition(n, adj)) continue;

      std::vector<std::pair<int, int>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1) edges.push_back(slots[s]);
      Graph g = make_graph(n, std::move(edges));
      std::string key = canonical_adjacency(g);
      if (std::none_of(found.begin(), found.end(),
                       [&](const auto& kg) { return kg.first == key; }))
        found.emplace_back(std::move(key), std::move(g));
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const auto rank = [](const auto& kg) {
      return std::tuple(kg.second.vertex_count, kg.second.edge_count(), kg.first);
    };
    return rank(a) < rank(b);
  });

  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace obslab
