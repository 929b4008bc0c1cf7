#include "obslab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace obslab {

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const std::pair<int, int> key{u, v};
  const auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return static_cast<int>(it - edges.begin());
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

std::vector<int> Graph::edges_at(int v) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (incident(e, v)) out.push_back(e);
  return out;
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels) {
  if (vertex_count <= 0) throw std::invalid_argument("vertex count must be positive");
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
    throw std::invalid_argument("label count does not match vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  if (static_cast<int>(edges.size()) > kMaxEdges)
    throw std::domain_error("graph exceeds the 64-edge cap");

  Graph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  g.labels = std::move(labels);
  return g;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("part sizes must be positive");
  // Vertices 0..a-1 form one part, a..a+b-1 the other.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
  return make_graph(a + b, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return make_graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, std::move(edges));
}

Graph matching_graph(int k) {
  if (k <= 0) throw std::invalid_argument("matching size must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return make_graph(2 * k, std::move(edges));
}

bool edges_independent(const Graph& g, int e, int f) {
  const auto& [a, b] = g.edges[e];
  const auto& [c, d] = g.edges[f];
  return a != c && a != d && b != c && b != d;
}

int PairIndex::index_of(int e, int f) const {
  if (e > f) std::swap(e, f);
  if (e < 0 || f >= edge_count_) return -1;
  return lookup_[static_cast<std::size_t>(e) * edge_count_ + f];
}

PairIndex::PairIndex(const Graph& g) { *this = independent_pairs(g); }

PairIndex independent_pairs(const Graph& g) {
  PairIndex idx;
  idx.edge_count_ = g.edge_count();
  idx.lookup_.assign(static_cast<std::size_t>(idx.edge_count_) * idx.edge_count_, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int f = e + 1; f < g.edge_count(); ++f) {
      if (!edges_independent(g, e, f)) continue;
      idx.lookup_[static_cast<std::size_t>(e) * idx.edge_count_ + f] =
          static_cast<int>(idx.pairs_.size());
      idx.pairs_.emplace_back(e, f);
    }
  }
  if (idx.size() > kMaxIndependentPairs)
    throw std::domain_error("independent pair count exceeds cap");
  return idx;
}

namespace {

// All k-subsets of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> vertex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool all_edges_present(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  for (int x : xs)
    for (int y : ys)
      if (!g.adjacent(x, y)) return false;
  return true;
}

// Pairs of independent edges with both members drawn from the given
// edge lists (which may coincide).
std::vector<int> cross_pairs(const PairIndex& idx, const std::vector<int>& es,
                             const std::vector<int>& fs) {
  std::vector<int> out;
  for (int e : es) {
    for (int f : fs) {
      const int i = idx.index_of(e, f);
      if (i >= 0) out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_bipartition_subgraphs(const Graph& g,
                                                              const PairIndex& idx,
                                                              int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("part sizes must be at least 1");
  std::vector<std::vector<int>> out;
  for (const auto& xs : vertex_subsets(g.vertex_count, a)) {
    for (const auto& ys : vertex_subsets(g.vertex_count, b)) {
      bool disjoint = true;
      for (int y : ys)
        if (std::binary_search(xs.begin(), xs.end(), y)) disjoint = false;
      if (!disjoint) continue;
      // Unordered when the parts have equal size: keep min(X) < min(Y).
      if (a == b && xs[0] > ys[0]) continue;
      if (!all_edges_present(g, xs, ys)) continue;

      std::vector<int> between;
      for (int x : xs)
        for (int y : ys) between.push_back(g.edge_index(x, y));
      out.push_back(cross_pairs(idx, between, between));
    }
  }
  return out;
}

namespace {

// Simple cycles of the given length, each as a sorted edge-index list.
// Canonical walk: start at the smallest vertex of the cycle and move
// first toward its smaller cycle-neighbor, so each cycle is found once.
std::vector<std::vector<int>> simple_cycles(const Graph& g, int len) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> used(g.vertex_count, 0);

  auto extend = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (g.adjacent(v, path[0]) && path[1] < path.back()) {
        std::vector<int> edge_set;
        for (std::size_t i = 0; i < path.size(); ++i)
          edge_set.push_back(g.edge_index(path[i], path[(i + 1) % path.size()]));
        std::sort(edge_set.begin(), edge_set.end());
        cycles.push_back(std::move(edge_set));
      }
      return;
    }
    for (int w = path[0] + 1; w < g.vertex_count; ++w) {
      if (used[w] || !g.adjacent(v, w)) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };

  for (int s = 0; s < g.vertex_count; ++s) {
    used.assign(g.vertex_count, 0);
    used[s] = 1;
    path.assign(1, s);
    extend(extend, s);
  }
  return cycles;
}

bool vertex_disjoint_edge_sets(const Graph& g, const std::vector<int>& es,
                               const std::vector<int>& fs) {
  for (int e : es)
    for (int f : fs)
      if (!edges_independent(g, e, f)) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> enumerate_disjoint_cycle_pairs(const Graph& g,
                                                             const PairIndex& idx,
                                                             int len) {
  if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
  const std::vector<std::vector<int>> cycles = simple_cycles(g, len);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (vertex_disjoint_edge_sets(g, cycles[i], cycles[j]))
        out.push_back(cross_pairs(idx, cycles[i], cycles[j]));
  return out;
}

std::vector<std::vector<int>> enumerate_complete_subgraphs(const Graph& g,
                                                           const PairIndex& idx,
                                                           int k) {
  if (k < 4) throw std::invalid_argument("clique size must be at least 4");
  std::vector<std::vector<int>> out;
  for (const auto& vs : vertex_subsets(g.vertex_count, k)) {
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.adjacent(vs[i], vs[j])) {
          clique = false;
          break;
        }
    if (!clique) continue;
    std::vector<int> inside;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) inside.push_back(g.edge_index(vs[i], vs[j]));
    out.push_back(cross_pairs(idx, inside, inside));
  }
  return out;
}

std::string vertex_name(const Graph& g, int v) {
  if (v >= 0 && v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
    return g.labels[v];
  return std::to_string(v);
}

}  // namespace obslab
