#include "obslab/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace obslab {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::then(const Permutation& second) const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 0; i < size(); ++i) out.images[i] = second.images[images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 0; i < size(); ++i) out.images[images[i]] = i;
  return out;
}

Permutation make_permutation(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
  return Permutation{std::move(images)};
}

namespace {

bool preserves_adjacency(const Graph& g, const std::vector<int>& images) {
  for (const auto& [u, v] : g.edges)
    if (!g.adjacent(images[u], images[v])) return false;
  return true;
}

// Greedy generating set: add any element outside the closure of the
// generators found so far. Groups here have order <= n! with n <= 10
// but in practice <= 720, so closure by repeated products is cheap.
std::vector<Permutation> reduce_generators(const std::vector<Permutation>& elements, int n) {
  std::vector<Permutation> gens;
  std::set<Permutation> closure{Permutation::identity(n)};
  for (const Permutation& p : elements) {
    if (closure.count(p)) continue;
    gens.push_back(p);
    // Rebuild the closure with the new generator.
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& q : frontier)
        for (const Permutation& r : gens) {
          Permutation qr = q.then(r);
          if (closure.insert(qr).second) next.push_back(std::move(qr));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

PermGroup automorphism_group(const Graph& g) {
  if (g.vertex_count > 10) throw std::domain_error("automorphism search limited to 10 vertices");
  const int n = g.vertex_count;

  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);

  PermGroup group;
  std::vector<int> images(n, -1);
  std::vector<char> used(n, 0);

  auto assign = [&](auto&& self, int v) -> void {
    if (v == n) {
      group.elements.push_back(Permutation{images});
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || degree[w] != degree[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.adjacent(u, v) != g.adjacent(images[u], w)) ok = false;
      if (!ok) continue;
      used[w] = 1;
      images[v] = w;
      self(self, v + 1);
      used[w] = 0;
      images[v] = -1;
    }
  };
  assign(assign, 0);

  std::sort(group.elements.begin(), group.elements.end());
  group.generators = reduce_generators(group.elements, n);
  return group;
}

std::vector<int> act_on_pairs(const Permutation& p, const Graph& g, const PairIndex& idx) {
  if (p.size() != g.vertex_count) throw std::invalid_argument("permutation size mismatch");
  if (!preserves_adjacency(g, p.images))
    throw std::invalid_argument("permutation is not a graph automorphism");

  std::vector<int> edge_image(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    edge_image[e] = g.edge_index(p(u), p(v));
  }

  std::vector<int> out(idx.size());
  for (int i = 0; i < idx.size(); ++i) {
    const auto [e, f] = idx.pair_at(i);
    const int j = idx.index_of(edge_image[e], edge_image[f]);
    if (j < 0) throw std::invalid_argument("image pair is not independent");
    out[i] = j;
  }
  return out;
}

namespace {

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<int> lens;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t v = s; !seen[v]; v = perm[v]) {
      seen[v] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > ~b) throw std::overflow_error("fixed-subset count exceeds 64 bits");
  return a + b;
}

}  // namespace

std::uint64_t fixed_ksubset_count(const Permutation& p, const Graph& g, const PairIndex& idx,
                                  int k) {
  if (k < 0 || k > idx.size()) return 0;
  // 0/1 knapsack over cycle lengths: a fixed subset picks whole cycles.
  std::vector<std::uint64_t> coef(k + 1, 0);
  coef[0] = 1;
  for (int len : cycle_lengths(act_on_pairs(p, g, idx)))
    for (int j = k; j >= len; --j) coef[j] = checked_add(coef[j], coef[j - len]);
  return coef[k];
}

std::uint64_t burnside_orbit_count(const Graph& g, int k) {
  const PermGroup group = automorphism_group(g);
  const PairIndex idx = independent_pairs(g);
  std::uint64_t total = 0;
  for (const Permutation& p : group.elements)
    total = checked_add(total, fixed_ksubset_count(p, g, idx, k));
  if (total % group.order() != 0)
    throw std::logic_error("fixed-point total not divisible by group order");
  return total / group.order();
}

namespace {

// Clamped: anything past 10^15 reports "huge", which is all the
// enumeration guard needs.
std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1'000'000'000'000'000ull) return ~std::uint64_t{0};
  }
  return r;
}

}  // namespace

std::vector<Orbit> orbit_representatives(const Graph& g, int k) {
  const PairIndex idx = independent_pairs(g);
  if (idx.size() > 64) throw std::domain_error("orbit enumeration limited to 64 pairs");
  if (binomial(idx.size(), k) > 10'000'000)
    throw std::domain_error("subset space too large to enumerate");

  const PermGroup group = automorphism_group(g);
  std::vector<std::vector<int>> actions;
  for (const Permutation& p : group.elements) actions.push_back(act_on_pairs(p, g, idx));

  std::vector<Orbit> orbits;
  std::unordered_set<std::uint64_t> seen;

  // k-subsets in lexicographic tuple order; the first appearance of an
  // orbit is its lex-least member.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  const int n = idx.size();
  bool more = k <= n;
  if (k == 0) {
    orbits.push_back({CrossingSet(n), 1});
    more = false;
  }
  while (more) {
    std::uint64_t mask = 0;
    for (int i : pick) mask |= std::uint64_t{1} << i;
    if (!seen.count(mask)) {
      Orbit orbit;
      orbit.representative = CrossingSet::from_indices(n, pick);
      for (const std::vector<int>& act : actions) {
        std::uint64_t image = 0;
        for (int i : pick) image |= std::uint64_t{1} << act[i];
        if (seen.insert(image).second) ++orbit.size;
      }
      orbits.push_back(std::move(orbit));
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return orbits;
}

std::vector<std::vector<int>> conjugacy_classes(const PermGroup& group) {
  const int order = group.order();
  auto find_index = [&](const Permutation& p) {
    const auto it = std::lower_bound(group.elements.begin(), group.elements.end(), p);
    return static_cast<int>(it - group.elements.begin());
  };

  std::vector<std::vector<int>> classes;
  std::vector<char> assigned(order, 0);
  for (int i = 0; i < order; ++i) {
    if (assigned[i]) continue;
    std::vector<int> cls;
    for (int j = 0; j < order; ++j) {
      const Permutation conj =
          group.elements[j].inverse().then(group.elements[i]).then(group.elements[j]);
      const int c = find_index(conj);
      if (!assigned[c]) {
        assigned[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace obslab
