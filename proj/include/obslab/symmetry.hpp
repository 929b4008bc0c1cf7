#pragma once

#include <cstdint>
#include <vector>

#include "obslab/graph.hpp"

// Automorphism groups of small graphs, their induced action on the
// independent-pair index, fixed-subset counts per group element,
// Burnside orbit counting, and canonical orbit representatives.

namespace obslab {

struct Permutation {
  std::vector<int> images;  // vertex i -> images[i]

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int v) const { return images[v]; }

  static Permutation identity(int n);
  Permutation then(const Permutation& second) const;  // apply *this, then second
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images < b.images;
  }
};

Permutation make_permutation(std::vector<int> images);  // validates bijection

struct PermGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // full list, sorted; identity first

  int order() const { return static_cast<int>(elements.size()); }
};

// Full automorphism group by backtracking with degree pruning; guarded
// to n <= 10 (every group here has order at most n!).
PermGroup automorphism_group(const Graph& g);

// The permutation of pair indices induced by a vertex permutation.
// Throws std::invalid_argument when p does not preserve edges or
// independence (i.e. is not an automorphism).
std::vector<int> act_on_pairs(const Permutation& p, const Graph& g, const PairIndex& idx);

// Number of k-subsets of PG fixed setwise by p, from the cycle type of
// the induced pair permutation: a fixed subset is a union of whole
// cycles, so the count is the x^k coefficient of prod (1 + x^len).
// Throws std::overflow_error if a coefficient exceeds 64 bits.
std::uint64_t fixed_ksubset_count(const Permutation& p, const Graph& g, const PairIndex& idx,
                                  int k);

// Orbit count of the automorphism group on k-subsets of PG: the average
// number of fixed subsets over the group. Throws std::logic_error if
// the total is not divisible by the group order.
std::uint64_t burnside_orbit_count(const Graph& g, int k);

struct Orbit {
  CrossingSet representative;  // first of the orbit in lex subset order
  std::uint64_t size = 0;
};

// One representative per orbit of k-subsets under the automorphism
// group, in order of first appearance when k-subsets are enumerated
// lexicographically (so each representative is the lex-least member of
// its orbit). Guard: C(|PG|, k) <= 10^7 and |PG| <= 64.
std::vector<Orbit> orbit_representatives(const Graph& g, int k);

// Conjugacy classes as element indices into group.elements, each class
// sorted, classes ordered by smallest member; the identity's class
// comes first.
std::vector<std::vector<int>> conjugacy_classes(const PermGroup& group);

}  // namespace obslab
