#pragma once

#include <utility>
#include <vector>

#include "bip/permutation.hpp"

namespace bip {

using ValuePair = std::pair<int, int>;

// Candidate edge pairs at the vertex of u in the interval polytope of [id,w]
// and their transitive reduction, split by the direction of the induced edge.
// Pairs are value pairs (u(i), u(j)) with i < j, kept sorted.
struct BruhatEdgeSet {
  Permutation u;
  Permutation w;
  std::vector<ValuePair> raw;      // candidate pairs before reduction
  std::vector<ValuePair> reduced;  // transitive reduction of raw
  std::vector<ValuePair> plus;     // reduced pairs with u(i) < u(j): ascending
  std::vector<ValuePair> minus;    // reduced pairs with u(i) > u(j): descending
};

// All (u(i), u(j)) with i < j, t_{u(i),u(j)} u <= w and
// |length(t_{u(i),u(j)} u) - length(u)| = 1.  Requires u <= w.
std::vector<ValuePair> raw_edges(const Permutation& u, const Permutation& w);

// Unique minimal edge subset of the digraph ([n], edges) with the same
// reachability. Throws HypothesisError if the input digraph has a cycle.
std::vector<ValuePair> transitive_reduction(const std::vector<ValuePair>& edges, int n);

BruhatEdgeSet edge_set(const Permutation& u, const Permutation& w);

// |plus| of edge_set(u, w): the number of ascending edges at the vertex of u.
int ascent_count(const Permutation& u, const Permutation& w);

// Graph on positions 1..n with {i,j} an edge when (u(i),u(j)) is ascending.
// Every connected component is a path; components are the maximal ascents,
// stored as increasing position lists (singletons included).
struct AscentGraph {
  Permutation u;
  std::vector<std::pair<int, int>> position_edges;  // {i,j}, i < j
  std::vector<std::vector<int>> components;
};

AscentGraph ascent_graph(const BruhatEdgeSet& es);

// Level function f on values 1..n with f(p) = f(q) on ascending pairs and
// f(p) > f(q) on descending pairs, built by ordering the maximal ascents.
// Returned vector is indexed by value (entry 0 unused).
// Throws HypothesisError if the ascent order is cyclic or a constraint fails.
std::vector<int> level_function(const BruhatEdgeSet& es);

}  // namespace bip
