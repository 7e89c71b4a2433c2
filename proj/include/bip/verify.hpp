#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bip/permutation.hpp"
#include "bip/polytope.hpp"

namespace bip {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample dump on failure, context otherwise
};

// Combinatorial edge rule vs the hull oracle's dimension-1 faces on the
// moment points of [id, w].
CheckResult check_skeleton_oracle(const Permutation& w, const HullLimits& lim = {});

// Every interval point is a hull vertex.
CheckResult check_points_extremal(const Permutation& w, const HullLimits& lim = {});

// h-induced retraction on the interval polytope: step dims match the ascent
// multiset, the sequence polynomial equals A_w(t^2), every step vertex is
// smooth in its face, and the sequence re-validates.
CheckResult check_retraction_route(const Permutation& w, const HullLimits& lim = {});

// When all vertices are smooth, the f-vector Betti formula equals A_w(t^2).
CheckResult check_betti_smooth(const Permutation& w, const HullLimits& lim = {});

// Edge-set structure for every u <= w: out/in degree at most one on
// ascending pairs, no intermediate value inside a reduced pair, no crossing
// maximal ascents, a valid level function, independent ascending directions,
// and a unique u with no ascents (u = w).
CheckResult check_edge_lemmas(const Permutation& w);

// Same per-pair checks for one u <= w; empty string when every lemma holds,
// otherwise a description of the first violation. Throws nothing.
std::string edge_lemma_failure(const Permutation& u, const Permutation& w);

// Euler relation and the id-vertex smoothness on the interval polytope.
CheckResult check_polytope_basics(const Permutation& w, const HullLimits& lim = {});

// Simple vertices of Bruhat interval polytopes are smooth: exhaustive over
// pairs v <= w in S_n (n <= 4 recommended).
CheckResult check_simple_iff_smooth(int n, const HullLimits& lim = {});

// The full per-w suite used by `verify --w` and `verify --s4`.
std::vector<CheckResult> verify_w(const Permutation& w, const HullLimits& lim = {});

std::vector<CheckResult> verify_s4();

// Which pairs (v, w) in S_n admit a retraction sequence on Q_{v^{-1},w^{-1}};
// reported, never asserted.
struct RetractionCensusRow {
  Permutation v, w;
  bool exists = false;
  int simple_vertices = 0;
  int total_vertices = 0;
};
std::vector<RetractionCensusRow> retraction_census(int n, const HullLimits& lim = {});

}  // namespace bip
