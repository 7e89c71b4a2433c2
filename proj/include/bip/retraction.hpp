#pragma once

#include <optional>
#include <vector>

#include "bip/intpoly.hpp"
#include "bip/polytope.hpp"

namespace bip {

// 1-skeleton of a polytope oriented by a linear form: each edge points
// toward the larger value of <a, .>.
struct OrientedSkeleton {
  ZVec hvec;
  std::vector<long long> h;                 // per vertex id
  std::vector<std::vector<int>> ascending;  // per vertex: ascending neighbours
};

// Throws HypothesisError when some edge has equal values at both ends.
OrientedSkeleton orient_by_h(const LatticePolytope& P, const ZVec& a);

// Strictly decreasing powers of two: a_i = 2^(n-i). Generic on every Bruhat
// interval polytope edge.
ZVec default_hvec(int n);

struct RetractionStep {
  std::vector<int> remaining;  // face ids of the current subcomplex
  int face = -1;               // chosen face id
  int vertex = -1;             // chosen vertex id
  int dim = 0;                 // dim of the chosen face
};

struct RetractionSequence {
  enum class Source { h_induced, search };
  Source source = Source::search;
  std::vector<RetractionStep> steps;
};

// Retraction sequence induced by the linear form: vertices in increasing h
// (ties broken by lexicographic coordinates); the face chosen at each vertex
// is the minimal face spanned by its ascending edges. Throws HypothesisError
// when the ascending directions are dependent, do not span a face, or the
// spanned face reaches into the already-retracted part.
RetractionSequence h_retraction(const LatticePolytope& P, const ZVec& a);

struct SearchLimits {
  std::size_t memo_cap = 1'000'000;
};

// Exhaustive backtracking over free vertices: a vertex is free in the
// current subcomplex when it lies in a unique maximal face and is simple
// there. Deterministic order; memoizes failed subcomplex states. Returns
// nullopt when no retraction sequence exists.
std::optional<RetractionSequence> search_retraction(const LatticePolytope& P,
                                                    const SearchLimits& lim = {});

// Re-validates the defining invariants of a sequence, independent of how it
// was constructed. Throws HypothesisError on any violation.
void validate_sequence(const LatticePolytope& P, const RetractionSequence& rs);

// Coefficient of t^{2d} = number of steps with chosen-face dimension d.
IntPolynomial poincare_from_retraction(const RetractionSequence& rs);

// True when every chosen vertex is smooth in its chosen face, relative to
// the face's intrinsic lattice.
bool smooth_step_certificate(const LatticePolytope& P, const RetractionSequence& rs);

}  // namespace bip
