#pragma once

#include <optional>
#include <vector>

#include "bip/intpoly.hpp"
#include "bip/permutation.hpp"
#include "bip/polytope.hpp"

namespace bip {

// A_w(t) = sum over u in [id, w] of t^{a_w(u)}.
IntPolynomial a_polynomial(const Permutation& w);

// Poincare polynomial of the generic torus orbit closure: A_w(t^2).
IntPolynomial poincare_polynomial(const Permutation& w);

// Descent-count generating function over S_n; independent of the A_w path.
IntPolynomial eulerian_polynomial(int n);

// b_{2k} = sum_{i=k}^{n} (-1)^{i-k} C(i,k) f_i, packaged as sum b_{2k} t^{2k}.
// f must list f_0..f_n with f_n = 1; n is the intrinsic dimension. Valid for
// smooth polytopes only; a negative Betti number is rejected.
IntPolynomial betti_from_fvector(const std::vector<long long>& f, int n);

struct RichardsonResult {
  IntPolynomial polynomial;  // sum over u in [v,w] of t^{out-degree of the vertex of u}
  // The polynomial is the Poincare polynomial of the Richardson orbit closure
  // only when the polytope admits a retraction sequence for the height
  // function; this certifies the h-induced one.
  bool retraction_certified = false;
};

// Out-degree statistic on the oriented 1-skeleton of Q_{v^{-1}, w^{-1}}
// (vertices are the moment points of [v, w]), height = default_hvec.
RichardsonResult richardson_polynomial(const Permutation& v, const Permutation& w,
                                       const HullLimits& lim = {});

struct VertexReport {
  Permutation u;
  ZVec point;
  int num_edges = 0;
  bool is_simple = false;
  bool is_smooth = false;
  int minus_size = 0;   // |E_w(u)^-|
  int minus_rank = 0;   // rank of {e_p - e_q : (p,q) in E_w(u)^-}
  bool minus_independent = false;
};

struct SmoothnessReport {
  Permutation w;
  std::vector<VertexReport> vertices;  // in interval order
  bool all_smooth = false;
  bool top_smooth = false;             // at the vertex of w itself
  int top_minus_size = 0;
  int top_minus_rank = 0;
  IntPolynomial poincare;              // A_w(t^2)
  std::optional<bool> palindromic;     // reported only when all vertices are smooth
};

SmoothnessReport smoothness_report(const Permutation& w, const HullLimits& lim = {});

}  // namespace bip
