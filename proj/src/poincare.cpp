#include "bip/poincare.hpp"

#include <stdexcept>

#include "bip/edge_set.hpp"
#include "bip/errors.hpp"
#include "bip/retraction.hpp"

namespace bip {

IntPolynomial a_polynomial(const Permutation& w) {
  const BruhatInterval iv = interval(Permutation::identity(w.n()), w);
  IntPolynomial p;
  for (const Permutation& u : iv.members) p.add_term(ascent_count(u, w), 1);
  return p;
}

IntPolynomial poincare_polynomial(const Permutation& w) { return a_polynomial(w).stretch(2); }

IntPolynomial eulerian_polynomial(int n) {
  if (n > 8) throw GuardError("eulerian_polynomial guarded to n <= 8");
  IntPolynomial p;
  for (const Permutation& u : all_permutations(n)) {
    int descents = 0;
    for (int i = 1; i < n; ++i)
      if (u(i) > u(i + 1)) ++descents;
    p.add_term(descents, 1);
  }
  return p;
}

IntPolynomial betti_from_fvector(const std::vector<long long>& f, int n) {
  if (n < 0 || static_cast<int>(f.size()) != n + 1)
    throw std::invalid_argument("betti_from_fvector: need entries f_0..f_n");
  if (f[static_cast<size_t>(n)] != 1)
    throw std::invalid_argument("betti_from_fvector: f_n must be 1 (the polytope itself)");
  std::vector<std::vector<long long>> choose(static_cast<size_t>(n) + 1,
                                             std::vector<long long>(static_cast<size_t>(n) + 1, 0));
  for (int i = 0; i <= n; ++i) {
    choose[static_cast<size_t>(i)][0] = 1;
    for (int k = 1; k <= i; ++k)
      choose[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          choose[static_cast<size_t>(i) - 1][static_cast<size_t>(k) - 1] +
          (k <= i - 1 ? choose[static_cast<size_t>(i) - 1][static_cast<size_t>(k)] : 0);
  }
  IntPolynomial p;
  for (int k = 0; k <= n; ++k) {
    long long b = 0;
    for (int i = k; i <= n; ++i) {
      const long long term = choose[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                             f[static_cast<size_t>(i)];
      b += ((i - k) % 2 == 0) ? term : -term;
    }
    if (b < 0)
      throw std::invalid_argument("betti_from_fvector: negative Betti number; "
                                  "input polytope not smooth or malformed f-vector");
    p.add_term(2 * k, b);
  }
  return p;
}

RichardsonResult richardson_polynomial(const Permutation& v, const Permutation& w,
                                       const HullLimits& lim) {
  const BruhatInterval iv = interval(v, w);
  const std::vector<ZVec> pts = moment_points(iv);
  const LatticePolytope P = LatticePolytope::hull(pts, lim);
  const ZVec a = default_hvec(w.n());
  const OrientedSkeleton sk = orient_by_h(P, a);

  RichardsonResult out;
  for (const ZVec& p : pts) {
    const int vid = P.vertex_id(p);
    if (vid < 0) throw std::logic_error("richardson_polynomial: interval point is not a vertex");
    out.polynomial.add_term(static_cast<int>(sk.ascending[static_cast<size_t>(vid)].size()), 1);
  }
  try {
    validate_sequence(P, h_retraction(P, a));
    out.retraction_certified = true;
  } catch (const HypothesisError&) {
    out.retraction_certified = false;
  }
  return out;
}

SmoothnessReport smoothness_report(const Permutation& w, const HullLimits& lim) {
  SmoothnessReport rep{w, {}, true, false, 0, 0, {}, std::nullopt};
  const BruhatInterval iv = interval(Permutation::identity(w.n()), w);
  const LatticePolytope P = bip_polytope(w, lim);

  for (const Permutation& u : iv.members) {
    VertexReport vr{u, moment_point(u)};
    const int vid = P.vertex_id(vr.point);
    if (vid < 0) throw std::logic_error("smoothness_report: interval point is not a vertex");
    const VertexClassification cls = classify_vertex(P, vid);
    vr.num_edges = static_cast<int>(cls.edge_directions.size());
    vr.is_simple = cls.is_simple;
    vr.is_smooth = cls.is_smooth;

    const BruhatEdgeSet es = edge_set(u, w);
    ZMat dirs;
    for (auto [p, q] : es.minus) {
      ZVec dvec(static_cast<size_t>(w.n()), 0);
      dvec[static_cast<size_t>(p) - 1] = 1;
      dvec[static_cast<size_t>(q) - 1] = -1;
      dirs.push_back(std::move(dvec));
    }
    vr.minus_size = static_cast<int>(es.minus.size());
    vr.minus_rank = integer_rank(dirs);
    vr.minus_independent = vr.minus_rank == vr.minus_size;

    rep.all_smooth = rep.all_smooth && vr.is_smooth;
    if (u == w) {
      rep.top_smooth = vr.is_smooth;
      rep.top_minus_size = vr.minus_size;
      rep.top_minus_rank = vr.minus_rank;
    }
    rep.vertices.push_back(std::move(vr));
  }
  rep.poincare = poincare_polynomial(w);
  if (rep.all_smooth) rep.palindromic = rep.poincare.palindromic();
  return rep;
}

}  // namespace bip
