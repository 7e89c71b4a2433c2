#include "bip/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bip/edge_set.hpp"
#include "bip/errors.hpp"
#include "bip/poincare.hpp"
#include "bip/retraction.hpp"
#include "bip/zlinalg.hpp"

namespace bip {

namespace {

std::string point_str(const ZVec& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::multiset<int> ascent_multiset(const Permutation& w) {
  std::multiset<int> out;
  for (const Permutation& u : interval(Permutation::identity(w.n()), w).members)
    out.insert(ascent_count(u, w));
  return out;
}

}  // namespace

CheckResult check_skeleton_oracle(const Permutation& w, const HullLimits& lim) {
  CheckResult r{"skeleton_oracle(" + w.str() + ")", false, ""};
  const BruhatInterval iv = interval(Permutation::identity(w.n()), w);
  const LatticePolytope P = LatticePolytope::hull(moment_points(iv), lim);

  std::set<std::pair<ZVec, ZVec>> combinatorial;
  for (const auto& e : bip_edges_combinatorial(w)) combinatorial.insert(e);

  std::set<std::pair<ZVec, ZVec>> oracle;
  for (int eid : P.faces_of_dim(1)) {
    const Face& e = P.faces()[static_cast<size_t>(eid)];
    ZVec a = P.vertices()[static_cast<size_t>(e.vertices[0])];
    ZVec b = P.vertices()[static_cast<size_t>(e.vertices[1])];
    if (b < a) std::swap(a, b);
    oracle.emplace(std::move(a), std::move(b));
  }

  if (combinatorial == oracle) {
    r.pass = true;
    r.detail = std::to_string(oracle.size()) + " edges";
    return r;
  }
  std::ostringstream os;
  os << "combinatorial " << combinatorial.size() << " edges vs oracle " << oracle.size();
  for (const auto& e : combinatorial)
    if (!oracle.count(e)) {
      os << "; extra " << point_str(e.first) << "-" << point_str(e.second);
      break;
    }
  for (const auto& e : oracle)
    if (!combinatorial.count(e)) {
      os << "; missing " << point_str(e.first) << "-" << point_str(e.second);
      break;
    }
  r.detail = os.str();
  return r;
}

CheckResult check_points_extremal(const Permutation& w, const HullLimits& lim) {
  CheckResult r{"points_extremal(" + w.str() + ")", false, ""};
  const BruhatInterval iv = interval(Permutation::identity(w.n()), w);
  const std::vector<ZVec> pts = moment_points(iv);
  const LatticePolytope P = LatticePolytope::hull(pts, lim);
  if (P.vertices().size() != pts.size()) {
    r.detail = std::to_string(pts.size()) + " interval points but " +
               std::to_string(P.vertices().size()) + " hull vertices";
    return r;
  }
  for (const ZVec& p : pts)
    if (P.vertex_id(p) < 0) {
      r.detail = "point " + point_str(p) + " is not a hull vertex";
      return r;
    }
  r.pass = true;
  r.detail = std::to_string(pts.size()) + " vertices";
  return r;
}

CheckResult check_retraction_route(const Permutation& w, const HullLimits& lim) {
  CheckResult r{"retraction_route(" + w.str() + ")", false, ""};
  try {
    const LatticePolytope P = bip_polytope(w, lim);
    const ZVec a = default_hvec(w.n());
    const OrientedSkeleton sk = orient_by_h(P, a);

    // Per-vertex out-degree equals the combinatorial ascent count.
    for (const Permutation& u : interval(Permutation::identity(w.n()), w).members) {
      const int vid = P.vertex_id(moment_point(u));
      const int deg = static_cast<int>(sk.ascending[static_cast<size_t>(vid)].size());
      const int aw = ascent_count(u, w);
      if (deg != aw) {
        r.detail = "u=" + u.str() + ": skeleton out-degree " + std::to_string(deg) +
                   " != a_w(u) " + std::to_string(aw);
        return r;
      }
    }

    const RetractionSequence rs = h_retraction(P, a);
    validate_sequence(P, rs);

    std::multiset<int> dims;
    for (const RetractionStep& s : rs.steps) dims.insert(s.dim);
    if (dims != ascent_multiset(w)) {
      r.detail = "step dimension multiset differs from the ascent multiset";
      return r;
    }
    const IntPolynomial via_retraction = poincare_from_retraction(rs);
    const IntPolynomial direct = poincare_polynomial(w);
    if (via_retraction != direct) {
      r.detail = "retraction gives " + via_retraction.str() + " but A_w(t^2) = " + direct.str();
      return r;
    }
    if (!smooth_step_certificate(P, rs)) {
      r.detail = "a step vertex is not smooth in its chosen face";
      return r;
    }
    r.pass = true;
    r.detail = via_retraction.str();
  } catch (const HypothesisError& e) {
    r.detail = std::string("hypothesis violated: ") + e.what();
  }
  return r;
}

CheckResult check_betti_smooth(const Permutation& w, const HullLimits& lim) {
  CheckResult r{"betti_smooth(" + w.str() + ")", false, ""};
  const LatticePolytope P = bip_polytope(w, lim);
  for (size_t vid = 0; vid < P.vertices().size(); ++vid)
    if (!classify_vertex(P, static_cast<int>(vid)).is_smooth) {
      r.pass = true;
      r.detail = "not all vertices smooth; formula not applicable";
      return r;
    }
  const IntPolynomial betti = betti_from_fvector(P.fvector(), P.dim());
  const IntPolynomial direct = poincare_polynomial(w);
  if (betti != direct) {
    r.detail = "betti formula gives " + betti.str() + " but A_w(t^2) = " + direct.str();
    return r;
  }
  r.pass = true;
  r.detail = betti.str();
  return r;
}

namespace {

std::string edge_lemma_failure_impl(const Permutation& u, const Permutation& w) {
  const BruhatEdgeSet es = edge_set(u, w);

  std::set<int> sources, targets;
  for (auto [p, q] : es.plus)
    if (!sources.insert(p).second || !targets.insert(q).second)
      return "value with two ascending edges";

  for (auto [p, q] : es.reduced) {
    const int i = u.position_of(p), k = u.position_of(q);
    for (int j = i + 1; j < k; ++j) {
      const int m = u(j);
      if ((p < q && p < m && m < q) || (p > q && p > m && m > q))
        return "intermediate value " + std::to_string(m) + " inside reduced pair (" +
               std::to_string(p) + "," + std::to_string(q) + ")";
    }
  }

  const AscentGraph g = ascent_graph(es);
  for (size_t a = 0; a < g.components.size(); ++a) {
    for (size_t b = a + 1; b < g.components.size(); ++b) {
      bool ab = false, ba = false;
      for (int i : g.components[a])
        for (int ip : g.components[b]) {
          if (i < ip && u(i) > u(ip)) ab = true;
          if (ip < i && u(ip) > u(i)) ba = true;
        }
      if (ab && ba) return "crossing maximal ascents";
    }
  }

  level_function(es);  // throws unless eq:f is satisfiable and satisfied

  ZMat dirs;
  for (auto [p, q] : es.plus) {
    ZVec d(static_cast<size_t>(w.n()), 0);
    d[static_cast<size_t>(p) - 1] = 1;
    d[static_cast<size_t>(q) - 1] = -1;
    dirs.push_back(std::move(d));
  }
  if (integer_rank(dirs) != static_cast<int>(es.plus.size()))
    return "ascending directions are dependent";

  if (es.plus.empty() && !(u == w)) return "no ascents at a non-top element";
  return "";
}

}  // namespace

std::string edge_lemma_failure(const Permutation& u, const Permutation& w) {
  try {
    return edge_lemma_failure_impl(u, w);
  } catch (const HypothesisError& e) {
    return e.what();
  }
}

CheckResult check_edge_lemmas(const Permutation& w) {
  CheckResult r{"edge_lemmas(" + w.str() + ")", false, ""};
  int sinks = 0;
  for (const Permutation& u : interval(Permutation::identity(w.n()), w).members) {
    const std::string failure = edge_lemma_failure(u, w);
    if (!failure.empty()) {
      r.detail = "u=" + u.str() + ": " + failure;
      return r;
    }
    if (ascent_count(u, w) == 0) ++sinks;
  }
  if (sinks != 1) {
    r.detail = std::to_string(sinks) + " elements with no ascents";
    return r;
  }
  r.pass = true;
  return r;
}

CheckResult check_polytope_basics(const Permutation& w, const HullLimits& lim) {
  CheckResult r{"polytope_basics(" + w.str() + ")", false, ""};
  const LatticePolytope P = bip_polytope(w, lim);
  if (!P.euler_ok()) {
    r.detail = "Euler relation fails";
    return r;
  }
  ZVec id_point(static_cast<size_t>(w.n()));
  for (int i = 0; i < w.n(); ++i) id_point[static_cast<size_t>(i)] = i + 1;
  const int vid = P.vertex_id(id_point);
  if (vid < 0) {
    r.detail = "identity point missing from the hull";
    return r;
  }
  if (!classify_vertex(P, vid).is_smooth) {
    r.detail = "identity vertex is not smooth";
    return r;
  }
  r.pass = true;
  return r;
}

CheckResult check_simple_iff_smooth(int n, const HullLimits& lim) {
  CheckResult r{"simple_iff_smooth(S_" + std::to_string(n) + ")", false, ""};
  int polytopes = 0;
  for (const Permutation& w : all_permutations(n)) {
    for (const Permutation& v : all_permutations(n)) {
      if (!bruhat_leq(v, w)) continue;
      const LatticePolytope P = bruhat_interval_polytope(v, w, lim);
      ++polytopes;
      for (size_t vid = 0; vid < P.vertices().size(); ++vid) {
        const VertexClassification c = classify_vertex(P, static_cast<int>(vid));
        if (c.is_simple != c.is_smooth) {
          r.detail = "Q_{" + v.str() + "," + w.str() + "} vertex " +
                     point_str(P.vertices()[vid]) + ": simple=" +
                     std::to_string(c.is_simple) + " smooth=" + std::to_string(c.is_smooth);
          return r;
        }
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(polytopes) + " interval polytopes";
  return r;
}

std::vector<CheckResult> verify_w(const Permutation& w, const HullLimits& lim) {
  return {
      check_skeleton_oracle(w, lim),  check_points_extremal(w, lim),
      check_retraction_route(w, lim), check_betti_smooth(w, lim),
      check_edge_lemmas(w),           check_polytope_basics(w, lim),
  };
}

std::vector<CheckResult> verify_s4() {
  // One aggregated line per invariant; failing w recorded in the detail.
  std::vector<std::string> names;
  std::map<std::string, std::pair<bool, std::string>> agg;
  for (const Permutation& w : all_permutations(4)) {
    for (CheckResult c : verify_w(w)) {
      const std::string key = c.name.substr(0, c.name.find('('));
      if (!agg.count(key)) {
        names.push_back(key);
        agg[key] = {true, ""};
      }
      if (!c.pass) {
        agg[key].first = false;
        if (!agg[key].second.empty()) agg[key].second += "; ";
        agg[key].second += c.name + ": " + c.detail;
      }
    }
  }
  std::vector<CheckResult> out;
  for (const std::string& key : names)
    out.push_back({key + "(all w in S_4)", agg[key].first, agg[key].second});
  out.push_back(check_simple_iff_smooth(4));
  return out;
}

std::vector<RetractionCensusRow> retraction_census(int n, const HullLimits& lim) {
  std::vector<RetractionCensusRow> rows;
  for (const Permutation& w : all_permutations(n)) {
    for (const Permutation& v : all_permutations(n)) {
      if (!bruhat_leq(v, w)) continue;
      const LatticePolytope P = LatticePolytope::hull(moment_points(interval(v, w)), lim);
      RetractionCensusRow row{v, w, false, 0, static_cast<int>(P.vertices().size())};
      row.exists = search_retraction(P).has_value();
      for (size_t vid = 0; vid < P.vertices().size(); ++vid)
        if (classify_vertex(P, static_cast<int>(vid)).is_simple) ++row.simple_vertices;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace bip
