#include "bip/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace bip {

ordered_json polytope_to_json(const LatticePolytope& P) {
  ordered_json j;
  j["vertices"] = P.vertices();
  ordered_json facets = ordered_json::array();
  for (const Facet& f : P.facets())
    facets.push_back(ordered_json{{"normal", f.normal}, {"offset", f.offset}});
  j["facets"] = std::move(facets);
  j["fvector"] = P.fvector();
  return j;
}

LatticePolytope polytope_from_json(const ordered_json& j, const HullLimits& lim) {
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw std::invalid_argument("polytope json: missing or empty \"vertices\"");
  std::vector<ZVec> pts;
  for (const auto& row : j["vertices"]) {
    ZVec p;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw std::invalid_argument("polytope json: vertex coordinates must be integers");
      p.push_back(x.get<long long>());
    }
    pts.push_back(std::move(p));
  }
  LatticePolytope P = LatticePolytope::hull(pts, lim);
  if (j.contains("fvector")) {
    const std::vector<long long> want = j["fvector"].get<std::vector<long long>>();
    if (want != P.fvector())
      throw std::invalid_argument("polytope json: stored fvector disagrees with the hull");
  }
  if (j.contains("facets")) {
    std::vector<std::pair<ZVec, long long>> want, have;
    for (const auto& f : j["facets"])
      want.emplace_back(f["normal"].get<ZVec>(), f["offset"].get<long long>());
    for (const Facet& f : P.facets()) have.emplace_back(f.normal, f.offset);
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have)
      throw std::invalid_argument("polytope json: stored facets disagree with the hull");
  }
  return P;
}

ordered_json polynomial_to_json(const IntPolynomial& p) {
  return ordered_json{{"coeffs", p.coeffs()}, {"pretty", p.str()}};
}

ordered_json retraction_to_json(const LatticePolytope& P, const RetractionSequence& rs) {
  ordered_json j;
  j["source"] = rs.source == RetractionSequence::Source::h_induced ? "h" : "search";
  ordered_json steps = ordered_json::array();
  for (const RetractionStep& s : rs.steps) {
    ordered_json step;
    step["vertex"] = P.vertices()[static_cast<size_t>(s.vertex)];
    ordered_json fv = ordered_json::array();
    for (int vid : P.faces()[static_cast<size_t>(s.face)].vertices)
      fv.push_back(P.vertices()[static_cast<size_t>(vid)]);
    step["face_vertices"] = std::move(fv);
    step["step_dim"] = s.dim;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["poincare"] = polynomial_to_json(poincare_from_retraction(rs));
  return j;
}

}  // namespace bip
