#include "bip/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bip/edge_set.hpp"
#include "bip/errors.hpp"

namespace bip {

namespace {

// Determinant of a row-major k x k block, k <= 5; no heap traffic, the
// candidate loop below runs this millions of times.
long long det_small(const long long* a, int k) {
  switch (k) {
    case 0:
      return 1;
    case 1:
      return a[0];
    case 2:
      return a[0] * a[3] - a[1] * a[2];
    case 3:
      return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
             a[2] * (a[3] * a[7] - a[4] * a[6]);
    default: {
      long long acc = 0;
      long long minor[16];
      for (int c = 0; c < k; ++c) {
        if (a[c] == 0) continue;
        int mi = 0;
        for (int r = 1; r < k; ++r)
          for (int cc = 0; cc < k; ++cc)
            if (cc != c) minor[mi++] = a[r * k + cc];
        const long long sub = det_small(minor, k - 1);
        acc += ((c % 2 == 0) ? a[c] : -a[c]) * sub;
      }
      return acc;
    }
  }
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int affine_rank(const std::vector<ZVec>& pts, const std::vector<int>& ids) {
  if (ids.empty()) return -1;
  IntRowSpace sp;
  const ZVec& base = pts[static_cast<size_t>(ids[0])];
  int r = 0;
  for (size_t k = 1; k < ids.size(); ++k) {
    ZVec d(base.size());
    for (size_t c = 0; c < base.size(); ++c)
      d[c] = pts[static_cast<size_t>(ids[k])][c] - base[c];
    if (sp.add(std::move(d))) ++r;
  }
  return r;
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<ZVec>& points, const HullLimits& lim) {
  if (points.empty()) throw std::invalid_argument("hull: no points");
  const int n = static_cast<int>(points[0].size());
  for (const ZVec& p : points)
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("hull: ragged point list");
  if (n > lim.max_ambient_dim)
    throw GuardError("hull: ambient dimension exceeds guard (" +
                     std::to_string(lim.max_ambient_dim) + ")");
  if (static_cast<int>(points.size()) > lim.max_points)
    throw GuardError("hull: point count exceeds guard (" + std::to_string(lim.max_points) + ")");

  std::vector<ZVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope P;
  P.ambient_dim_ = n;

  // Linear span of the differences and its saturated lattice basis.
  ZMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    ZVec d(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
      d[static_cast<size_t>(c)] = pts[i][static_cast<size_t>(c)] - pts[0][static_cast<size_t>(c)];
    diffs.push_back(std::move(d));
  }
  P.lin_basis_ = saturation_basis(diffs, n);
  const int d = static_cast<int>(P.lin_basis_.size());
  P.dim_ = d;

  if (d == 0) {
    P.vertices_ = {pts[0]};
    P.vertex_index_[pts[0]] = 0;
    P.faces_ = {Face{{0}, 0}};
    P.full_face_id_ = 0;
    P.build_face_lattice();
    return P;
  }

  // Intrinsic integer coordinates of every point, kept flat for the
  // candidate scan.
  SpanSolver solver(P.lin_basis_);
  const int m = static_cast<int>(pts.size());
  std::vector<long long> X(static_cast<size_t>(m) * static_cast<size_t>(d));
  for (int i = 0; i < m; ++i) {
    ZVec t(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
      t[static_cast<size_t>(c)] =
          pts[static_cast<size_t>(i)][static_cast<size_t>(c)] - pts[0][static_cast<size_t>(c)];
    auto x = solver.coords(t);
    if (!x) throw std::logic_error("hull: point has no lattice coordinates in saturation basis");
    for (int c = 0; c < d; ++c)
      X[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(c)] =
          (*x)[static_cast<size_t>(c)];
  }

  // Enumerate d-subsets; keep supporting hyperplanes only.
  struct CandidateFacet {
    ZVec normal;  // intrinsic, primitive, points satisfy <g,x> <= offset
    long long offset;
  };
  std::set<std::pair<ZVec, long long>> seen;
  std::vector<CandidateFacet> raw_facets;

  std::vector<int> idx(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
  long long rows[5][6];   // (d-1) x d difference block
  long long minor[25];    // (d-1) x (d-1)
  long long g[6];

  auto process = [&](const std::vector<int>& sel) {
    const long long* base = &X[static_cast<size_t>(sel[0]) * static_cast<size_t>(d)];
    for (int k = 1; k < d; ++k) {
      const long long* pk = &X[static_cast<size_t>(sel[static_cast<size_t>(k)]) *
                               static_cast<size_t>(d)];
      for (int c = 0; c < d; ++c) rows[k - 1][c] = pk[c] - base[c];
    }
    // Generalized cross product via cofactors of the difference block.
    bool zero = true;
    for (int j = 0; j < d; ++j) {
      int mi = 0;
      for (int r = 0; r < d - 1; ++r)
        for (int c = 0; c < d; ++c)
          if (c != j) minor[mi++] = rows[r][c];
      const long long v = det_small(minor, d - 1);
      g[j] = (j % 2 == 0) ? v : -v;
      if (v != 0) zero = false;
    }
    if (zero) return;  // affinely dependent subset
    long long gg = 0;
    for (int j = 0; j < d; ++j) gg = gcd_ll(gg, g[j]);
    if (gg > 1)
      for (int j = 0; j < d; ++j) g[j] /= gg;
    long long off = 0;
    for (int c = 0; c < d; ++c) off += g[c] * base[c];
    bool pos = false, neg = false;
    const long long* xp = X.data();
    for (int i = 0; i < m; ++i, xp += d) {
      long long s = -off;
      for (int c = 0; c < d; ++c) s += g[c] * xp[c];
      if (s > 0) {
        if (neg) return;  // not supporting
        pos = true;
      } else if (s < 0) {
        if (pos) return;
        neg = true;
      }
    }
    ZVec gv(static_cast<size_t>(d));
    long long o = off;
    for (int c = 0; c < d; ++c) gv[static_cast<size_t>(c)] = pos ? -g[c] : g[c];
    if (pos) o = -off;
    if (seen.emplace(gv, o).second) raw_facets.push_back({std::move(gv), o});
  };

  // All d-subsets of the m points (lexicographic).
  if (m >= d) {
    while (true) {
      process(idx);
      int k = d - 1;
      while (k >= 0 && idx[static_cast<size_t>(k)] == m - d + k) --k;
      if (k < 0) break;
      ++idx[static_cast<size_t>(k)];
      for (int j = k + 1; j < d; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
    }
  }
  if (raw_facets.empty()) throw std::logic_error("hull: no supporting hyperplanes found");

  // Tight sets over the input points; extremal points are those whose tight
  // facet normals span the whole intrinsic space.
  std::vector<std::vector<int>> tight(raw_facets.size());
  for (size_t fi = 0; fi < raw_facets.size(); ++fi) {
    const auto& f = raw_facets[fi];
    for (int i = 0; i < m; ++i) {
      long long s = -f.offset;
      for (int c = 0; c < d; ++c)
        s += f.normal[static_cast<size_t>(c)] *
             X[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(c)];
      if (s == 0) tight[fi].push_back(i);
    }
  }
  std::vector<std::vector<int>> tight_at(static_cast<size_t>(m));
  for (size_t fi = 0; fi < raw_facets.size(); ++fi)
    for (int i : tight[fi]) tight_at[static_cast<size_t>(i)].push_back(static_cast<int>(fi));

  std::vector<int> vmap(static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    ZMat normals;
    for (int fi : tight_at[static_cast<size_t>(i)])
      normals.push_back(raw_facets[static_cast<size_t>(fi)].normal);
    if (integer_rank(normals) == d) {
      vmap[static_cast<size_t>(i)] = static_cast<int>(P.vertices_.size());
      P.vertices_.push_back(pts[static_cast<size_t>(i)]);
    }
  }
  for (size_t i = 0; i < P.vertices_.size(); ++i)
    P.vertex_index_[P.vertices_[i]] = static_cast<int>(i);

  // Ambient facet data: normal in span(lin_basis) via the Gram adjugate.
  const ZMat& B = P.lin_basis_;
  ZMat gram(static_cast<size_t>(d), ZVec(static_cast<size_t>(d), 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < n; ++c)
        gram[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            B[static_cast<size_t>(i)][static_cast<size_t>(c)] *
            B[static_cast<size_t>(j)][static_cast<size_t>(c)];
  ZMat gram_adj(static_cast<size_t>(d), ZVec(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ZMat minor;
      for (int r = 0; r < d; ++r) {
        if (r == i) continue;
        ZVec row;
        for (int c = 0; c < d; ++c)
          if (c != j) row.push_back(gram[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        minor.push_back(std::move(row));
      }
      long long cof = det(std::move(minor));
      if ((i + j) % 2) cof = -cof;
      gram_adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = cof;
    }

  for (size_t fi = 0; fi < raw_facets.size(); ++fi) {
    Facet fac;
    // m_ambient = B^T * adj(Gram) * g, primitive; orientation matches g
    // because det(Gram) > 0.
    ZVec y(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        y[static_cast<size_t>(i)] += gram_adj[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                     raw_facets[fi].normal[static_cast<size_t>(j)];
    ZVec normal(static_cast<size_t>(n), 0);
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < d; ++i)
        normal[static_cast<size_t>(c)] += B[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                                          y[static_cast<size_t>(i)];
    normal = primitive(std::move(normal));
    fac.normal = std::move(normal);
    for (int i : tight[fi])
      if (vmap[static_cast<size_t>(i)] >= 0) fac.vertices.push_back(vmap[static_cast<size_t>(i)]);
    std::sort(fac.vertices.begin(), fac.vertices.end());
    long long off = 0;
    const ZVec& anyv = P.vertices_[static_cast<size_t>(fac.vertices.at(0))];
    for (int c = 0; c < n; ++c) off += fac.normal[static_cast<size_t>(c)] * anyv[static_cast<size_t>(c)];
    fac.offset = off;
    P.facets_.push_back(std::move(fac));
  }
  std::sort(P.facets_.begin(), P.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });

  P.build_face_lattice();
  return P;
}

void LatticePolytope::build_face_lattice() {
  std::set<std::vector<int>> sets;
  std::vector<int> all(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) all[i] = static_cast<int>(i);
  sets.insert(all);
  for (const Facet& f : facets_) sets.insert(f.vertices);

  // Closure under intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(sets.begin(), sets.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> c = intersect_sorted(current[i], current[j]);
        if (!c.empty() && sets.insert(std::move(c)).second) grew = true;
      }
  }

  faces_.clear();
  for (const auto& s : sets) faces_.push_back(Face{s, affine_rank(vertices_, s)});
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });

  faces_by_dim_.assign(static_cast<size_t>(dim_) + 1, {});
  for (size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    if (f.dim < 0 || f.dim > dim_) throw std::logic_error("face lattice: bad face dimension");
    faces_by_dim_[static_cast<size_t>(f.dim)].push_back(static_cast<int>(i));
    if (f.vertices.size() == vertices_.size()) full_face_id_ = static_cast<int>(i);
  }

  edges_by_vertex_.assign(vertices_.size(), {});
  for (int eid : faces_by_dim_[std::min(1, dim_)]) {
    const Face& e = faces_[static_cast<size_t>(eid)];
    if (e.dim != 1) continue;
    if (e.vertices.size() != 2) throw std::logic_error("face lattice: edge without two vertices");
    edges_by_vertex_[static_cast<size_t>(e.vertices[0])].push_back(eid);
    edges_by_vertex_[static_cast<size_t>(e.vertices[1])].push_back(eid);
  }
}

const std::vector<int>& LatticePolytope::faces_of_dim(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d > dim_) return empty;
  return faces_by_dim_[static_cast<size_t>(d)];
}

const std::vector<int>& LatticePolytope::edges_at(int vertex_id) const {
  return edges_by_vertex_.at(static_cast<size_t>(vertex_id));
}

int LatticePolytope::edge_other_end(int edge_face_id, int vertex_id) const {
  const Face& e = faces_.at(static_cast<size_t>(edge_face_id));
  if (e.dim != 1) throw std::invalid_argument("not an edge face");
  return e.vertices[0] == vertex_id ? e.vertices[1] : e.vertices[0];
}

std::vector<long long> LatticePolytope::fvector() const {
  std::vector<long long> f(static_cast<size_t>(dim_) + 1, 0);
  for (const Face& face : faces_) ++f[static_cast<size_t>(face.dim)];
  return f;
}

bool LatticePolytope::euler_ok() const {
  // Boundary complex convention: sum_{i=0}^{dim-1} (-1)^i f_i = 1 - (-1)^dim.
  const std::vector<long long> f = fvector();
  long long lhs = 0;
  for (int i = 0; i < dim_; ++i)
    lhs += (i % 2 == 0 ? 1 : -1) * f[static_cast<size_t>(i)];
  const long long rhs = 1 - (dim_ % 2 == 0 ? 1 : -1);
  if (dim_ == 0) return f[0] == 1;
  return lhs == rhs && f[static_cast<size_t>(dim_)] == 1;
}

int LatticePolytope::vertex_id(const ZVec& p) const {
  auto it = vertex_index_.find(p);
  return it == vertex_index_.end() ? -1 : it->second;
}

namespace {

VertexClassification classify_against(const LatticePolytope& P, int vertex_id,
                                      const std::vector<int>& edge_face_ids, int face_dim,
                                      const ZMat& lattice_basis) {
  VertexClassification out;
  out.vertex = vertex_id;
  const ZVec& v = P.vertices()[static_cast<size_t>(vertex_id)];
  for (int eid : edge_face_ids) {
    const int o = P.edge_other_end(eid, vertex_id);
    ZVec dir(v.size());
    for (size_t c = 0; c < v.size(); ++c)
      dir[c] = P.vertices()[static_cast<size_t>(o)][c] - v[c];
    out.edge_directions.push_back(primitive(std::move(dir)));
  }
  out.is_simple = static_cast<int>(out.edge_directions.size()) == face_dim;
  if (!out.is_simple) return out;
  if (face_dim == 0) {
    out.is_smooth = true;
    return out;
  }
  SpanSolver solver(lattice_basis);
  ZMat coords;
  for (const ZVec& dir : out.edge_directions) {
    auto x = solver.coords(dir);
    if (!x) return out;  // direction outside the lattice span: singular
    coords.push_back(std::move(*x));
  }
  const std::vector<long long> inv = smith_invariants(coords);
  out.is_smooth = static_cast<int>(inv.size()) == face_dim &&
                  std::all_of(inv.begin(), inv.end(), [](long long x) { return x == 1; });
  return out;
}

}  // namespace

VertexClassification classify_vertex(const LatticePolytope& P, int vertex_id) {
  if (vertex_id < 0 || vertex_id >= static_cast<int>(P.vertices().size()))
    throw std::invalid_argument("classify_vertex: vertex index out of range");
  return classify_against(P, vertex_id, P.edges_at(vertex_id), P.dim(), P.lin_basis());
}

VertexClassification classify_vertex_in_face(const LatticePolytope& P, int face_id, int vertex_id) {
  const Face& f = P.faces().at(static_cast<size_t>(face_id));
  if (!std::binary_search(f.vertices.begin(), f.vertices.end(), vertex_id))
    throw std::invalid_argument("classify_vertex_in_face: vertex not in face");
  std::vector<int> edge_ids;
  for (int eid : P.edges_at(vertex_id)) {
    const Face& e = P.faces()[static_cast<size_t>(eid)];
    if (std::includes(f.vertices.begin(), f.vertices.end(), e.vertices.begin(), e.vertices.end()))
      edge_ids.push_back(eid);
  }
  const ZVec& v = P.vertices()[static_cast<size_t>(vertex_id)];
  ZMat diffs;
  for (int w : f.vertices) {
    if (w == vertex_id) continue;
    ZVec dvec(v.size());
    for (size_t c = 0; c < v.size(); ++c)
      dvec[c] = P.vertices()[static_cast<size_t>(w)][c] - v[c];
    diffs.push_back(std::move(dvec));
  }
  const ZMat lattice = saturation_basis(diffs, P.ambient_dim());
  return classify_against(P, vertex_id, edge_ids, f.dim, lattice);
}

// --- Bruhat interval polytopes -------------------------------------------

ZVec moment_point(const Permutation& u) {
  const Permutation inv = u.inverse();
  ZVec p(static_cast<size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) p[static_cast<size_t>(i) - 1] = inv(i);
  return p;
}

std::vector<ZVec> moment_points(const BruhatInterval& iv) {
  std::vector<ZVec> pts;
  pts.reserve(iv.members.size());
  for (const Permutation& u : iv.members) pts.push_back(moment_point(u));
  return pts;
}

std::vector<ZVec> word_points(const BruhatInterval& iv) {
  std::vector<ZVec> pts;
  pts.reserve(iv.members.size());
  for (const Permutation& u : iv.members) {
    ZVec p(static_cast<size_t>(u.n()));
    for (int i = 1; i <= u.n(); ++i) p[static_cast<size_t>(i) - 1] = u(i);
    pts.push_back(std::move(p));
  }
  return pts;
}

LatticePolytope bip_polytope(const Permutation& w, const HullLimits& lim) {
  return LatticePolytope::hull(moment_points(interval(Permutation::identity(w.n()), w)), lim);
}

LatticePolytope bruhat_interval_polytope(const Permutation& v, const Permutation& w,
                                         const HullLimits& lim) {
  return LatticePolytope::hull(word_points(interval(v, w)), lim);
}

std::vector<std::pair<ZVec, ZVec>> bip_edges_combinatorial(const Permutation& w) {
  std::set<std::pair<ZVec, ZVec>> edges;
  const BruhatInterval iv = interval(Permutation::identity(w.n()), w);
  for (const Permutation& u : iv.members) {
    const BruhatEdgeSet es = edge_set(u, w);
    const ZVec pu = moment_point(u);
    for (auto [p, q] : es.reduced) {
      ZVec pv = moment_point(u.swap_values(p, q));
      if (pu < pv)
        edges.emplace(pu, pv);
      else
        edges.emplace(pv, pu);
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace bip
