#include "bip/retraction.hpp"

#include <algorithm>
#include <set>

#include "bip/errors.hpp"
#include "bip/zlinalg.hpp"

namespace bip {

namespace {

long long dot(const ZVec& a, const ZVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Edges of P lying inside the face, meeting the vertex.
std::vector<int> edges_in_face_at(const LatticePolytope& P, const Face& f, int v) {
  std::vector<int> out;
  for (int eid : P.edges_at(v)) {
    const Face& e = P.faces()[static_cast<size_t>(eid)];
    if (std::includes(f.vertices.begin(), f.vertices.end(), e.vertices.begin(), e.vertices.end()))
      out.push_back(eid);
  }
  return out;
}

bool simple_in_face(const LatticePolytope& P, const Face& f, int v) {
  return static_cast<int>(edges_in_face_at(P, f, v).size()) == f.dim;
}

}  // namespace

OrientedSkeleton orient_by_h(const LatticePolytope& P, const ZVec& a) {
  if (static_cast<int>(a.size()) != P.ambient_dim())
    throw std::invalid_argument("orient_by_h: height vector has wrong dimension");
  OrientedSkeleton sk;
  sk.hvec = a;
  sk.h.resize(P.vertices().size());
  sk.ascending.assign(P.vertices().size(), {});
  for (size_t i = 0; i < P.vertices().size(); ++i) sk.h[i] = dot(a, P.vertices()[i]);
  for (int eid : P.faces_of_dim(1)) {
    const Face& e = P.faces()[static_cast<size_t>(eid)];
    const int x = e.vertices[0], y = e.vertices[1];
    if (sk.h[static_cast<size_t>(x)] == sk.h[static_cast<size_t>(y)])
      throw HypothesisError("orient_by_h: height vector is not generic (tie on an edge)");
    if (sk.h[static_cast<size_t>(x)] < sk.h[static_cast<size_t>(y)])
      sk.ascending[static_cast<size_t>(x)].push_back(y);
    else
      sk.ascending[static_cast<size_t>(y)].push_back(x);
  }
  for (auto& nbrs : sk.ascending) std::sort(nbrs.begin(), nbrs.end());
  return sk;
}

ZVec default_hvec(int n) {
  ZVec a(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = 1LL << (n - 1 - i);
  return a;
}

RetractionSequence h_retraction(const LatticePolytope& P, const ZVec& a) {
  const OrientedSkeleton sk = orient_by_h(P, a);
  const int nv = static_cast<int>(P.vertices().size());

  std::vector<int> order(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (sk.h[static_cast<size_t>(x)] != sk.h[static_cast<size_t>(y)])
      return sk.h[static_cast<size_t>(x)] < sk.h[static_cast<size_t>(y)];
    return P.vertices()[static_cast<size_t>(x)] < P.vertices()[static_cast<size_t>(y)];
  });

  std::vector<char> processed(static_cast<size_t>(nv), 0);
  RetractionSequence rs;
  rs.source = RetractionSequence::Source::h_induced;

  for (int u : order) {
    const std::vector<int>& asc = sk.ascending[static_cast<size_t>(u)];

    ZMat dirs;
    for (int v : asc) {
      ZVec dvec(P.vertices()[static_cast<size_t>(u)].size());
      for (size_t c = 0; c < dvec.size(); ++c)
        dvec[c] = P.vertices()[static_cast<size_t>(v)][c] - P.vertices()[static_cast<size_t>(u)][c];
      dirs.push_back(std::move(dvec));
    }
    if (integer_rank(dirs) != static_cast<int>(asc.size()))
      throw HypothesisError("h_retraction: ascending edge directions are dependent at vertex " +
                            std::to_string(u));

    // Minimal face containing the vertex together with its ascending
    // neighbours; it is the intersection of all faces containing them.
    std::vector<int> want = asc;
    want.push_back(u);
    std::sort(want.begin(), want.end());
    int chosen = -1;
    for (size_t fid = 0; fid < P.faces().size(); ++fid) {
      const Face& f = P.faces()[fid];
      if (!std::includes(f.vertices.begin(), f.vertices.end(), want.begin(), want.end())) continue;
      if (chosen < 0 ||
          f.vertices.size() < P.faces()[static_cast<size_t>(chosen)].vertices.size())
        chosen = static_cast<int>(fid);
    }
    const Face& q = P.faces()[static_cast<size_t>(chosen)];
    for (size_t fid = 0; fid < P.faces().size(); ++fid) {
      const Face& f = P.faces()[fid];
      if (static_cast<int>(fid) == chosen) continue;
      if (!std::includes(f.vertices.begin(), f.vertices.end(), want.begin(), want.end())) continue;
      if (!std::includes(f.vertices.begin(), f.vertices.end(), q.vertices.begin(), q.vertices.end()))
        throw HypothesisError("h_retraction: no unique minimal face over the ascending star");
    }

    std::vector<int> q_asc;
    for (int eid : edges_in_face_at(P, q, u)) q_asc.push_back(P.edge_other_end(eid, u));
    std::sort(q_asc.begin(), q_asc.end());
    if (q_asc != asc)
      throw HypothesisError("h_retraction: ascending edges do not span a face at vertex " +
                            std::to_string(u));
    if (q.dim != static_cast<int>(asc.size()))
      throw HypothesisError("h_retraction: spanned face has unexpected dimension");
    for (int v : q.vertices)
      if (processed[static_cast<size_t>(v)])
        throw HypothesisError("h_retraction: chosen face reaches into the retracted part");

    RetractionStep step;
    for (size_t fid = 0; fid < P.faces().size(); ++fid) {
      const Face& f = P.faces()[fid];
      bool alive = true;
      for (int v : f.vertices)
        if (processed[static_cast<size_t>(v)]) {
          alive = false;
          break;
        }
      if (alive) step.remaining.push_back(static_cast<int>(fid));
    }
    step.face = chosen;
    step.vertex = u;
    step.dim = q.dim;
    rs.steps.push_back(std::move(step));
    processed[static_cast<size_t>(u)] = 1;
  }
  return rs;
}

namespace {

struct SearchContext {
  const LatticePolytope& P;
  const SearchLimits& lim;
  std::set<std::vector<int>> failed;
  std::vector<std::pair<int, int>> path;  // (vertex, face) choices
};

// Free vertex: unique maximal face of the live subcomplex containing it,
// in which it is simple. Returns the face id, or -1.
int free_vertex_face(const LatticePolytope& P, const std::vector<int>& alive, int v) {
  std::vector<int> candidates;
  for (size_t fid = 0; fid < P.faces().size(); ++fid) {
    const Face& f = P.faces()[fid];
    if (!std::binary_search(f.vertices.begin(), f.vertices.end(), v)) continue;
    if (std::includes(alive.begin(), alive.end(), f.vertices.begin(), f.vertices.end()))
      candidates.push_back(static_cast<int>(fid));
  }
  int maximal = -1;
  for (int fid : candidates) {
    const Face& f = P.faces()[static_cast<size_t>(fid)];
    bool top = true;
    for (int gid : candidates) {
      if (gid == fid) continue;
      const Face& g = P.faces()[static_cast<size_t>(gid)];
      if (g.vertices.size() > f.vertices.size() &&
          std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(),
                        f.vertices.end())) {
        top = false;
        break;
      }
    }
    if (top) {
      if (maximal >= 0) return -1;  // two maximal faces meet at v
      maximal = fid;
    }
  }
  if (maximal < 0) return -1;
  return simple_in_face(P, P.faces()[static_cast<size_t>(maximal)], v) ? maximal : -1;
}

bool search(SearchContext& ctx, std::vector<int>& alive) {
  if (alive.empty()) return true;
  if (ctx.failed.count(alive)) return false;
  for (size_t k = 0; k < alive.size(); ++k) {
    const int v = alive[k];
    const int fid = free_vertex_face(ctx.P, alive, v);
    if (fid < 0) continue;
    ctx.path.emplace_back(v, fid);
    std::vector<int> next = alive;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
    if (search(ctx, next)) return true;
    ctx.path.pop_back();
  }
  if (ctx.failed.size() >= ctx.lim.memo_cap)
    throw GuardError("search_retraction: memo cap exceeded");
  ctx.failed.insert(alive);
  return false;
}

}  // namespace

std::optional<RetractionSequence> search_retraction(const LatticePolytope& P,
                                                    const SearchLimits& lim) {
  SearchContext ctx{P, lim, {}, {}};
  std::vector<int> alive(P.vertices().size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  if (!search(ctx, alive)) return std::nullopt;

  RetractionSequence rs;
  rs.source = RetractionSequence::Source::search;
  std::vector<char> processed(P.vertices().size(), 0);
  for (auto [v, fid] : ctx.path) {
    RetractionStep step;
    for (size_t f = 0; f < P.faces().size(); ++f) {
      bool live = true;
      for (int x : P.faces()[f].vertices)
        if (processed[static_cast<size_t>(x)]) {
          live = false;
          break;
        }
      if (live) step.remaining.push_back(static_cast<int>(f));
    }
    step.face = fid;
    step.vertex = v;
    step.dim = P.faces()[static_cast<size_t>(fid)].dim;
    rs.steps.push_back(std::move(step));
    processed[static_cast<size_t>(v)] = 1;
  }
  return rs;
}

void validate_sequence(const LatticePolytope& P, const RetractionSequence& rs) {
  const size_t nv = P.vertices().size();
  if (rs.steps.size() != nv)
    throw HypothesisError("sequence length differs from the vertex count");

  std::vector<char> chosen(nv, 0);
  for (const RetractionStep& s : rs.steps) {
    if (s.vertex < 0 || s.vertex >= static_cast<int>(nv) || chosen[static_cast<size_t>(s.vertex)])
      throw HypothesisError("a vertex is chosen twice or out of range");
    chosen[static_cast<size_t>(s.vertex)] = 1;
  }

  std::vector<int> expected(P.faces().size());
  for (size_t i = 0; i < expected.size(); ++i) expected[i] = static_cast<int>(i);
  for (size_t i = 0; i < rs.steps.size(); ++i) {
    const RetractionStep& s = rs.steps[i];
    if (s.remaining != expected)
      throw HypothesisError("remaining complex differs from the retraction rule at step " +
                            std::to_string(i + 1));
    if (!std::binary_search(s.remaining.begin(), s.remaining.end(), s.face))
      throw HypothesisError("chosen face is not part of the remaining complex");
    const Face& q = P.faces()[static_cast<size_t>(s.face)];
    if (!std::binary_search(q.vertices.begin(), q.vertices.end(), s.vertex))
      throw HypothesisError("chosen vertex is not in the chosen face");
    if (q.dim != s.dim) throw HypothesisError("recorded step dimension is wrong");
    if (!simple_in_face(P, q, s.vertex))
      throw HypothesisError("chosen vertex is not simple in the chosen face");
    for (int fid : s.remaining) {
      const Face& g = P.faces()[static_cast<size_t>(fid)];
      if (!std::binary_search(g.vertices.begin(), g.vertices.end(), s.vertex)) continue;
      if (g.dim > q.dim && simple_in_face(P, g, s.vertex))
        throw HypothesisError("chosen face is not of maximal dimension for the vertex");
    }
    std::vector<int> next;
    for (int fid : s.remaining) {
      const Face& g = P.faces()[static_cast<size_t>(fid)];
      if (!std::binary_search(g.vertices.begin(), g.vertices.end(), s.vertex))
        next.push_back(fid);
    }
    expected = std::move(next);
  }
  // After the last step nothing may remain; the last chosen face must be the
  // final vertex alone.
  if (!expected.empty()) throw HypothesisError("faces remain after the last step");
  const Face& last = P.faces()[static_cast<size_t>(rs.steps.back().face)];
  if (last.dim != 0) throw HypothesisError("last step is not a single vertex");
}

IntPolynomial poincare_from_retraction(const RetractionSequence& rs) {
  IntPolynomial p;
  for (const RetractionStep& s : rs.steps) p.add_term(2 * s.dim, 1);
  return p;
}

bool smooth_step_certificate(const LatticePolytope& P, const RetractionSequence& rs) {
  for (const RetractionStep& s : rs.steps)
    if (!classify_vertex_in_face(P, s.face, s.vertex).is_smooth) return false;
  return true;
}

}  // namespace bip
