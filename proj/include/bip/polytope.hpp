#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bip/permutation.hpp"
#include "bip/zlinalg.hpp"

namespace bip {

struct HullLimits {
  int max_ambient_dim = 6;
  int max_points = 200;
};

struct Facet {
  ZVec normal;           // primitive, interior side satisfies <normal, x> < offset
  long long offset = 0;  // inequality <normal, x> <= offset
  std::vector<int> vertices;
};

struct Face {
  std::vector<int> vertices;  // sorted hull-vertex ids
  int dim = 0;
};

// Exact-lattice polytope: deduplicated extremal vertex list, irredundant
// facets, the full face lattice (graded, closed under intersection, empty
// face excluded, the polytope itself included).
class LatticePolytope {
 public:
  // Facets by exhaustive candidate-hyperplane enumeration over dim-subsets
  // of the input points; exact integer arithmetic throughout.
  static LatticePolytope hull(const std::vector<ZVec>& points, const HullLimits& lim = {});

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<ZVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<int>& faces_of_dim(int d) const;
  int full_face_id() const { return full_face_id_; }

  // ids of dimension-1 faces containing the vertex.
  const std::vector<int>& edges_at(int vertex_id) const;
  // neighbouring vertex along an edge face.
  int edge_other_end(int edge_face_id, int vertex_id) const;

  std::vector<long long> fvector() const;  // f_0..f_dim, f_dim = 1
  bool euler_ok() const;

  // Saturation basis of the linear span of P - vertex (d x n rows).
  const ZMat& lin_basis() const { return lin_basis_; }

  int vertex_id(const ZVec& p) const;  // -1 when p is not a vertex

 private:
  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<ZVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> faces_by_dim_;
  std::vector<std::vector<int>> edges_by_vertex_;
  int full_face_id_ = -1;
  ZMat lin_basis_;
  std::map<ZVec, int> vertex_index_;

  void build_face_lattice();
};

struct VertexClassification {
  int vertex = -1;
  std::vector<ZVec> edge_directions;  // primitive
  bool is_simple = false;
  bool is_smooth = false;
};

// Classification against the intrinsic lattice Z^n intersected with the
// linear span of P - vertex.
VertexClassification classify_vertex(const LatticePolytope& P, int vertex_id);

// Same, relative to a face of P (edges and lattice restricted to the face).
VertexClassification classify_vertex_in_face(const LatticePolytope& P, int face_id, int vertex_id);

// --- Bruhat interval polytopes -------------------------------------------

// Moment-map image of u: (u^{-1}(1), ..., u^{-1}(n)).
ZVec moment_point(const Permutation& u);

// One moment point per interval member; all lie on the hyperplane
// sum x_i = n(n+1)/2.
std::vector<ZVec> moment_points(const BruhatInterval& iv);

// One-line words as points; Conv of these over [v,w] is the Bruhat interval
// polytope Q_{v,w}, equal as a point set to moment_points(interval(v⁻¹,w⁻¹)).
std::vector<ZVec> word_points(const BruhatInterval& iv);

// Hull of the moment points of [id, w]: the polytope Q_{id, w^{-1}}.
LatticePolytope bip_polytope(const Permutation& w, const HullLimits& lim = {});

// Hull of the one-line words of [v, w]: the polytope Q_{v, w}.
LatticePolytope bruhat_interval_polytope(const Permutation& v, const Permutation& w,
                                         const HullLimits& lim = {});

// Edges of Q_{id, w^{-1}} predicted combinatorially: for each u <= w and
// each reduced pair, the segment from the moment point of u to the moment
// point of t_{u(i),u(j)} u. Each unordered point pair is listed once.
std::vector<std::pair<ZVec, ZVec>> bip_edges_combinatorial(const Permutation& w);

}  // namespace bip
