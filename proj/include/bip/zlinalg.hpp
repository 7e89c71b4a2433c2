#pragma once

#include <optional>
#include <vector>

namespace bip {

using ZVec = std::vector<long long>;
using ZMat = std::vector<ZVec>;  // row-major

long long gcd_ll(long long a, long long b);

// Divides by the gcd of the entries; zero vector is returned unchanged.
ZVec primitive(ZVec v);

// Incremental integer row space: tracks an echelon basis of the span.
class IntRowSpace {
 public:
  // Returns true when v was independent of the rows seen so far.
  bool add(ZVec v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  ZMat rows_;
  std::vector<int> pivots_;
};

int integer_rank(const ZMat& rows);

// Determinant of a square integer matrix (Bareiss, exact).
long long det(ZMat m);

// Basis of {x in Z^n : A x = 0}; the returned rows are a saturated lattice
// basis (extendable to a basis of Z^n).
ZMat kernel_basis(const ZMat& a, int ncols);

// Basis of Z^n intersected with the rational span of the given rows.
ZMat saturation_basis(const ZMat& rows, int ncols);

// Nonzero invariant factors of the Smith normal form, in divisibility order.
std::vector<long long> smith_invariants(ZMat a);

// Solves sum_k x_k * basis[k] = target exactly over the integers.
// The basis rows must be linearly independent. Returns nullopt when the
// target is outside the integer span.
class SpanSolver {
 public:
  explicit SpanSolver(ZMat basis_rows);
  std::optional<ZVec> coords(const ZVec& target) const;
  int dim() const { return static_cast<int>(basis_.size()); }

 private:
  ZMat basis_;             // d x n
  std::vector<int> cols_;  // d column indices with invertible submatrix
  ZMat adj_;               // adjugate of that submatrix
  long long det_ = 0;
};

}  // namespace bip
