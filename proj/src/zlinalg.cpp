#include "bip/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bip {

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ZVec primitive(ZVec v) {
  long long g = 0;
  for (long long x : v) g = gcd_ll(g, x);
  if (g > 1)
    for (long long& x : v) x /= g;
  return v;
}

namespace {

void normalize_row(ZVec& v) {
  long long g = 0;
  for (long long x : v) g = gcd_ll(g, x);
  if (g > 1)
    for (long long& x : v) x /= g;
}

}  // namespace

bool IntRowSpace::add(ZVec v) {
  normalize_row(v);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int c = pivots_[r];
    if (v[static_cast<size_t>(c)] == 0) continue;
    const long long p = rows_[r][static_cast<size_t>(c)];
    const long long q = v[static_cast<size_t>(c)];
    for (size_t k = 0; k < v.size(); ++k) v[k] = v[k] * p - rows_[r][k] * q;
    normalize_row(v);
  }
  int lead = -1;
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) {
      lead = static_cast<int>(k);
      break;
    }
  if (lead < 0) return false;
  if (v[static_cast<size_t>(lead)] < 0)
    for (long long& x : v) x = -x;
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

int integer_rank(const ZMat& rows) {
  IntRowSpace sp;
  for (const ZVec& r : rows) sp.add(r);
  return sp.rank();
}

long long det(ZMat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        long long num = m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                            m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                        m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                            m[static_cast<size_t>(k)][static_cast<size_t>(j)];
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;  // exact (Bareiss)
      }
      m[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
    }
    prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign * m[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
}

ZMat kernel_basis(const ZMat& a, int ncols) {
  const size_t n = static_cast<size_t>(ncols);
  ZMat m = a;
  for (ZVec& row : m)
    if (row.size() != n) throw std::invalid_argument("kernel_basis: ragged matrix");
  // Column echelon with a unimodular transform accumulated in u.
  ZMat u(n, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto col_axpy = [&](size_t dst, size_t src, long long q) {
    for (ZVec& row : m) row[dst] -= q * row[src];
    for (ZVec& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](size_t c1, size_t c2) {
    for (ZVec& row : m) std::swap(row[c1], row[c2]);
    for (ZVec& row : u) std::swap(row[c1], row[c2]);
  };

  size_t pivot_cols = 0;
  for (size_t r = 0; r < m.size() && pivot_cols < n; ++r) {
    while (true) {
      size_t best = n;
      for (size_t c = pivot_cols; c < n; ++c)
        if (m[r][c] != 0 && (best == n || std::llabs(m[r][c]) < std::llabs(m[r][best]))) best = c;
      if (best == n) break;  // row is zero on active columns
      bool reduced_all = true;
      for (size_t c = pivot_cols; c < n; ++c) {
        if (c == best || m[r][c] == 0) continue;
        col_axpy(c, best, m[r][c] / m[r][best]);
        if (m[r][c] != 0) reduced_all = false;
      }
      if (reduced_all) {
        col_swap(pivot_cols, best);
        ++pivot_cols;
        break;
      }
    }
  }

  ZMat kernel;
  for (size_t c = pivot_cols; c < n; ++c) {
    ZVec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = u[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

ZMat saturation_basis(const ZMat& rows, int ncols) {
  ZMat k = kernel_basis(rows, ncols);
  return kernel_basis(k, ncols);
}

std::vector<long long> smith_invariants(ZMat a) {
  if (a.empty() || a[0].empty()) return {};
  const size_t rows = a.size(), cols = a[0].size();
  std::vector<long long> inv;
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot in the trailing block.
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
    }
    ++t;
  }
  for (size_t i = 0; i < t; ++i) inv.push_back(std::llabs(a[i][i]));
  // Enforce the divisibility chain.
  for (size_t i = 0; i + 1 < inv.size(); ++i)
    for (size_t j = i + 1; j < inv.size(); ++j)
      if (inv[j] % inv[i] != 0) {
        long long g = gcd_ll(inv[i], inv[j]);
        long long l = inv[i] / g * inv[j];
        inv[i] = g;
        inv[j] = l;
      }
  std::sort(inv.begin(), inv.end());
  return inv;
}

SpanSolver::SpanSolver(ZMat basis_rows) : basis_(std::move(basis_rows)) {
  const int d = static_cast<int>(basis_.size());
  if (d == 0) return;
  const size_t n = basis_[0].size();
  // Greedily select d columns giving an invertible d x d submatrix.
  IntRowSpace sp;
  for (size_t c = 0; c < n && static_cast<int>(cols_.size()) < d; ++c) {
    ZVec col(static_cast<size_t>(d));
    for (int r = 0; r < d; ++r) col[static_cast<size_t>(r)] = basis_[static_cast<size_t>(r)][c];
    if (sp.add(col)) cols_.push_back(static_cast<int>(c));
  }
  if (static_cast<int>(cols_.size()) != d)
    throw std::invalid_argument("SpanSolver: basis rows are dependent");
  // m[i][k] = basis_k[cols_i]; coords solve m * x = target[cols_].
  ZMat m(static_cast<size_t>(d), ZVec(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      m[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          basis_[static_cast<size_t>(k)][static_cast<size_t>(cols_[static_cast<size_t>(i)])];
  det_ = det(m);
  if (det_ == 0) throw std::invalid_argument("SpanSolver: degenerate column selection");
  adj_.assign(static_cast<size_t>(d), ZVec(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ZMat minor;
      for (int r = 0; r < d; ++r) {
        if (r == i) continue;
        ZVec row;
        for (int c = 0; c < d; ++c)
          if (c != j) row.push_back(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        minor.push_back(std::move(row));
      }
      long long cof = det(std::move(minor));
      if ((i + j) % 2) cof = -cof;
      adj_[static_cast<size_t>(j)][static_cast<size_t>(i)] = cof;  // adjugate = transposed cofactors
    }
  }
}

std::optional<ZVec> SpanSolver::coords(const ZVec& target) const {
  const int d = dim();
  ZVec x(static_cast<size_t>(d), 0);
  if (d > 0) {
    for (int k = 0; k < d; ++k) {
      long long num = 0;
      for (int i = 0; i < d; ++i)
        num += adj_[static_cast<size_t>(k)][static_cast<size_t>(i)] *
               target[static_cast<size_t>(cols_[static_cast<size_t>(i)])];
      if (num % det_ != 0) return std::nullopt;
      x[static_cast<size_t>(k)] = num / det_;
    }
  }
  // Verify on all coordinates (catches targets outside the span).
  const size_t n = d > 0 ? basis_[0].size() : target.size();
  for (size_t c = 0; c < n; ++c) {
    long long acc = 0;
    for (int k = 0; k < d; ++k)
      acc += x[static_cast<size_t>(k)] * basis_[static_cast<size_t>(k)][c];
    if (acc != target[c]) return std::nullopt;
  }
  return x;
}

}  // namespace bip
