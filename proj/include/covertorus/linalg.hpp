// Exact integer/rational linear algebra: Smith normal form, integral and
// rational linear solves, kernels, saturation and quotient maps.  These back
// the coboundary decision procedure and the invariant/quotient lattice
// constructions, so everything here is exact (cpp_int internals).
#ifndef COVERTORUS_LINALG_HPP
#define COVERTORUS_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

#include "covertorus/rational.hpp"

namespace covertorus {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigMat = std::vector<std::vector<BigInt>>;

// User-facing small integer matrices (lattice actions, root data).
using IMat = std::vector<std::vector<long long>>;
using IVec = std::vector<long long>;

inline IMat imat_identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  int n = (int)a.size(), k = (int)b.size(), m = b.empty() ? 0 : (int)b[0].size();
  IMat c(n, IVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (int l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
  return c;
}

inline IVec imat_apply(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec ivec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// Bareiss fraction-free determinant.
inline BigInt imat_det(const IMat& a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  BigMat m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline bool imat_unimodular(const IMat& a) {
  BigInt d = imat_det(a);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Smith normal form: U*A*V = D with U,V unimodular, D diagonal.

struct SmithForm {
  BigMat U, D, V;
  int rank = 0;
};

namespace detail {

inline BigMat big_identity(int n) {
  BigMat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace detail

inline SmithForm smith_form(const BigMat& A) {
  int m = (int)A.size();
  int n = m == 0 ? 0 : (int)A[0].size();
  SmithForm s;
  s.D = A;
  s.U = detail::big_identity(m);
  s.V = detail::big_identity(n);
  auto& D = s.D;
  auto& U = s.U;
  auto& V = s.V;

  auto swap_rows = [&](int a, int b) { std::swap(D[a], D[b]); std::swap(U[a], U[b]); };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
    for (int i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
  };
  auto addmul_row = [&](int dst, int src, const BigInt& c) {
    for (int j = 0; j < n; ++j) D[dst][j] += c * D[src][j];
    for (int j = 0; j < m; ++j) U[dst][j] += c * U[src][j];
  };
  auto addmul_col = [&](int dst, int src, const BigInt& c) {
    for (int i = 0; i < m; ++i) D[i][dst] += c * D[i][src];
    for (int i = 0; i < n; ++i) V[i][dst] += c * V[i][src];
  };

  int t = 0;
  int lim = std::min(m, n);
  while (t < lim) {
    // locate a pivot of minimal absolute value
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D[i][j] != 0) {
          BigInt a = abs(D[i][j]);
          if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        BigInt q = D[i][t] / D[t][t];
        addmul_row(i, t, -q);
        if (D[i][t] != 0) { swap_rows(t, i); clean = false; }
      }
      for (int j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        BigInt q = D[t][j] / D[t][t];
        addmul_col(j, t, -q);
        if (D[t][j] != 0) { swap_cols(t, j); clean = false; }
      }
    }
    if (D[t][t] < 0) {
      for (int j = 0; j < n; ++j) D[t][j] = -D[t][j];
      for (int j = 0; j < m; ++j) U[t][j] = -U[t][j];
    }
    ++t;
  }
  s.rank = t;
  return s;
}

inline std::vector<BigInt> big_apply(const BigMat& a, const std::vector<BigInt>& v) {
  std::vector<BigInt> r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

// Solve A x = b over the integers; returns a particular solution if one exists.
inline std::optional<std::vector<BigInt>> solve_integer(const BigMat& A,
                                                        const std::vector<BigInt>& b) {
  int m = (int)A.size();
  int n = m == 0 ? 0 : (int)A[0].size();
  SmithForm s = smith_form(A);
  std::vector<BigInt> c = big_apply(s.U, b);
  std::vector<BigInt> y(n, 0);
  for (int i = 0; i < m; ++i) {
    if (i < s.rank) {
      if (c[i] % s.D[i][i] != 0) return std::nullopt;
      if (i < n) y[i] = c[i] / s.D[i][i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return big_apply(s.V, y);
}

// Basis (as columns) of {x : A x = 0}; the result is a saturated sublattice.
inline std::vector<std::vector<BigInt>> kernel_integer(const BigMat& A) {
  int n = A.empty() ? 0 : (int)A[0].size();
  SmithForm s = smith_form(A);
  std::vector<std::vector<BigInt>> basis;
  for (int j = s.rank; j < n; ++j) {
    std::vector<BigInt> col(n);
    for (int i = 0; i < n; ++i) col[i] = s.V[i][j];
    basis.push_back(col);
  }
  return basis;
}

// Solve A x = b over Q (A integral, b rational); any particular solution.
inline std::optional<std::vector<BigRat>> solve_rational(const BigMat& A,
                                                         const std::vector<BigRat>& b) {
  int m = (int)A.size();
  int n = m == 0 ? 0 : (int)A[0].size();
  std::vector<std::vector<BigRat>> M(m, std::vector<BigRat>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = BigRat(A[i][j]);
    M[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (M[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(M[row], M[piv]);
    BigRat d = M[row][col];
    for (int j = col; j <= n; ++j) M[row][j] /= d;
    for (int i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      BigRat f = M[i][col];
      for (int j = col; j <= n; ++j) M[i][j] -= f * M[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  std::vector<BigRat> x(n, BigRat(0));
  for (int i = 0; i < (int)pivot_col.size(); ++i) x[pivot_col[i]] = M[i][n];
  return x;
}

// Saturation of the column span of C inside Z^r: basis columns of
// span_Q(C) ∩ Z^r.
inline std::vector<std::vector<BigInt>> saturate_span(const std::vector<std::vector<BigInt>>& cols,
                                                      int r) {
  if (cols.empty()) return {};
  BigMat Ct((int)cols.size(), std::vector<BigInt>(r));
  for (size_t i = 0; i < cols.size(); ++i)
    for (int j = 0; j < r; ++j) Ct[i][j] = cols[i][j];
  // rows of Ct are the spanning vectors; integer kernel of Ct gives the
  // orthogonal complement, whose kernel in turn is the saturation.
  auto ortho = kernel_integer(Ct);
  if (ortho.empty()) {
    // full rational span: saturation is all of Z^r
    std::vector<std::vector<BigInt>> full;
    for (int i = 0; i < r; ++i) {
      std::vector<BigInt> e(r, 0);
      e[i] = 1;
      full.push_back(e);
    }
    return full;
  }
  BigMat O((int)ortho.size(), std::vector<BigInt>(r));
  for (size_t i = 0; i < ortho.size(); ++i)
    for (int j = 0; j < r; ++j) O[i][j] = ortho[i][j];
  return kernel_integer(O);
}

// Coordinates on Z^r / L for a saturated sublattice L (given by basis
// columns): returns the (r-k) x r matrix of a surjection with kernel L.
inline BigMat quotient_map(const std::vector<std::vector<BigInt>>& sat_basis, int r) {
  if (sat_basis.empty()) return detail::big_identity(r);
  int k = (int)sat_basis.size();
  BigMat C(r, std::vector<BigInt>(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < r; ++i) C[i][j] = sat_basis[j][i];
  SmithForm s = smith_form(C);
  for (int i = 0; i < s.rank; ++i)
    if (s.D[i][i] != 1)
      throw std::logic_error("quotient_map: sublattice not saturated");
  BigMat Q;
  for (int i = s.rank; i < r; ++i) Q.push_back(s.U[i]);
  return Q;
}

inline BigMat to_big(const IMat& a) {
  BigMat r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i].resize(a[i].size());
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j];
  }
  return r;
}

}  // namespace covertorus

#endif
