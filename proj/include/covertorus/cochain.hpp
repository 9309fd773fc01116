// Cochain algebra C^n(G, torsion points of the dual torus) for n <= 3:
// differentials, inflation/restriction, and the exact coboundary decision via
// integral lifts and Smith normal form (long exact sequence for
// 0 -> Z^r -> Q^r -> (Q/Z)^r -> 0; H^n(G,Q^r) = 0 for n >= 1).
#ifndef COVERTORUS_COCHAIN_HPP
#define COVERTORUS_COCHAIN_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "covertorus/lattice.hpp"

namespace covertorus {

struct Cochain {
  int degree = 0;
  GaloisLattice coeff;                // coeff.gamma is the cochain's group
  std::vector<TorusElement> table;    // dense, indexed by mixed-radix tuples

  GroupPtr group() const { return coeff.gamma; }
  int n() const { return coeff.gamma->n; }
  int rank() const { return coeff.rank; }

  size_t table_size() const {
    size_t s = 1;
    for (int i = 0; i < degree; ++i) s *= (size_t)n();
    return s;
  }

  size_t index(const std::vector<int>& tuple) const {
    size_t idx = 0;
    for (int g : tuple) idx = idx * n() + g;
    return idx;
  }

  const TorusElement& at(const std::vector<int>& tuple) const { return table[index(tuple)]; }
  TorusElement& at(const std::vector<int>& tuple) { return table[index(tuple)]; }

  static Cochain zero(const GaloisLattice& coeff, int degree) {
    Cochain c;
    c.degree = degree;
    c.coeff = coeff;
    c.table.assign(c.table_size(), torus_zero(coeff.rank));
    return c;
  }

  bool is_zero() const {
    for (const auto& v : table)
      if (!torus_is_zero(v)) return false;
    return true;
  }

  // vanishes whenever any argument is the identity
  bool is_normalized() const {
    std::vector<int> tuple(degree, 0);
    for (size_t idx = 0; idx < table.size(); ++idx) {
      bool has_id = false;
      size_t t = idx;
      for (int i = degree - 1; i >= 0; --i) { tuple[i] = (int)(t % n()); t /= n(); }
      for (int g : tuple)
        if (g == 0) has_id = true;
      if (has_id && !torus_is_zero(table[idx])) return false;
    }
    return true;
  }
};

inline void require_same_shape(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.n() != b.n() || a.rank() != b.rank() ||
      a.coeff.act != b.coeff.act)
    throw std::invalid_argument("cochain shape mismatch");
}

inline Cochain cochain_add(const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  Cochain c = a;
  for (size_t i = 0; i < c.table.size(); ++i) c.table[i] = torus_add(a.table[i], b.table[i]);
  return c;
}

inline Cochain cochain_sub(const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  Cochain c = a;
  for (size_t i = 0; i < c.table.size(); ++i) c.table[i] = torus_sub(a.table[i], b.table[i]);
  return c;
}

inline bool cochain_eq(const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  return a.table == b.table;
}

namespace detail {

inline void for_each_tuple(int n, int len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> tuple(len, 0);
  while (true) {
    f(tuple);
    int i = len - 1;
    while (i >= 0 && ++tuple[i] == n) tuple[i--] = 0;
    if (i < 0) break;
  }
}

}  // namespace detail

// Bar-resolution differential, additive convention:
// (du)(g0..gn) = g0·u(g1..gn) + sum_i (-1)^i u(..g_{i-1}g_i..) + (-1)^{n+1} u(g0..g_{n-1})
inline Cochain differential(const Cochain& u) {
  if (u.degree > 2) throw std::invalid_argument("differential: degree overflow");
  const FiniteGroup& G = *u.group();
  Cochain d = Cochain::zero(u.coeff, u.degree + 1);
  detail::for_each_tuple(G.n, u.degree + 1, [&](const std::vector<int>& t) {
    std::vector<int> inner(t.begin() + 1, t.end());
    TorusElement acc = u.coeff.apply(t[0], u.at(inner));
    int sign = -1;
    for (int i = 1; i <= u.degree; ++i) {
      std::vector<int> merged;
      merged.reserve(u.degree);
      for (int j = 0; j < (int)t.size(); ++j) {
        if (j == i - 1) { merged.push_back(G.op(t[i - 1], t[i])); ++j; }
        else merged.push_back(t[j]);
      }
      acc = sign > 0 ? torus_add(acc, u.at(merged)) : torus_sub(acc, u.at(merged));
      sign = -sign;
    }
    std::vector<int> front(t.begin(), t.end() - 1);
    acc = sign > 0 ? torus_add(acc, u.at(front)) : torus_sub(acc, u.at(front));
    d.at(t) = acc;
  });
  return d;
}

inline bool is_cocycle(const Cochain& c) { return differential(c).is_zero(); }

// Inflation along a surjective hom phi: W -> G (precomposition in every
// argument, coefficients pulled back through phi).
inline Cochain inflate(const Cochain& c, const GroupHom& phi) {
  if (phi.dst.get() != c.group().get()) throw std::invalid_argument("inflate: hom target mismatch");
  if (!phi.is_surjective()) throw std::invalid_argument("inflate: hom not surjective");
  GaloisLattice pulled;
  pulled.gamma = phi.src;
  pulled.rank = c.rank();
  pulled.act.resize(phi.src->n);
  for (int w = 0; w < phi.src->n; ++w) pulled.act[w] = c.coeff.act[phi(w)];
  Cochain out = Cochain::zero(pulled, c.degree);
  detail::for_each_tuple(phi.src->n, c.degree, [&](const std::vector<int>& t) {
    std::vector<int> img(t.size());
    for (size_t i = 0; i < t.size(); ++i) img[i] = phi(t[i]);
    out.at(t) = c.at(img);
  });
  return out;
}

// Restriction along an injective hom.
inline Cochain restrict_cochain(const Cochain& c, const GroupHom& iota) {
  if (iota.dst.get() != c.group().get()) throw std::invalid_argument("restrict: hom target mismatch");
  if (!iota.is_injective()) throw std::invalid_argument("restrict: hom not injective");
  GaloisLattice pulled;
  pulled.gamma = iota.src;
  pulled.rank = c.rank();
  pulled.act.resize(iota.src->n);
  for (int w = 0; w < iota.src->n; ++w) pulled.act[w] = c.coeff.act[iota(w)];
  Cochain out = Cochain::zero(pulled, c.degree);
  detail::for_each_tuple(iota.src->n, c.degree, [&](const std::vector<int>& t) {
    std::vector<int> img(t.size());
    for (size_t i = 0; i < t.size(); ++i) img[i] = iota(t[i]);
    out.at(t) = c.at(img);
  });
  return out;
}

struct CoboundaryResult {
  bool yes = false;
  std::optional<Cochain> witness;  // degree n-1 cochain s with ds = c
};

// Exact decision whether a torsion-valued cocycle is a coboundary.
inline CoboundaryResult is_coboundary(const Cochain& c, bool require_cocycle = true) {
  if (c.degree < 1 || c.degree > 2)
    throw std::invalid_argument("is_coboundary: degree out of range");
  if (!is_cocycle(c)) {
    if (require_cocycle) throw std::invalid_argument("is_coboundary: input is not a cocycle");
    return {};
  }
  const FiniteGroup& G = *c.group();
  const int r = c.rank();
  const int nn = G.n;
  const int deg = c.degree;

  // integral 2-step: z = d(lift) is an integral (deg+1)-cocycle; decide
  // whether z = du for an integral deg-cochain u.
  size_t ncols_t = 1, nrows_t = 1;
  for (int i = 0; i < deg; ++i) ncols_t *= nn;
  for (int i = 0; i <= deg; ++i) nrows_t *= nn;
  const size_t ncols = ncols_t * r, nrows = nrows_t * r;

  BigMat A(nrows, std::vector<BigInt>(ncols, 0));
  std::vector<BigInt> b(nrows, 0);

  auto tuple_index = [&](const std::vector<int>& t) {
    size_t idx = 0;
    for (int g : t) idx = idx * nn + g;
    return idx;
  };

  // d(lift): rational differential without mod-1 reduction
  detail::for_each_tuple(nn, deg + 1, [&](const std::vector<int>& t) {
    std::vector<Frac> acc(r, Frac(0));
    auto add_term = [&](const std::vector<int>& arg, int sign, bool act_first) {
      const TorusElement& v = c.at(arg);
      if (act_first) {
        const IMat& m = c.coeff.mat(t[0]);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (m[i][j] != 0) acc[i] += Frac(sign * m[i][j]) * v[j];
      } else {
        for (int i = 0; i < r; ++i) acc[i] += Frac(sign) * v[i];
      }
    };
    add_term(std::vector<int>(t.begin() + 1, t.end()), 1, true);
    int sign = -1;
    for (int i = 1; i <= deg; ++i) {
      std::vector<int> merged;
      for (int j = 0; j < (int)t.size(); ++j) {
        if (j == i - 1) { merged.push_back(G.op(t[i - 1], t[i])); ++j; }
        else merged.push_back(t[j]);
      }
      add_term(merged, sign, false);
      sign = -sign;
    }
    add_term(std::vector<int>(t.begin(), t.end() - 1), sign, false);
    size_t row0 = tuple_index(t) * r;
    for (int i = 0; i < r; ++i) {
      if (acc[i].den != 1)
        throw std::logic_error("integral lift differential is not integral");
      b[row0 + i] = acc[i].num;
    }
  });

  // matrix of the differential C^deg(G,Z^r) -> C^{deg+1}(G,Z^r)
  detail::for_each_tuple(nn, deg + 1, [&](const std::vector<int>& t) {
    size_t row0 = tuple_index(t) * r;
    auto add_block = [&](const std::vector<int>& arg, int sign, bool act_first) {
      size_t col0 = 0;
      for (int g : arg) col0 = col0 * nn + g;
      col0 *= r;
      if (act_first) {
        const IMat& m = c.coeff.mat(t[0]);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (m[i][j] != 0) A[row0 + i][col0 + j] += sign * m[i][j];
      } else {
        for (int i = 0; i < r; ++i) A[row0 + i][col0 + i] += sign;
      }
    };
    add_block(std::vector<int>(t.begin() + 1, t.end()), 1, true);
    int sign = -1;
    for (int i = 1; i <= deg; ++i) {
      std::vector<int> merged;
      for (int j = 0; j < (int)t.size(); ++j) {
        if (j == i - 1) { merged.push_back(G.op(t[i - 1], t[i])); ++j; }
        else merged.push_back(t[j]);
      }
      add_block(merged, sign, false);
      sign = -sign;
    }
    add_block(std::vector<int>(t.begin(), t.end() - 1), sign, false);
  });

  auto u = solve_integer(A, b);
  if (!u) return {};

  // witness: solve dm = lift - u over Q in degree deg-1; then s = m mod 1.
  size_t wcols_t = 1, wrows_t = ncols_t;
  for (int i = 0; i < deg - 1; ++i) wcols_t *= nn;
  const size_t wcols = wcols_t * r, wrows = wrows_t * r;
  BigMat WA(wrows, std::vector<BigInt>(wcols, 0));
  std::vector<BigRat> wb(wrows, BigRat(0));
  detail::for_each_tuple(nn, deg, [&](const std::vector<int>& t) {
    size_t row0 = tuple_index(t) * r;
    auto add_block = [&](const std::vector<int>& arg, int sign, bool act_first) {
      size_t col0 = 0;
      for (int g : arg) col0 = col0 * nn + g;
      col0 *= r;
      if (act_first) {
        const IMat& m = c.coeff.mat(t[0]);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (m[i][j] != 0) WA[row0 + i][col0 + j] += sign * m[i][j];
      } else {
        for (int i = 0; i < r; ++i) WA[row0 + i][col0 + i] += sign;
      }
    };
    add_block(std::vector<int>(t.begin() + 1, t.end()), 1, true);
    int sign = -1;
    for (int i = 1; i <= deg - 1; ++i) {
      std::vector<int> merged;
      for (int j = 0; j < (int)t.size(); ++j) {
        if (j == i - 1) { merged.push_back(G.op(t[i - 1], t[i])); ++j; }
        else merged.push_back(t[j]);
      }
      add_block(merged, sign, false);
      sign = -sign;
    }
    add_block(std::vector<int>(t.begin(), t.end() - 1), sign, false);
    const TorusElement& v = c.at(t);
    for (int i = 0; i < r; ++i)
      wb[row0 + i] = BigRat(v[i].num, v[i].den) - BigRat((*u)[row0 + i]);
  });

  auto m = solve_rational(WA, wb);
  if (!m) throw std::logic_error("rational witness solve failed unexpectedly");
  CoboundaryResult res;
  res.yes = true;
  Cochain s = Cochain::zero(c.coeff, deg - 1);
  for (size_t k = 0; k < wcols_t; ++k)
    for (int i = 0; i < r; ++i) {
      BigRat q = (*m)[k * r + i];
      BigInt num = numerator(q), den = denominator(q);
      s.table[k][i] = Frac(num.convert_to<long long>(), den.convert_to<long long>()).mod1();
    }
  res.witness = s;
  return res;
}

inline bool cohomologous(const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  return is_coboundary(cochain_sub(a, b)).yes;
}

}  // namespace covertorus

#endif
