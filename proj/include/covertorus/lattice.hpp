// Galois lattices (free Z-modules with a finite group acting by unimodular
// matrices), torsion dual-torus points in additive form, induced modules and
// the reciprocity transport maps.
#ifndef COVERTORUS_LATTICE_HPP
#define COVERTORUS_LATTICE_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "covertorus/group.hpp"
#include "covertorus/linalg.hpp"
#include "covertorus/rational.hpp"

namespace covertorus {

// A torsion point of the dual torus in additive (logarithmic) coordinates:
// a vector of fractions mod 1.
using TorusElement = std::vector<Frac>;

inline TorusElement torus_zero(int r) { return TorusElement(r, Frac(0)); }

inline TorusElement torus_add(const TorusElement& a, const TorusElement& b) {
  TorusElement r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]).mod1();
  return r;
}

inline TorusElement torus_neg(const TorusElement& a) {
  TorusElement r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (-a[i]).mod1();
  return r;
}

inline TorusElement torus_sub(const TorusElement& a, const TorusElement& b) {
  return torus_add(a, torus_neg(b));
}

inline bool torus_is_zero(const TorusElement& a) {
  for (const Frac& f : a)
    if (!f.is_zero()) return false;
  return true;
}

// lambda ⊗ 1/2: the additive incarnation of (-1)^lambda
inline TorusElement half_point(const IVec& lambda) {
  TorusElement r(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) r[i] = Frac(lambda[i], 2).mod1();
  return r;
}

inline TorusElement scaled_point(const IVec& lambda, const Frac& c) {
  TorusElement r(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) r[i] = (Frac(lambda[i]) * c).mod1();
  return r;
}

struct GaloisLattice {
  GroupPtr gamma;
  int rank = 0;
  std::vector<IMat> act;  // one unimodular matrix per element of gamma

  const IMat& mat(int g) const { return act[g]; }

  void validate() const {
    if ((int)act.size() != gamma->n) throw std::invalid_argument("lattice action table size mismatch");
    if (act[0] != imat_identity(rank)) throw std::invalid_argument("identity does not act trivially");
    for (const IMat& m : act) {
      if ((int)m.size() != rank) throw std::invalid_argument("action matrix size mismatch");
      if (!imat_unimodular(m)) throw std::invalid_argument("action matrix not unimodular");
    }
    for (int a = 0; a < gamma->n; ++a)
      for (int b = 0; b < gamma->n; ++b)
        if (imat_mul(act[a], act[b]) != act[gamma->op(a, b)])
          throw std::invalid_argument("lattice action is not a group action");
  }

  IVec apply_vec(int g, const IVec& v) const { return imat_apply(act[g], v); }

  TorusElement apply(int g, const TorusElement& t) const {
    TorusElement r(rank, Frac(0));
    const IMat& m = act[g];
    for (int i = 0; i < rank; ++i) {
      Frac acc(0);
      for (int j = 0; j < rank; ++j)
        if (m[i][j] != 0) acc += Frac(m[i][j]) * t[j];
      r[i] = acc.mod1();
    }
    return r;
  }

  static GaloisLattice trivial(GroupPtr gamma, int rank) {
    GaloisLattice l;
    l.gamma = gamma;
    l.rank = rank;
    l.act.assign(gamma->n, imat_identity(rank));
    return l;
  }

  // rank-1 lattice where a designated set acts by -1 (sign character)
  static GaloisLattice sign(GroupPtr gamma, const std::vector<int>& sign_of) {
    GaloisLattice l;
    l.gamma = gamma;
    l.rank = 1;
    l.act.resize(gamma->n);
    for (int g = 0; g < gamma->n; ++g) l.act[g] = {{sign_of[g]}};
    l.validate();
    return l;
  }
};

// Induced module Ind_Delta^Gamma Z(eps): rank [Gamma:Delta] with signed
// permutation action, basis indexed by right cosets Delta\Gamma.
struct InducedModule {
  GroupPtr gamma;
  Subgroup delta;
  std::vector<int> eps;   // ±1 per parent element (used on delta only)
  std::vector<int> reps;  // right coset representatives, reps[0] = identity
  GaloisLattice lat;

  int coset_of(int g) const {
    for (size_t i = 0; i < reps.size(); ++i)
      if (delta.contains(gamma->op(g, gamma->invert(reps[i])))) return (int)i;
    throw std::logic_error("coset lookup failed");
  }

  // value of f (as coefficient vector over reps) at an arbitrary group
  // element gamma = delta * rep
  Frac value_at(const std::vector<Frac>& f, int g) const {
    auto [i, d] = right_coset_decompose(*gamma, delta, reps, g);
    return (Frac(eps[d]) * f[i]);
  }
};

inline InducedModule induce_module(GroupPtr G, const Subgroup& delta,
                                   const std::vector<int>* eps_on_delta = nullptr) {
  InducedModule m;
  m.gamma = G;
  m.delta = delta;
  m.eps.assign(G->n, 1);
  if (eps_on_delta) {
    m.eps = *eps_on_delta;
    for (int d : delta.elems)
      for (int e : delta.elems)
        if (m.eps[G->op(d, e)] != m.eps[d] * m.eps[e])
          throw std::invalid_argument("eps is not a character of the subgroup");
  }
  m.reps = right_coset_reps(*G, delta);
  int k = (int)m.reps.size();
  m.lat.gamma = G;
  m.lat.rank = k;
  m.lat.act.assign(G->n, IMat(k, IVec(k, 0)));
  // (g·f)(r_i) = eps(d) f(r_j) where r_i g = d r_j
  for (int g = 0; g < G->n; ++g)
    for (int i = 0; i < k; ++i) {
      auto [j, d] = right_coset_decompose(*G, delta, m.reps, G->op(m.reps[i], g));
      m.lat.act[g][i][j] = m.eps[d];
    }
  m.lat.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Reciprocity transport for rank-1 coefficients Z(eps).
//
// A Delta-map Z(eps) -> Y is given by its value y at 1 (needs A_d y = eps(d) y);
// a Delta-map Y -> Z(eps) by a row functional c (needs c A_d = eps(d) c).

struct FrobeniusMaps {
  const InducedModule& ind;
  const GaloisLattice& Y;

  // Hom_Delta(Z(eps), Res Y) -> Hom_Gamma(Ind Z(eps), Y): columns A_{r_i}^{-1} y
  IMat second_forward(const IVec& y) const {
    for (int d : ind.delta.elems)
      if (Y.apply_vec(d, y) != (ind.eps[d] == 1 ? y : ivec_neg(y)))
        throw std::invalid_argument("value vector is not Delta-equivariant");
    int k = (int)ind.reps.size();
    IMat M(Y.rank, IVec(k, 0));
    for (int i = 0; i < k; ++i) {
      IVec col = Y.apply_vec(Y.gamma->invert(ind.reps[i]), y);
      for (int row = 0; row < Y.rank; ++row) M[row][i] = col[row];
    }
    return M;
  }

  // inverse direction: precompose with the unit x -> f_x (supported on Delta)
  IVec second_backward(const IMat& M) const {
    IVec y(Y.rank);
    for (int row = 0; row < Y.rank; ++row) y[row] = M[row][0];
    return y;
  }

  // Hom_Delta(Res Y, Z(eps)) -> Hom_Gamma(Y, Ind Z(eps)): rows c · A_{r_i}
  IMat first_forward(const IVec& c) const {
    for (int d : ind.delta.elems) {
      IVec lhs(Y.rank, 0);
      const IMat& A = Y.mat(d);
      for (int j = 0; j < Y.rank; ++j)
        for (int i = 0; i < Y.rank; ++i) lhs[j] += c[i] * A[i][j];
      IVec rhs = ind.eps[d] == 1 ? c : ivec_neg(c);
      if (lhs != rhs) throw std::invalid_argument("functional is not Delta-equivariant");
    }
    int k = (int)ind.reps.size();
    IMat M(k, IVec(Y.rank, 0));
    for (int i = 0; i < k; ++i) {
      const IMat& A = Y.mat(ind.reps[i]);
      for (int j = 0; j < Y.rank; ++j)
        for (int l = 0; l < Y.rank; ++l) M[i][j] += c[l] * A[l][j];
    }
    return M;
  }

  // inverse: evaluate at the identity coset component
  IVec first_backward(const IMat& M) const { return M[0]; }
};

// unit x -> f_x (indicator of the identity coset) and counit f -> f(1)
inline std::vector<Frac> ind_unit(const InducedModule& m, const Frac& x) {
  std::vector<Frac> f(m.reps.size(), Frac(0));
  f[0] = x;
  return f;
}

inline Frac ind_counit(const InducedModule& m, const std::vector<Frac>& f) {
  return f[0];
}

}  // namespace covertorus

#endif
