// Root-datum combinatorics around a reflection subsystem: Weyl closures, the
// orbit Σ-set of the complementary roots with its two lattice maps, positivity
// gauges from simple systems, and the Tits-cocycle factorization.
#ifndef COVERTORUS_LEVI_HPP
#define COVERTORUS_LEVI_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertorus/linalg.hpp"
#include "covertorus/sigma.hpp"
#include "covertorus/tits.hpp"

namespace covertorus {

struct RootDatum {
  GaloisLattice lat;            // X*(S) with its Galois action
  std::vector<IVec> roots;      // closed under negation
  std::vector<IVec> coroots;    // same index order, in dual coordinates

  int size() const { return (int)roots.size(); }

  long long pair(const IVec& x, int co) const {
    long long s = 0;
    for (int i = 0; i < lat.rank; ++i) s += x[i] * coroots[co][i];
    return s;
  }

  int index_of(const IVec& v) const {
    for (int i = 0; i < size(); ++i)
      if (roots[i] == v) return i;
    return -1;
  }

  // s_α(x) = x − ⟨x, α∨⟩ α as a lattice automorphism
  IMat reflection(int i) const {
    IMat s = imat_identity(lat.rank);
    for (int r = 0; r < lat.rank; ++r)
      for (int c = 0; c < lat.rank; ++c) s[r][c] -= roots[i][r] * coroots[i][c];
    return s;
  }

  // permutation the automorphism induces on the root list
  std::vector<int> root_perm(const IMat& a) const {
    std::vector<int> perm(size());
    std::vector<char> seen(size(), 0);
    for (int i = 0; i < size(); ++i) {
      int j = index_of(imat_apply(a, roots[i]));
      if (j < 0 || seen[j])
        throw std::invalid_argument("automorphism does not permute the root list");
      seen[j] = 1;
      perm[i] = j;
    }
    return perm;
  }

  void validate() const {
    lat.validate();
    if (roots.size() != coroots.size())
      throw std::invalid_argument("root datum: root/coroot count mismatch");
    for (int i = 0; i < size(); ++i) {
      if ((int)roots[i].size() != lat.rank || (int)coroots[i].size() != lat.rank)
        throw std::invalid_argument("root datum: vector rank mismatch");
      for (int j = i + 1; j < size(); ++j)
        if (roots[i] == roots[j]) throw std::invalid_argument("root datum: duplicate root");
      if (pair(roots[i], i) != 2)
        throw std::invalid_argument("root datum: pairing of a root with its coroot is not 2");
      int n = index_of(ivec_neg(roots[i]));
      if (n < 0 || coroots[n] != ivec_neg(coroots[i]))
        throw std::invalid_argument("root datum: not closed under negation");
      root_perm(reflection(i));
    }
    for (int g = 0; g < lat.gamma->n; ++g) {
      std::vector<int> perm = root_perm(lat.act[g]);
      for (int i = 0; i < size(); ++i)
        for (int k = 0; k < size(); ++k)
          if (pair(lat.apply_vec(g, roots[k]), perm[i]) != pair(roots[k], i))
            throw std::invalid_argument("root datum: action does not preserve the pairing");
    }
  }
};

// ---------------------------------------------------------------------------
// Closure of the reflections in a subset of roots.

struct WeylGroup {
  GroupPtr group;
  std::vector<IMat> mats;                     // one per group element
  std::vector<std::vector<int>> root_perm;    // induced permutation of all roots
};

inline WeylGroup weyl_group(const RootDatum& rd, const std::vector<int>& subset) {
  const int cap = 1152;
  std::vector<IMat> gens;
  for (int i : subset) {
    if (i < 0 || i >= rd.size()) throw std::invalid_argument("weyl group: root index out of range");
    gens.push_back(rd.reflection(i));
  }
  WeylGroup w;
  w.mats.push_back(imat_identity(rd.lat.rank));
  std::map<IMat, int> index{{w.mats[0], 0}};
  for (size_t head = 0; head < w.mats.size(); ++head)
    for (const IMat& g : gens) {
      IMat m = imat_mul(w.mats[head], g);
      if (index.emplace(m, (int)w.mats.size()).second) {
        w.mats.push_back(std::move(m));
        if ((int)w.mats.size() > cap)
          throw std::invalid_argument("reflection group order exceeds bound " + std::to_string(cap));
      }
    }
  int n = (int)w.mats.size();
  std::vector<std::vector<int>> tbl(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tbl[a][b] = index.at(imat_mul(w.mats[a], w.mats[b]));
  w.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(tbl), cap));
  for (const IMat& m : w.mats) w.root_perm.push_back(rd.root_perm(m));
  return w;
}

// ---------------------------------------------------------------------------
// A closed, negation- and Galois-stable subsystem with the derived lattices:
// the sublattice fixed by its reflection group and the quotient by the
// saturation of its span.

namespace levidetail {

inline long long small_int(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::logic_error("integer coefficient overflow");
  return v.convert_to<long long>();
}

inline IVec small_vec(const std::vector<BigInt>& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = small_int(v[i]);
  return r;
}

// membership of v in the span of the given (saturated) basis columns
inline bool in_span(const std::vector<IVec>& basis, const IVec& v) {
  int r = (int)v.size();
  BigMat A(r, std::vector<BigInt>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < r; ++i) A[i][j] = basis[j][i];
  std::vector<BigInt> b(r);
  for (int i = 0; i < r; ++i) b[i] = v[i];
  return solve_integer(A, b).has_value();
}

}  // namespace levidetail

struct LeviDatum {
  std::vector<int> roots;             // sorted indices into the ambient root list
  std::vector<char> member;           // per ambient root
  WeylGroup omega;
  std::vector<IVec> invariant_basis;  // basis columns of the Ω-fixed sublattice
  IMat z_proj;                        // coordinates on X*(S)/sat(span of the subsystem)

  int z_rank() const { return (int)z_proj.size(); }
};

inline LeviDatum make_levi(const RootDatum& rd, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  LeviDatum l;
  l.member.assign(rd.size(), 0);
  for (int i : subset) {
    if (i < 0 || i >= rd.size()) throw std::invalid_argument("levi: root index out of range");
    l.member[i] = 1;
  }
  l.roots = std::move(subset);
  for (int i : l.roots) {
    if (!l.member[rd.index_of(ivec_neg(rd.roots[i]))])
      throw std::invalid_argument("levi: subsystem not closed under negation");
    for (int j : l.roots) {
      int k = rd.index_of(ivec_add(rd.roots[i], rd.roots[j]));
      if (k >= 0 && !l.member[k])
        throw std::invalid_argument("levi: subsystem not closed under root addition");
    }
  }
  for (int g = 0; g < rd.lat.gamma->n; ++g) {
    std::vector<int> perm = rd.root_perm(rd.lat.act[g]);
    for (int i : l.roots)
      if (!l.member[perm[i]])
        throw std::invalid_argument("levi: subsystem not stable under the group action");
  }
  l.omega = weyl_group(rd, l.roots);

  int r = rd.lat.rank;
  if (l.omega.group->n == 1) {
    for (int i = 0; i < r; ++i) {
      IVec e(r, 0);
      e[i] = 1;
      l.invariant_basis.push_back(e);
    }
  } else {
    BigMat A;
    for (const IMat& m : l.omega.mats) {
      if (m == imat_identity(r)) continue;
      for (int row = 0; row < r; ++row) {
        std::vector<BigInt> eq(r);
        for (int col = 0; col < r; ++col) eq[col] = m[row][col] - (row == col ? 1 : 0);
        A.push_back(std::move(eq));
      }
    }
    for (const auto& col : kernel_integer(A)) l.invariant_basis.push_back(levidetail::small_vec(col));
  }

  std::vector<std::vector<BigInt>> cols;
  for (int i : l.roots) {
    std::vector<BigInt> c(r);
    for (int j = 0; j < r; ++j) c[j] = rd.roots[i][j];
    cols.push_back(std::move(c));
  }
  BigMat Q = quotient_map(saturate_span(cols, r), r);
  for (const auto& row : Q) l.z_proj.push_back(levidetail::small_vec(row));
  return l;
}

// ---------------------------------------------------------------------------
// The Σ-set of reflection-group orbits of roots outside the subsystem, with
// the orbit-sum map to the fixed sublattice.

struct RMabSet {
  SigmaSet R;
  std::vector<std::vector<int>> members;  // element -> ambient root indices, sorted
  std::vector<int> elem_of_root;          // ambient root index -> element, or -1
};

// The optional action overrides the root datum's own Galois action; it must
// preserve the root list and normalize the subsystem.
inline RMabSet rmab(const RootDatum& rd, const LeviDatum& levi,
                    const GaloisLattice* action = nullptr) {
  const GaloisLattice& gal = action ? *action : rd.lat;
  if (gal.rank != rd.lat.rank) throw std::invalid_argument("orbit set: action rank mismatch");
  RMabSet rs;
  rs.elem_of_root.assign(rd.size(), -1);
  for (int i = 0; i < rd.size(); ++i) {
    if (levi.member[i] || rs.elem_of_root[i] >= 0) continue;
    std::vector<int> orb{i};
    rs.elem_of_root[i] = (int)rs.members.size();
    for (size_t h = 0; h < orb.size(); ++h)
      for (const auto& perm : levi.omega.root_perm) {
        int j = perm[orb[h]];
        if (rs.elem_of_root[j] < 0) {
          rs.elem_of_root[j] = (int)rs.members.size();
          orb.push_back(j);
        }
      }
    std::sort(orb.begin(), orb.end());
    rs.members.push_back(std::move(orb));
  }

  int m = (int)rs.members.size();
  rs.R.lat = gal;
  rs.R.neg.resize(m);
  rs.R.bar.resize(m);
  rs.R.gact.assign(gal.gamma->n, std::vector<int>(m));
  for (int e = 0; e < m; ++e) {
    IVec sum(gal.rank, 0);
    for (int i : rs.members[e]) sum = ivec_add(sum, rd.roots[i]);
    rs.R.bar[e] = sum;
    for (int i : rs.members[e]) {
      int n = rs.elem_of_root[rd.index_of(ivec_neg(rd.roots[i]))];
      if (i == rs.members[e][0]) rs.R.neg[e] = n;
      else if (rs.R.neg[e] != n) throw std::logic_error("orbit set: negation is not orbit-wise");
    }
  }
  for (int g = 0; g < gal.gamma->n; ++g) {
    std::vector<int> perm = rd.root_perm(gal.act[g]);
    for (int e = 0; e < m; ++e) {
      int img = rs.elem_of_root[perm[rs.members[e][0]]];
      for (int i : rs.members[e])
        if (rs.elem_of_root[perm[i]] != img || img < 0)
          throw std::invalid_argument("orbit set: action does not permute the subsystem orbits");
      rs.R.gact[g][e] = img;
    }
  }
  rs.R.validate();
  return rs;
}

struct RMabMaps {
  std::vector<IVec> mab;      // orbit sums, in the Ω-fixed sublattice of X*(S)
  bool mab_injective = true;
  std::vector<IVec> zweight;  // common image of the orbit in the quotient lattice
  bool z_injective = true;
};

inline RMabMaps rmab_maps(const RootDatum& rd, const LeviDatum& levi, const RMabSet& rs) {
  RMabMaps out;
  for (size_t e = 0; e < rs.members.size(); ++e) {
    const IVec& sum = rs.R.bar[e];
    for (const IMat& m : levi.omega.mats)
      if (imat_apply(m, sum) != sum)
        throw std::logic_error("orbit sum is not reflection-invariant");
    if (!levidetail::in_span(levi.invariant_basis, sum))
      throw std::logic_error("orbit sum is outside the fixed sublattice");
    out.mab.push_back(sum);
    IVec w = imat_apply(levi.z_proj, rd.roots[rs.members[e][0]]);
    for (int i : rs.members[e])
      if (imat_apply(levi.z_proj, rd.roots[i]) != w)
        throw std::logic_error("quotient weight is not constant on the orbit");
    out.zweight.push_back(w);
  }
  for (size_t a = 0; a < out.mab.size(); ++a)
    for (size_t b = a + 1; b < out.mab.size(); ++b) {
      if (out.mab[a] == out.mab[b]) out.mab_injective = false;
      if (out.zweight[a] == out.zweight[b]) out.z_injective = false;
    }
  return out;
}

// ---------------------------------------------------------------------------
// The weight Σ-set in the quotient lattice, with the surjection from the
// orbit set.  With summed_bars the weights carry the fiber sums of the
// projected orbit sums instead of themselves, which makes the surjection a
// sum-compatible Σ-map.

struct ZWeightSet {
  SigmaSet R;
  std::vector<int> f;  // orbit element -> weight element
  IMat f_star;         // the quotient projection
};

inline ZWeightSet zweight_set(const RootDatum& rd, const LeviDatum& levi, const RMabSet& rs,
                              bool summed_bars = false) {
  RMabMaps maps = rmab_maps(rd, levi, rs);
  ZWeightSet z;
  z.f_star = levi.z_proj;
  std::vector<IVec> weights;
  for (const IVec& w : maps.zweight) {
    int idx = -1;
    for (size_t j = 0; j < weights.size(); ++j)
      if (weights[j] == w) idx = (int)j;
    if (idx < 0) {
      idx = (int)weights.size();
      weights.push_back(w);
    }
    z.f.push_back(idx);
  }

  int zr = levi.z_rank();
  const GaloisLattice& gal = rs.R.lat;
  std::vector<IVec> lift(zr);
  BigMat Q = to_big(levi.z_proj);
  for (int j = 0; j < zr; ++j) {
    std::vector<BigInt> e(zr, 0);
    e[j] = 1;
    auto sol = solve_integer(Q, e);
    if (!sol) throw std::logic_error("quotient projection has no section");
    lift[j] = levidetail::small_vec(*sol);
  }
  GaloisLattice qlat;
  qlat.gamma = gal.gamma;
  qlat.rank = zr;
  qlat.act.assign(gal.gamma->n, IMat(zr, IVec(zr, 0)));
  for (int g = 0; g < gal.gamma->n; ++g)
    for (int j = 0; j < zr; ++j) {
      IVec col = imat_apply(levi.z_proj, imat_apply(gal.act[g], lift[j]));
      for (int i = 0; i < zr; ++i) qlat.act[g][i][j] = col[i];
    }
  qlat.validate();

  int k = (int)weights.size();
  auto weight_index = [&](const IVec& w) {
    for (int j = 0; j < k; ++j)
      if (weights[j] == w) return j;
    throw std::logic_error("quotient action does not permute the weights");
  };
  z.R.lat = qlat;
  z.R.neg.resize(k);
  z.R.bar.assign(k, IVec(zr, 0));
  z.R.gact.assign(gal.gamma->n, std::vector<int>(k));
  for (int j = 0; j < k; ++j) {
    z.R.neg[j] = weight_index(ivec_neg(weights[j]));
    z.R.bar[j] = weights[j];
    for (int g = 0; g < gal.gamma->n; ++g)
      z.R.gact[g][j] = weight_index(imat_apply(qlat.act[g], weights[j]));
  }
  if (summed_bars) {
    z.R.bar.assign(k, IVec(zr, 0));
    for (size_t e = 0; e < z.f.size(); ++e)
      z.R.bar[z.f[e]] = ivec_add(z.R.bar[z.f[e]], imat_apply(levi.z_proj, rs.R.bar[e]));
  }
  z.R.validate();
  return z;
}

// ---------------------------------------------------------------------------
// Positivity gauge from a simple system containing a simple system of the
// subsystem; the induced signs are constant on the orbits.

struct InducedGauge {
  std::vector<int> root_sign;  // ±1 per ambient root
  Gauge orbit_gauge;           // on the orbit Σ-set
};

namespace levidetail {

// +1 / −1 when v is a nonnegative / nonpositive rational combination of the
// listed roots, 0 otherwise
inline int cone_sign(const RootDatum& rd, const std::vector<int>& delta, const IVec& v) {
  int r = rd.lat.rank;
  BigMat A(r, std::vector<BigInt>(delta.size()));
  for (size_t j = 0; j < delta.size(); ++j)
    for (int i = 0; i < r; ++i) A[i][j] = rd.roots[delta[j]][i];
  std::vector<BigRat> b(r);
  for (int i = 0; i < r; ++i) b[i] = BigRat(v[i]);
  auto sol = solve_rational(A, b);
  if (!sol) return 0;
  bool has_pos = false, has_neg = false;
  for (const BigRat& c : *sol) {
    if (c > 0) has_pos = true;
    if (c < 0) has_neg = true;
  }
  if (has_pos && has_neg) return 0;
  return has_neg ? -1 : 1;
}

}  // namespace levidetail

inline InducedGauge induced_gauge(const RootDatum& rd, const LeviDatum& levi, const RMabSet& rs,
                                  const std::vector<int>& delta) {
  for (int i : delta)
    if (i < 0 || i >= rd.size()) throw std::invalid_argument("gauge: simple root index out of range");
  std::vector<int> delta_sub;
  for (int i : delta)
    if (levi.member[i]) delta_sub.push_back(i);
  InducedGauge out;
  out.root_sign.assign(rd.size(), 0);
  for (int i = 0; i < rd.size(); ++i) {
    out.root_sign[i] = levidetail::cone_sign(rd, delta, rd.roots[i]);
    if (out.root_sign[i] == 0)
      throw std::invalid_argument("gauge: the given set is not a simple system for the roots");
  }
  for (int i : levi.roots)
    if (levidetail::cone_sign(rd, delta_sub, rd.roots[i]) == 0)
      throw std::invalid_argument("gauge: the simple system does not contain one for the subsystem");
  std::vector<int> p(rs.members.size());
  for (size_t e = 0; e < rs.members.size(); ++e) {
    p[e] = out.root_sign[rs.members[e][0]];
    for (int i : rs.members[e])
      if (out.root_sign[i] != p[e])
        throw std::logic_error("induced signs are not constant on the orbits");
  }
  out.orbit_gauge = finish_gauge(rs.R, std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Tits-cocycle factorization for a twisted action preserving the root list
// and the positive system of the subsystem: the quadratic table of the full
// root set splits as the subsystem table plus the orbit-set table, and the
// per-pair sums over the complement match the orbit-level sums.

inline SigmaSet root_sigma_set(const RootDatum& rd, const GaloisLattice& gal,
                               const std::vector<int>& which) {
  std::vector<int> local(rd.size(), -1);
  for (size_t j = 0; j < which.size(); ++j) local[which[j]] = (int)j;
  SigmaSet R;
  R.lat = gal;
  int m = (int)which.size();
  R.neg.resize(m);
  R.bar.resize(m);
  R.gact.assign(gal.gamma->n, std::vector<int>(m));
  for (int j = 0; j < m; ++j) {
    R.bar[j] = rd.roots[which[j]];
    int n = local[rd.index_of(ivec_neg(rd.roots[which[j]]))];
    if (n < 0) throw std::invalid_argument("root sigma set: subset not closed under negation");
    R.neg[j] = n;
  }
  for (int g = 0; g < gal.gamma->n; ++g) {
    std::vector<int> perm = rd.root_perm(gal.act[g]);
    for (int j = 0; j < m; ++j) {
      int img = local[perm[which[j]]];
      if (img < 0) throw std::invalid_argument("root sigma set: action leaves the subset");
      R.gact[g][j] = img;
    }
  }
  R.validate();
  return R;
}

struct LeviTitsReport {
  bool lambda_match = true;      // per-pair complement sums equal the orbit sums
  bool lambda_invariant = true;  // complement sums lie in the fixed sublattice
  bool factorization = false;    // full table = subsystem table + orbit table
  Cochain t_full, t_sub, t_orbit;
};

inline LeviTitsReport levi_tits_factorization(const RootDatum& rd, const LeviDatum& levi,
                                              const GaloisLattice& gal,
                                              const std::vector<int>& delta) {
  if (gal.rank != rd.lat.rank) throw std::invalid_argument("factorization: action rank mismatch");
  gal.validate();
  for (int g = 0; g < gal.gamma->n; ++g)
    for (int i = 0; i < rd.size(); ++i)
      if (rd.index_of(imat_apply(gal.act[g], rd.roots[i])) < 0)
        throw std::invalid_argument("automorphism " + std::to_string(g) +
                                    " does not preserve root " + std::to_string(i));
  RMabSet rs = rmab(rd, levi, &gal);
  InducedGauge ig = induced_gauge(rd, levi, rs, delta);
  for (int g = 0; g < gal.gamma->n; ++g)
    for (int i : levi.roots) {
      int j = rd.index_of(imat_apply(gal.act[g], rd.roots[i]));
      if (ig.root_sign[i] == 1 && ig.root_sign[j] != 1)
        throw std::invalid_argument("automorphism " + std::to_string(g) +
                                    " does not preserve the positive subsystem at root " +
                                    std::to_string(i));
    }

  std::vector<int> all(rd.size());
  for (int i = 0; i < rd.size(); ++i) all[i] = i;
  SigmaSet Rfull = root_sigma_set(rd, gal, all);
  SigmaSet Rsub = root_sigma_set(rd, gal, levi.roots);
  Gauge pfull = finish_gauge(Rfull, ig.root_sign);
  std::vector<int> psub_signs;
  for (int i : levi.roots) psub_signs.push_back(ig.root_sign[i]);
  Gauge psub = finish_gauge(Rsub, std::move(psub_signs));

  LeviTitsReport rep;
  rep.t_full = tits_cocycle(Rfull, pfull);
  rep.t_sub = tits_cocycle(Rsub, psub);
  rep.t_orbit = tits_cocycle(rs.R, ig.orbit_gauge);
  rep.factorization = cochain_eq(rep.t_full, cochain_add(rep.t_sub, rep.t_orbit));
  for (int s = 0; s < gal.gamma->n; ++s)
    for (int u = 0; u < gal.gamma->n; ++u) {
      IVec lam = tits_lambda(Rfull, pfull, s, u);
      IVec lam_sub = tits_lambda(Rsub, psub, s, u);
      IVec lam_comp = ivec_add(lam, ivec_neg(lam_sub));
      if (lam_comp != tits_lambda(rs.R, ig.orbit_gauge, s, u)) rep.lambda_match = false;
      if (!levidetail::in_span(levi.invariant_basis, lam_comp)) rep.lambda_invariant = false;
    }
  return rep;
}

}  // namespace covertorus

#endif
