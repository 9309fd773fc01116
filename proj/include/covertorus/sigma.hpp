// Admissible finite Σ-sets: a finite set with commuting Γ-action and
// fixed-point-free negation, an equivariant map to a Galois lattice, orbit
// classification, gauges, and the enveloping lattice.
#ifndef COVERTORUS_SIGMA_HPP
#define COVERTORUS_SIGMA_HPP

#include <stdexcept>
#include <vector>

#include "covertorus/lattice.hpp"

namespace covertorus {

struct SigmaSet {
  GaloisLattice lat;                    // ambient lattice, Γ = lat.gamma
  std::vector<std::vector<int>> gact;   // gact[g][i]: action of g on element i
  std::vector<int> neg;                 // negation involution
  std::vector<IVec> bar;                // element -> lattice vector

  int size() const { return (int)neg.size(); }
  GroupPtr gamma() const { return lat.gamma; }
  int act(int g, int i) const { return gact[g][i]; }

  void validate() const {
    int m = size();
    const FiniteGroup& G = *lat.gamma;
    if ((int)gact.size() != G.n) throw std::invalid_argument("sigma set: action table size mismatch");
    for (const auto& row : gact) {
      if ((int)row.size() != m) throw std::invalid_argument("sigma set: action row size mismatch");
      std::vector<char> seen(m, 0);
      for (int v : row) {
        if (v < 0 || v >= m || seen[v]) throw std::invalid_argument("sigma set: action row not a permutation");
        seen[v] = 1;
      }
    }
    for (int i = 0; i < m; ++i)
      if (gact[0][i] != i) throw std::invalid_argument("sigma set: identity acts nontrivially");
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        for (int i = 0; i < m; ++i)
          if (gact[G.op(a, b)][i] != gact[a][gact[b][i]])
            throw std::invalid_argument("sigma set: not a group action");
    for (int i = 0; i < m; ++i) {
      if (neg[i] == i)
        throw std::invalid_argument("sigma set not admissible: negation fixes element " + std::to_string(i));
      if (neg[neg[i]] != i) throw std::invalid_argument("sigma set: negation not an involution");
    }
    for (int g = 0; g < G.n; ++g)
      for (int i = 0; i < m; ++i)
        if (gact[g][neg[i]] != neg[gact[g][i]])
          throw std::invalid_argument("sigma set: negation does not commute with the action");
    if ((int)bar.size() != m) throw std::invalid_argument("sigma set: bar table size mismatch");
    for (int i = 0; i < m; ++i) {
      if ((int)bar[i].size() != lat.rank) throw std::invalid_argument("sigma set: bar vector rank mismatch");
      if (bar[neg[i]] != ivec_neg(bar[i]))
        throw std::invalid_argument("sigma set: bar not negation-equivariant");
    }
    for (int g = 0; g < G.n; ++g)
      for (int i = 0; i < m; ++i)
        if (bar[gact[g][i]] != lat.apply_vec(g, bar[i]))
          throw std::invalid_argument("sigma set: bar not Galois-equivariant");
  }

  std::vector<int> gamma_orbit(int i) const {
    std::vector<char> in(size(), 0);
    std::vector<int> orb;
    in[i] = 1;
    orb.push_back(i);
    for (size_t h = 0; h < orb.size(); ++h)
      for (int g = 0; g < lat.gamma->n; ++g) {
        int j = gact[g][orb[h]];
        if (!in[j]) { in[j] = 1; orb.push_back(j); }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }
};

struct OrbitInfo {
  int rep = 0;                 // minimal index in the Σ-orbit
  bool symmetric = false;
  std::vector<int> elements;   // sorted Σ-orbit
  Subgroup stab_alpha;         // Γ_α (stabilizer of rep)
  Subgroup stab_pm;            // Γ_{±α} (stabilizer of {rep, -rep})
  int tau = -1;                // minimal element of Γ_{±α} \ Γ_α (symmetric only)

  // κ_α: Γ_{±α} -> {±1} with kernel Γ_α
  int kappa(int g) const {
    if (!stab_pm.contains(g)) throw std::invalid_argument("kappa: element outside the ± stabilizer");
    return stab_alpha.contains(g) ? 1 : -1;
  }
};

inline std::vector<OrbitInfo> classify(const SigmaSet& R) {
  const FiniteGroup& G = *R.gamma();
  std::vector<char> done(R.size(), 0);
  std::vector<OrbitInfo> out;
  for (int i = 0; i < R.size(); ++i) {
    if (done[i]) continue;
    OrbitInfo info;
    info.rep = i;
    std::vector<int> gorb = R.gamma_orbit(i);
    info.symmetric = std::binary_search(gorb.begin(), gorb.end(), R.neg[i]);
    std::vector<int> full = gorb;
    if (!info.symmetric) {
      for (int j : gorb) full.push_back(R.neg[j]);
      std::sort(full.begin(), full.end());
    }
    info.elements = full;
    for (int j : full) done[j] = 1;

    info.stab_alpha.member.assign(G.n, 0);
    info.stab_pm.member.assign(G.n, 0);
    for (int g = 0; g < G.n; ++g) {
      int img = R.act(g, i);
      if (img == i) { info.stab_alpha.member[g] = 1; info.stab_alpha.elems.push_back(g); }
      if (img == i || img == R.neg[i]) {
        info.stab_pm.member[g] = 1;
        info.stab_pm.elems.push_back(g);
        if (img == R.neg[i] && info.tau < 0) info.tau = g;
      }
    }
    if (info.symmetric) {
      if (2 * info.stab_alpha.size() != info.stab_pm.size())
        throw std::logic_error("symmetric orbit with wrong stabilizer index");
    } else {
      if (info.stab_alpha.size() != info.stab_pm.size() || info.tau >= 0)
        throw std::logic_error("asymmetric orbit with ± stabilizer mismatch");
    }
    out.push_back(std::move(info));
  }
  return out;
}

struct Gauge {
  std::vector<int> p;  // ±1 per element
  bool gamma_invariant = false;

  void validate(const SigmaSet& R) const {
    if ((int)p.size() != R.size()) throw std::invalid_argument("gauge size mismatch");
    for (int i = 0; i < R.size(); ++i) {
      if (p[i] != 1 && p[i] != -1) throw std::invalid_argument("gauge value not ±1");
      if (p[R.neg[i]] != -p[i]) throw std::invalid_argument("gauge not odd under negation");
    }
  }
};

inline Gauge finish_gauge(const SigmaSet& R, std::vector<int> p) {
  Gauge g;
  g.p = std::move(p);
  g.validate(R);
  g.gamma_invariant = true;
  for (int gg = 0; gg < R.gamma()->n && g.gamma_invariant; ++gg)
    for (int i = 0; i < R.size(); ++i)
      if (g.p[R.act(gg, i)] != g.p[i]) { g.gamma_invariant = false; break; }
  return g;
}

// half-set gauge: the given elements (default: smaller index of each ± pair)
// are positive
inline Gauge make_gauge_halfset(const SigmaSet& R, const std::vector<int>* positives = nullptr) {
  std::vector<int> p(R.size(), 0);
  if (positives) {
    for (int i : *positives) {
      if (p[i] != 0 || p[R.neg[i]] != 0)
        throw std::invalid_argument("gauge spec selects both members of a pair");
      p[i] = 1;
      p[R.neg[i]] = -1;
    }
    for (int v : p)
      if (v == 0) throw std::invalid_argument("gauge spec misses a pair");
  } else {
    for (int i = 0; i < R.size(); ++i)
      if (p[i] == 0) { p[i] = 1; p[R.neg[i]] = -1; }
  }
  return finish_gauge(R, std::move(p));
}

// gauge specified by p(w_i^{-1} α) = +1 for coset representatives w_i of
// Γ_{±α}\Γ (one list per Σ-orbit, applied at the orbit representative)
inline Gauge make_gauge_from_reps(const SigmaSet& R, const std::vector<OrbitInfo>& orbits,
                                  const std::vector<std::vector<int>>& wreps) {
  if (wreps.size() != orbits.size()) throw std::invalid_argument("one representative list per orbit required");
  std::vector<int> p(R.size(), 0);
  const FiniteGroup& G = *R.gamma();
  for (size_t o = 0; o < orbits.size(); ++o) {
    const OrbitInfo& info = orbits[o];
    for (int w : wreps[o]) {
      int el = R.act(G.invert(w), info.rep);
      if (p[el] == -1) throw std::invalid_argument("representative list selects both members of a pair");
      p[el] = 1;
      p[R.neg[el]] = -1;
    }
  }
  for (int v : p)
    if (v == 0) throw std::invalid_argument("representative lists do not cover the orbit");
  return finish_gauge(R, std::move(p));
}

// Free module on R modulo the diagonal ± identification, with the induced
// Σ-action, plus the injection of R and the natural map back to the ambient
// lattice.
struct EnvelopingLattice {
  GaloisLattice M;
  std::vector<int> basis_elem;    // basis index -> chosen element of R
  std::vector<int> pair_index;    // element -> basis index
  std::vector<int> pair_sign;     // element -> ±1 (sign in the identification)
  IMat to_ambient;                // lat.rank x M.rank matrix sending e_b to bar

  IVec inject(int element) const {
    IVec v(M.rank, 0);
    v[pair_index[element]] = pair_sign[element];
    return v;
  }
};

inline EnvelopingLattice enveloping_lattice(const SigmaSet& R) {
  EnvelopingLattice E;
  int m = R.size();
  E.pair_index.assign(m, -1);
  E.pair_sign.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    if (E.pair_index[i] >= 0) continue;
    int b = (int)E.basis_elem.size();
    E.basis_elem.push_back(i);
    E.pair_index[i] = b;
    E.pair_sign[i] = 1;
    E.pair_index[R.neg[i]] = b;
    E.pair_sign[R.neg[i]] = -1;
  }
  int k = (int)E.basis_elem.size();
  const FiniteGroup& G = *R.gamma();
  E.M.gamma = R.gamma();
  E.M.rank = k;
  E.M.act.assign(G.n, IMat(k, IVec(k, 0)));
  for (int g = 0; g < G.n; ++g)
    for (int b = 0; b < k; ++b) {
      int img = R.act(g, E.basis_elem[b]);
      E.M.act[g][E.pair_index[img]][b] = E.pair_sign[img];
    }
  E.M.validate();
  E.to_ambient.assign(R.lat.rank, IVec(k, 0));
  for (int b = 0; b < k; ++b)
    for (int row = 0; row < R.lat.rank; ++row)
      E.to_ambient[row][b] = R.bar[E.basis_elem[b]][row];
  // equivariance / compatibility checks
  for (int g = 0; g < G.n; ++g)
    if (imat_mul(E.to_ambient, E.M.act[g]) != imat_mul(R.lat.act[g], E.to_ambient))
      throw std::logic_error("enveloping lattice map is not equivariant");
  for (int i = 0; i < m; ++i)
    if (imat_apply(E.to_ambient, E.inject(i)) != R.bar[i])
      throw std::logic_error("enveloping lattice does not extend bar");
  return E;
}

}  // namespace covertorus

#endif
