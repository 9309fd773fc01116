// Tits cocycles, gauge-comparison cochains, L-group presentations with
// transition data, and the induced-torus Shapiro identity.
#ifndef COVERTORUS_TITS_HPP
#define COVERTORUS_TITS_HPP

#include <stdexcept>
#include <vector>

#include "covertorus/cochain.hpp"
#include "covertorus/sigma.hpp"

namespace covertorus {

// t_p(σ,τ) = (Σ bar(α) over Λ_p(σ,τ)) ⊗ ½ with
// Λ_p(σ,τ) = {α : p(α)=+1, p(σ⁻¹α)=−1, p((στ)⁻¹α)=+1}
inline IVec tits_lambda(const SigmaSet& R, const Gauge& p, int sigma, int tau) {
  const FiniteGroup& G = *R.gamma();
  int si = G.invert(sigma);
  int sti = G.invert(G.op(sigma, tau));
  IVec sum(R.lat.rank, 0);
  for (int a = 0; a < R.size(); ++a)
    if (p.p[a] == 1 && p.p[R.act(si, a)] == -1 && p.p[R.act(sti, a)] == 1)
      sum = ivec_add(sum, R.bar[a]);
  return sum;
}

inline Cochain tits_cocycle(const SigmaSet& R, const Gauge& p) {
  p.validate(R);
  const FiniteGroup& G = *R.gamma();
  Cochain t = Cochain::zero(R.lat, 2);
  for (int s = 0; s < G.n; ++s)
    for (int u = 0; u < G.n; ++u) t.at({s, u}) = half_point(tits_lambda(R, p, s, u));
  return t;
}

// s_{p/q}(σ) = (Σ bar(α) over M_{p/q}(σ)) ⊗ ½ with M_{p/q}(σ) the disjoint
// union of
//   {α : p(α)=+1, p(σ⁻¹α)=−1, q(α)=q(σ⁻¹α)=+1}
//   {α : p(α)=p(σ⁻¹α)=+1, q(α)=−1, q(σ⁻¹α)=+1}
inline Cochain gauge_cochain(const SigmaSet& R, const Gauge& p, const Gauge& q) {
  p.validate(R);
  q.validate(R);
  const FiniteGroup& G = *R.gamma();
  Cochain s = Cochain::zero(R.lat, 1);
  for (int sigma = 0; sigma < G.n; ++sigma) {
    int si = G.invert(sigma);
    IVec sum(R.lat.rank, 0);
    for (int a = 0; a < R.size(); ++a) {
      int pa = p.p[a], psa = p.p[R.act(si, a)];
      int qa = q.p[a], qsa = q.p[R.act(si, a)];
      if ((pa == 1 && psa == -1 && qa == 1 && qsa == 1) ||
          (pa == 1 && psa == 1 && qa == -1 && qsa == 1))
        sum = ivec_add(sum, R.bar[a]);
    }
    s.at({sigma}) = half_point(sum);
  }
  return s;
}

struct LGroupPresentation {
  const SigmaSet* R = nullptr;
  Gauge p;
  Cochain t;  // the Tits cocycle of (R, p)

  void check() const {
    Cochain again = tits_cocycle(*R, p);
    if (!cochain_eq(again, t)) throw std::logic_error("stored Tits cocycle is stale");
    if (!is_cocycle(t)) throw std::logic_error("Tits table is not a cocycle");
    if (!t.is_normalized()) throw std::logic_error("Tits cocycle not normalized");
  }
};

inline LGroupPresentation lgroup(const SigmaSet& R, const Gauge& p) {
  LGroupPresentation pres;
  pres.R = &R;
  pres.p = p;
  pres.t = tits_cocycle(R, p);
  return pres;
}

// transition ξ_{p,q}: s ⊠ σ ↦ s·s_{p/q}(σ) ⊠ σ between the presentations at
// p and q
struct LGroupTransition {
  LGroupPresentation target;
  Cochain s_pq;
};

inline LGroupTransition transition(const LGroupPresentation& pres, const Gauge& q) {
  LGroupTransition tr;
  tr.target = lgroup(*pres.R, q);
  tr.s_pq = gauge_cochain(*pres.R, pres.p, q);
  return tr;
}

// When all symmetric elements have bar divisible by 2, some gauge has
// vanishing Tits cocycle; find one constructively (any gauge works for the
// divisibility reason, so return the default and check).
inline std::optional<Gauge> vanishing_gauge(const SigmaSet& R) {
  auto orbits = classify(R);
  for (const auto& o : orbits) {
    if (!o.symmetric) continue;
    for (long long v : R.bar[o.rep])
      if (v % 2 != 0) return std::nullopt;
  }
  // all-asymmetric part admits a Γ-invariant gauge; symmetric elements have
  // bar ⊗ ½ = 0, so only the asymmetric choice matters.
  std::vector<int> p(R.size(), 0);
  std::vector<char> done(R.size(), 0);
  for (const auto& o : orbits) {
    if (o.symmetric) {
      for (int e : o.elements)
        if (p[e] == 0) { p[e] = 1; p[R.neg[e]] = -1; }
      continue;
    }
    // a Γ-invariant choice: one Γ-orbit positive, its negative negative
    std::vector<int> gorb = R.gamma_orbit(o.rep);
    for (int e : gorb) { p[e] = 1; p[R.neg[e]] = -1; }
  }
  Gauge g = finish_gauge(R, std::move(p));
  Cochain t = tits_cocycle(R, g);
  if (!t.is_zero()) throw std::logic_error("vanishing gauge construction failed");
  return g;
}

// ---------------------------------------------------------------------------
// Induced-torus identity: for a chain Γ ⊇ Γ_± ⊇ Γ_+ with [Γ_±:Γ_+] = 2, the
// Shapiro transport of the canonical quadratic cocycle z(σ,σ) = ½ equals the
// Tits cocycle of the induced Σ-set with the section gauge.

struct InducedChain {
  GroupPtr gamma;
  Subgroup pm;     // Γ_±
  Subgroup plus;   // Γ_+
  int tau = -1;    // fixed element of Γ_± \ Γ_+
};

struct InducedSigma {
  SigmaSet R;
  std::vector<int> coset_rep;   // element index -> representative in Γ (Γ_+ cosets)
};

// Σ-set of Γ_+-cosets: γ acts by (Γ_+ x) ↦ Γ_+ x γ⁻¹, negation by Γ_+ x ↦ Γ_+ τ x.
// The lattice is Ind_{Γ_±}^Γ Z(ε) with ε the sign of Γ_±/Γ_+.
inline InducedSigma induced_sigma_set(const InducedChain& ch) {
  const FiniteGroup& G = *ch.gamma;
  if (2 * ch.plus.size() != ch.pm.size()) throw std::invalid_argument("chain needs [Γ_±:Γ_+] = 2");
  for (int e : ch.plus.elems)
    if (!ch.pm.contains(e)) throw std::invalid_argument("Γ_+ not contained in Γ_±");
  if (!ch.pm.contains(ch.tau) || ch.plus.contains(ch.tau))
    throw std::invalid_argument("tau must lie in Γ_± outside Γ_+");

  std::vector<int> eps(G.n, 1);
  for (int e : ch.pm.elems)
    if (!ch.plus.contains(e)) eps[e] = -1;
  auto ind = induce_module(ch.gamma, ch.pm, &eps);

  InducedSigma out;
  out.coset_rep = right_coset_reps(G, ch.plus);
  int m = (int)out.coset_rep.size();
  std::vector<int> coset_of(G.n, -1);
  for (int i = 0; i < m; ++i)
    for (int h : ch.plus.elems) coset_of[G.op(h, out.coset_rep[i])] = i;

  out.R.lat = ind.lat;
  out.R.gact.assign(G.n, std::vector<int>(m));
  out.R.neg.resize(m);
  out.R.bar.resize(m);
  for (int g = 0; g < G.n; ++g)
    for (int i = 0; i < m; ++i)
      out.R.gact[g][i] = coset_of[G.op(out.coset_rep[i], G.invert(g))];
  for (int i = 0; i < m; ++i) {
    out.R.neg[i] = coset_of[G.op(ch.tau, out.coset_rep[i])];
    // bar: image in Ind_{Γ_±}^Γ Z(ε): the coset Γ_± x with the ε-sign of the
    // Γ_±-part of the representative
    IVec v(ind.lat.rank, 0);
    auto [j, d] = right_coset_decompose(G, ch.pm, ind.reps, out.coset_rep[i]);
    v[j] = eps[d];
    out.R.bar[i] = v;
  }
  out.R.validate();
  return out;
}

// gauge from a section of Γ_+\Γ over Γ_±\Γ: positive cosets are those of the
// chosen section representatives
inline Gauge section_gauge(const InducedChain& ch, const InducedSigma& is,
                           const std::vector<int>& section) {
  const FiniteGroup& G = *ch.gamma;
  std::vector<int> p(is.R.size(), 0);
  std::vector<int> coset_of(G.n, -1);
  for (int i = 0; i < is.R.size(); ++i)
    for (int h : ch.plus.elems) coset_of[G.op(h, is.coset_rep[i])] = i;
  for (int s : section) {
    int i = coset_of[s];
    if (p[i] == -1) throw std::invalid_argument("section selects both halves of a ± pair");
    p[i] = 1;
    p[is.R.neg[i]] = -1;
  }
  for (int v : p)
    if (v == 0) throw std::invalid_argument("section does not cover Γ_±\\Γ");
  return finish_gauge(is.R, std::move(p));
}

// Shapiro transport of a cochain z on Γ_± (valued in Z(ε)⊗Q/Z, rank 1,
// degree 1 or 2) to Γ with induced coefficients, along a section s of Γ_±\Γ
// (γ = r(γ)·s(c(γ)) with r(γ) ∈ Γ_±):
//   Sh z(σ,τ) at coset a: r(s_a σ)-action on z(r-parts), per the displayed
//   degree-2 formula; degree-1 analogue drops the second argument.
inline Cochain shapiro(const Cochain& z, const InducedChain& ch,
                       const std::vector<int>& section) {
  const FiniteGroup& G = *ch.gamma;
  // z lives on Γ_± as its own group
  std::vector<int> pm_index;
  auto pm_group = subgroup_as_group(G, ch.pm, &pm_index);
  if (z.group()->n != pm_group->n || z.rank() != 1)
    throw std::invalid_argument("shapiro: cochain must live on Γ_± with rank-1 coefficients");

  std::vector<int> eps(G.n, 1);
  for (int e : ch.pm.elems)
    if (!ch.plus.contains(e)) eps[e] = -1;
  auto ind = induce_module(ch.gamma, ch.pm, &eps);
  int k = (int)ind.reps.size();
  if ((int)section.size() != k) throw std::invalid_argument("shapiro: section size mismatch");
  // validate transversal and compute coset lookup
  std::vector<int> sec_of_coset(k, -1);
  for (int s : section) {
    auto [i, d] = right_coset_decompose(G, ch.pm, ind.reps, s);
    if (sec_of_coset[i] >= 0) throw std::invalid_argument("shapiro: section is not a transversal");
    sec_of_coset[i] = s;
  }

  auto rpart = [&](int g) {  // g = r(g) * s(coset(g)) with r(g) ∈ Γ_±
    auto [i, d] = right_coset_decompose(G, ch.pm, ind.reps, g);
    int r = G.op(g, G.invert(sec_of_coset[i]));
    if (!ch.pm.contains(r)) throw std::logic_error("section decomposition failed");
    return r;
  };

  Cochain out = Cochain::zero(ind.lat, z.degree);
  detail::for_each_tuple(G.n, z.degree, [&](const std::vector<int>& t) {
    TorusElement val(k, Frac(0));
    for (int a = 0; a < k; ++a) {
      int ra = ind.reps[a];
      int r0 = rpart(ra);
      Frac zv;
      if (z.degree == 2) {
        int r1 = rpart(G.op(ra, t[0]));
        int r2 = rpart(G.op(G.op(ra, t[0]), t[1]));
        zv = z.at({pm_index[G.op(G.invert(r0), r1)], pm_index[G.op(G.invert(r1), r2)]})[0];
      } else {
        int r1 = rpart(G.op(ra, t[0]));
        zv = z.at({pm_index[G.op(G.invert(r0), r1)]})[0];
      }
      // the leading r(a)-action is the ε-sign on rank-1 values
      val[a] = (Frac(eps[r0]) * zv).mod1();
    }
    out.at(t) = val;
  });
  return out;
}

// canonical quadratic 2-cocycle on Γ_± inflated from Γ_±/Γ_+ ≅ {±1}:
// z(σ,τ) = ½ when both arguments lie outside Γ_+
inline Cochain canonical_quadratic_cocycle(const InducedChain& ch) {
  const FiniteGroup& G = *ch.gamma;
  std::vector<int> pm_index;
  auto pm_group = subgroup_as_group(G, ch.pm, &pm_index);
  GaloisLattice coeff;
  coeff.gamma = pm_group;
  coeff.rank = 1;
  coeff.act.resize(pm_group->n);
  for (size_t i = 0; i < ch.pm.elems.size(); ++i)
    coeff.act[i] = IMat{{ch.plus.contains(ch.pm.elems[i]) ? 1 : -1}};
  coeff.validate();
  Cochain z = Cochain::zero(coeff, 2);
  for (size_t a = 0; a < ch.pm.elems.size(); ++a)
    for (size_t b = 0; b < ch.pm.elems.size(); ++b)
      if (!ch.plus.contains(ch.pm.elems[a]) && !ch.plus.contains(ch.pm.elems[b]))
        z.at({(int)a, (int)b}) = {Frac(1, 2)};
  if (!is_cocycle(z)) throw std::logic_error("canonical quadratic cochain is not a cocycle");
  return z;
}

struct InducedTitsReport {
  bool equal = false;
  Cochain shapiro_side;
  Cochain tits_side;
};

inline InducedTitsReport induced_tits_identity(const InducedChain& ch,
                                               const std::vector<int>& section) {
  InducedSigma is = induced_sigma_set(ch);
  Cochain z = canonical_quadratic_cocycle(ch);
  Cochain sh = shapiro(z, ch, section);
  Gauge p = section_gauge(ch, is, section);
  Cochain t = tits_cocycle(is.R, p);
  InducedTitsReport rep;
  rep.shapiro_side = sh;
  rep.tits_side = t;
  rep.equal = sh.table == t.table;
  return rep;
}

}  // namespace covertorus

#endif
