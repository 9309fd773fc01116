// Surjective maps between Σ-sets over one torus: validation with the
// summed-image condition, stabilizer and transfer compatibility, pushforward
// of cover elements, gauge pullback with exact Tits-table agreement,
// inflation and minimization of character data, the minimal-difference sign
// character, and the parameter-matching report.
#ifndef COVERTORUS_FUNCTORIAL_HPP
#define COVERTORUS_FUNCTORIAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertorus/weil.hpp"

namespace covertorus {

namespace fundetail {

inline Subgroup stab_of(const SigmaSet& R, int el, bool with_neg) {
  const FiniteGroup& G = *R.gamma();
  std::vector<int> elems;
  for (int g = 0; g < G.n; ++g) {
    int img = R.act(g, el);
    if (img == el || (with_neg && img == R.neg[el])) elems.push_back(g);
  }
  return Subgroup::from_elements(G, elems);
}

inline Subgroup intersect(const FiniteGroup& G, const Subgroup& a, const Subgroup& b) {
  std::vector<int> elems;
  for (int g : a.elems)
    if (b.contains(g)) elems.push_back(g);
  return Subgroup::from_elements(G, elems);
}

inline bool product_is(const FiniteGroup& G, const Subgroup& a, const Subgroup& b,
                       const Subgroup& target) {
  std::vector<char> hit(G.n, 0);
  size_t count = 0;
  for (int x : a.elems)
    for (int y : b.elems) {
      int g = G.op(x, y);
      if (!target.contains(g)) return false;
      if (!hit[g]) { hit[g] = 1; ++count; }
    }
  return count == target.elems.size();
}

inline std::vector<int> subgroup_orbit(const SigmaSet& R, const Subgroup& H, int el) {
  std::vector<char> in(R.size(), 0);
  std::vector<int> orb;
  for (int g : H.elems) {
    int j = R.act(g, el);
    if (!in[j]) { in[j] = 1; orb.push_back(j); }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

}  // namespace fundetail

// surjective Σ-equivariant map f : R -> R' together with an equivariant
// lattice map f*, subject to the image condition  ᾱ' = Σ_{f(α)=α'} f*(ᾱ)
struct SurjSigmaMap {
  const SigmaSet* src = nullptr;
  const SigmaSet* dst = nullptr;
  std::vector<int> f;
  IMat f_star;  // dst rank × src rank
  std::vector<OrbitInfo> src_orbits, dst_orbits;
  std::vector<int> orbit_image;  // src orbit -> dst orbit
};

// applies the lattice map to every value of a cochain, producing a cochain
// with the given coefficient lattice
inline Cochain map_cochain(const Cochain& c, const IMat& f_star, const GaloisLattice& coeff) {
  if ((int)f_star.size() != coeff.rank || (f_star.empty() ? 0 : (int)f_star[0].size()) != c.rank())
    throw std::invalid_argument("lattice map shape mismatch");
  Cochain out = Cochain::zero(coeff, c.degree);
  for (size_t cell = 0; cell < c.table.size(); ++cell)
    for (int i = 0; i < coeff.rank; ++i) {
      Frac v(0);
      for (int j = 0; j < c.rank(); ++j)
        v = v + c.table[cell][j] * Frac(f_star[i][j]);
      out.table[cell][i] = v.mod1();
    }
  return out;
}

inline SurjSigmaMap check_surj_map(const SigmaSet& R, const SigmaSet& Rp, std::vector<int> f,
                                   IMat f_star) {
  if (R.gamma() != Rp.gamma()) throw std::invalid_argument("sigma map needs a common group");
  if ((int)f_star.size() != Rp.lat.rank ||
      (f_star.empty() ? 0 : (int)f_star[0].size()) != R.lat.rank)
    throw std::invalid_argument("lattice map shape mismatch");
  if ((int)f.size() != R.size()) throw std::invalid_argument("map table size mismatch");
  const FiniteGroup& G = *R.gamma();
  for (int g = 0; g < G.n; ++g)
    if (imat_mul(Rp.lat.act[g], f_star) != imat_mul(f_star, R.lat.act[g]))
      throw std::invalid_argument("lattice map is not equivariant");
  std::vector<char> hit(Rp.size(), 0);
  for (int v : f) {
    if (v < 0 || v >= Rp.size()) throw std::invalid_argument("map value out of range");
    hit[v] = 1;
  }
  for (char c : hit)
    if (!c) throw std::invalid_argument("sigma map must be surjective");
  for (int i = 0; i < R.size(); ++i) {
    if (f[R.neg[i]] != Rp.neg[f[i]])
      throw std::invalid_argument("sigma map does not commute with negation");
    for (int g = 0; g < G.n; ++g)
      if (f[R.act(g, i)] != Rp.act(g, f[i]))
        throw std::invalid_argument("sigma map is not equivariant");
  }
  // image condition: each target vector is the sum over its fiber
  for (int j = 0; j < Rp.size(); ++j) {
    IVec sum(Rp.lat.rank, 0);
    for (int i = 0; i < R.size(); ++i)
      if (f[i] == j)
        for (int r = 0; r < Rp.lat.rank; ++r)
          for (int c = 0; c < R.lat.rank; ++c) sum[r] += f_star[r][c] * R.bar[i][c];
    if (sum != Rp.bar[j])
      throw std::invalid_argument("fiber sum differs from the image vector at element " +
                                  std::to_string(j));
  }

  SurjSigmaMap m;
  m.src = &R;
  m.dst = &Rp;
  m.f = std::move(f);
  m.f_star = std::move(f_star);
  m.src_orbits = classify(R);
  m.dst_orbits = classify(Rp);
  for (const auto& o : m.src_orbits) {
    int img = m.f[o.rep];
    int oi = -1;
    for (size_t j = 0; j < m.dst_orbits.size(); ++j) {
      const auto& els = m.dst_orbits[j].elements;
      if (std::binary_search(els.begin(), els.end(), img)) oi = (int)j;
    }
    m.orbit_image.push_back(oi);
  }

  // stabilizer compatibility at each symmetric source orbit
  for (const auto& o : m.src_orbits) {
    if (!o.symmetric) continue;
    int ap = m.f[o.rep];
    Subgroup Sa = fundetail::stab_of(Rp, ap, false);
    Subgroup Spm = fundetail::stab_of(Rp, ap, true);
    Subgroup meet = fundetail::intersect(G, o.stab_pm, Sa);
    if (meet.elems != o.stab_alpha.elems)
      throw std::invalid_argument("stabilizer square is not cartesian");
    if (!fundetail::product_is(G, o.stab_pm, Sa, Spm))
      throw std::invalid_argument("stabilizer square is not cocartesian");
  }

  // fiber representatives over a target element also represent the group
  // orbits over its full orbit
  for (const auto& op : m.dst_orbits) {
    int ap = op.rep;
    Subgroup Sa = fundetail::stab_of(Rp, ap, false);
    std::vector<char> covered(R.size(), 0);
    std::vector<int> reps;
    for (int i = 0; i < R.size(); ++i) {
      if (m.f[i] != ap || covered[i]) continue;
      reps.push_back(i);
      for (int j : fundetail::subgroup_orbit(R, Sa, i)) covered[j] = 1;
    }
    std::vector<char> gdone(R.size(), 0);
    std::vector<int> gorb_ap = Rp.gamma_orbit(ap);
    for (int i = 0; i < R.size(); ++i) {
      bool in_fiber = std::binary_search(gorb_ap.begin(), gorb_ap.end(), m.f[i]);
      if (!in_fiber || gdone[i]) continue;
      auto gorb = R.gamma_orbit(i);
      for (int j : gorb) gdone[j] = 1;
      int found = 0;
      for (int r : reps)
        if (std::binary_search(gorb.begin(), gorb.end(), r)) ++found;
      if (found != 1)
        throw std::logic_error("fiber representatives do not represent the group orbits");
    }
  }
  return m;
}

// single-lattice form: f* is the identity
inline SurjSigmaMap check_surj_map(const SigmaSet& R, const SigmaSet& Rp, std::vector<int> f) {
  if (R.lat.rank != Rp.lat.rank || R.lat.act != Rp.lat.act)
    throw std::invalid_argument("sigma map needs a common ambient lattice");
  return check_surj_map(R, Rp, std::move(f), imat_identity(R.lat.rank));
}

// transfer compatibility over a covering group: for a symmetric source orbit
// the small transfer followed by inclusion agrees with the big transfer
inline bool check_transfer_square(const SurjSigmaMap& m, GroupPtr W, const GroupHom& phi) {
  const FiniteGroup& Wg = *W;
  for (const auto& o : m.src_orbits) {
    if (!o.symmetric) continue;
    int ap = m.f[o.rep];
    Subgroup Sa = fundetail::stab_of(*m.dst, ap, false);
    Subgroup Spm = fundetail::stab_of(*m.dst, ap, true);
    Subgroup Wa = Subgroup::preimage(Wg, phi.img, o.stab_alpha);
    Subgroup Wpm = Subgroup::preimage(Wg, phi.img, o.stab_pm);
    Subgroup Wap = Subgroup::preimage(Wg, phi.img, Sa);
    Subgroup Wpmp = Subgroup::preimage(Wg, phi.img, Spm);

    auto transfer_into = [&](const Subgroup& big, const Subgroup& small, int u) {
      std::vector<int> idx;
      auto bg = subgroup_as_group(Wg, big, &idx);
      std::vector<int> small_local;
      for (int g : small.elems) small_local.push_back(idx[g]);
      Subgroup sl = Subgroup::from_elements(*bg, small_local);
      int tau = -1;
      for (int g : big.elems)
        if (!small.contains(g)) { tau = idx[g]; break; }
      auto t = transfer_hom(bg, sl, tau);
      int cls = t.hom(idx[u]);
      int local = sl.elems[t.hab.reps[cls]];
      // back to a parent-group element of the small subgroup
      return big.elems[local];
    };

    // compare classes inside the abelianization of the big alpha-stabilizer
    std::vector<int> idx_ap;
    auto Hap = subgroup_as_group(Wg, Wap, &idx_ap);
    auto ab = abelianization(Hap);
    for (int u : Wpm.elems) {
      int small_val = transfer_into(Wpm, Wa, u);
      int big_val = transfer_into(Wpmp, Wap, u);
      if (ab.proj(idx_ap[small_val]) != ab.proj(idx_ap[big_val])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cover pushforward.  Element-level transport requires degree-one norms:
// matching backends and matching stabilizers between a source orbit and its
// image orbit.  The image value collects one factor per source orbit; on a
// symmetric image, asymmetric source orbits contribute their x-value to the
// fiber coordinate.

struct CoverMapContext {
  const SurjSigmaMap* m = nullptr;
  const CoverContext* src = nullptr;
  const CoverContext* dst = nullptr;
  std::vector<std::vector<int>> preim;  // dst orbit -> src orbit indices
};

inline CoverMapContext make_cover_map(const SurjSigmaMap& m, const CoverContext& src,
                                      const CoverContext& dst) {
  CoverMapContext cm;
  cm.m = &m;
  cm.src = &src;
  cm.dst = &dst;
  cm.preim.resize(m.dst_orbits.size());
  for (size_t o = 0; o < m.src_orbits.size(); ++o) {
    int oi = m.orbit_image[o];
    if (m.f[m.src_orbits[o].rep] != m.dst_orbits[oi].rep)
      throw std::invalid_argument("source orbit representative must map onto the image representative");
    if (!(src.backend[o] == dst.backend[oi]))
      throw std::invalid_argument("element transport needs matching field models (degree-one norms)");
    const OrbitInfo& so = m.src_orbits[o];
    const OrbitInfo& dst_o = m.dst_orbits[oi];
    // degree-one norm: matching alpha-stabilizers
    Subgroup Sa = fundetail::stab_of(*m.dst, dst_o.rep, false);
    if (Sa.elems != so.stab_alpha.elems)
      throw std::invalid_argument("element transport needs matching stabilizers (degree-one norms)");
    if (so.symmetric && dst_o.symmetric) {
      Subgroup Spm = fundetail::stab_of(*m.dst, dst_o.rep, true);
      if (Spm.elems != so.stab_pm.elems)
        throw std::invalid_argument("element transport needs matching ± stabilizers");
    }
    if (so.symmetric && !dst_o.symmetric)
      throw std::logic_error("symmetric orbit over an asymmetric image");
    // the fiber over the image representative meets this orbit as expected
    std::vector<int> fiber;
    for (int el : so.elements)
      if (m.f[el] == dst_o.rep) fiber.push_back(el);
    if (so.symmetric || !dst_o.symmetric) {
      if (fiber != std::vector<int>{so.rep})
        throw std::invalid_argument("unsupported fiber configuration over the image representative");
    } else {
      // asymmetric source over symmetric image: the representative and one
      // partner from the negated half
      auto gorb = m.src->gamma_orbit(so.rep);
      if (fiber.size() != 2 || fiber[0] != so.rep ||
          std::binary_search(gorb.begin(), gorb.end(), fiber[1]))
        throw std::invalid_argument("unsupported fiber configuration over the image representative");
    }
    cm.preim[oi].push_back((int)o);
  }
  return cm;
}

inline RationalFamily family_pushforward(const CoverMapContext& cm, const RationalFamily& x) {
  validate_family(*cm.src, x);
  RationalFamily out;
  for (size_t oi = 0; oi < cm.m->dst_orbits.size(); ++oi) {
    const FieldBackend& B = cm.dst->backend[oi];
    FieldElement v = field_one(B);
    for (int o : cm.preim[oi]) {
      if (!cm.m->src_orbits[o].symmetric && cm.m->dst_orbits[oi].symmetric) {
        // both fiber representatives contribute: x and its inverse conjugate
        v = field_mul(B, v, field_div(B, x.x[o], field_conj(B, x.x[o])));
      } else {
        v = field_mul(B, v, x.x[o]);
      }
    }
    out.x.push_back(v);
  }
  return out;
}

inline CoverElement cover_pushforward(const CoverMapContext& cm, const CoverElement& e) {
  RationalFamily x = family_pushforward(cm, e.x);
  std::vector<std::optional<FieldElement>> deltas(cm.m->dst_orbits.size());
  for (size_t oi = 0; oi < cm.m->dst_orbits.size(); ++oi) {
    if (!cm.m->dst_orbits[oi].symmetric) continue;
    const FieldBackend& B = cm.dst->backend[oi];
    FieldElement d = field_one(B);
    for (int o : cm.preim[oi])
      d = field_mul(B, d, cm.m->src_orbits[o].symmetric ? *e.delta[o] : e.x.x[o]);
    deltas[oi] = d;
  }
  return cover_make(*cm.dst, std::move(x), e.eps, std::move(deltas));
}

// ---------------------------------------------------------------------------
// Gauge pullback and exact agreement of the quadratic tables

inline Gauge pullback_gauge(const SurjSigmaMap& m, const Gauge& pp) {
  pp.validate(*m.dst);
  std::vector<int> p(m.src->size());
  for (int i = 0; i < m.src->size(); ++i) p[i] = pp.p[m.f[i]];
  return finish_gauge(*m.src, std::move(p));
}

struct LGroupIdReport {
  bool tits_equal = false;
  bool cochain_equal = false;
  Gauge p, q;
};

inline LGroupIdReport lgroup_identification(const SurjSigmaMap& m, const Gauge& pp,
                                            const Gauge& qp) {
  LGroupIdReport rep;
  rep.p = pullback_gauge(m, pp);
  rep.q = pullback_gauge(m, qp);
  rep.tits_equal = cochain_eq(map_cochain(tits_cocycle(*m.src, rep.p), m.f_star, m.dst->lat),
                              tits_cocycle(*m.dst, pp));
  rep.cochain_equal =
      cochain_eq(map_cochain(gauge_cochain(*m.src, rep.p, rep.q), m.f_star, m.dst->lat),
                 gauge_cochain(*m.dst, pp, qp));
  return rep;
}

// ---------------------------------------------------------------------------
// Character transport.  Precomposition with the norm, expressed on character
// descriptors: the uniformizer image is the supplied norm of the source
// uniformizer; the residue part transports through the residue-field norm
// raised to the ramification degree.

inline CharacterSpec inf_character_spec(const FieldBackend& src, const FieldBackend& dst,
                                        const CharacterSpec& spec, int e = 1,
                                        const std::optional<FieldElement>& pi_image = std::nullopt) {
  if (src.is_archimedean() != dst.is_archimedean())
    throw std::invalid_argument("character transport needs matching field types");
  if (src.is_archimedean()) return spec;  // identity norm
  if (src.p != dst.p) throw std::invalid_argument("character transport needs matching p");
  if (src == dst && e == 1) return spec;
  long long qs = src.q_alpha(), qt = dst.q_alpha();
  CharacterSpec out;
  out.m = 0;
  // uniformizer part: value of the target character at the norm of the
  // source uniformizer
  if (!pi_image) throw std::invalid_argument("character transport needs the uniformizer norm");
  out.c_pi = eval_character(dst, spec, *pi_image);
  // residue part
  long long d;  // discrete log of the residue-norm of the source generator
  if (qs == qt) {
    if (src.kind == FieldKind::PadicUnramified &&
        (dst.kind != FieldKind::PadicUnramified || src.u != dst.u))
      throw std::invalid_argument("unsupported residue identification");
    d = 1;
  } else if (qs == qt * qt) {
    const auto& ts = fdetail::residue_table(src);
    long long a = ts.gen.first, b = ts.gen.second;
    long long n = ((a * a - src.u % src.p * b % src.p * b) % src.p + src.p) % src.p;
    FieldElement nr = padic(dst, 0, n, 0);
    d = residue_dlog(dst, nr);
  } else {
    throw std::invalid_argument("unsupported residue tower");
  }
  long long qm1 = qs - 1;
  out.rho_exp = ((spec.rho_exp % qm1) * (e % qm1) % qm1 * (d % qm1) % qm1 * ((qs - 1) / (qt - 1)) %
                 qm1 + qm1) % qm1;
  return out;
}

inline ChiData inf_chi(const CoverMapContext& cm, const ChiData& chi_dst) {
  validate_chi_data(*cm.dst, chi_dst);
  ChiData out;
  for (size_t o = 0; o < cm.m->src_orbits.size(); ++o) {
    int oi = cm.m->orbit_image[o];
    out.chi.push_back(inf_character_spec(cm.src->backend[o], cm.dst->backend[oi],
                                         chi_dst.chi[oi]));
  }
  validate_chi_data(*cm.src, out);
  return out;
}

inline ZetaData inf_zeta(const CoverMapContext& cm, const ZetaData& zeta_dst) {
  validate_zeta_data(*cm.dst, zeta_dst);
  ZetaData out;
  for (size_t o = 0; o < cm.m->src_orbits.size(); ++o) {
    int oi = cm.m->orbit_image[o];
    out.zeta.push_back(inf_character_spec(cm.src->backend[o], cm.dst->backend[oi],
                                          zeta_dst.zeta[oi]));
  }
  validate_zeta_data(*cm.src, out);
  return out;
}

// minimally ramified replacement: trivial on asymmetric orbits, canonical
// unramified extension on unramified symmetric orbits, unchanged elsewhere
inline ChiData min_chi(const CoverContext& ctx, const ChiData& chi) {
  validate_chi_data(ctx, chi);
  ChiData out;
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    if (!ctx.orbits[o].symmetric)
      out.chi.push_back(CharacterSpec{});
    else if (ctx.backend[o].kind == FieldKind::PadicUnramified)
      out.chi.push_back(canonical_unramified_chi());
    else
      out.chi.push_back(chi.chi[o]);
  }
  validate_chi_data(ctx, out);
  return out;
}

// ---------------------------------------------------------------------------
// The minimal-difference sign character, computed two ways

struct MindiffOrbit {
  FieldBackend target;                    // backend of the image orbit
  bool target_symmetric = false;
  int e = 1;                              // ramification degree of the tower
  std::optional<FieldElement> pi_image;   // norm of the source uniformizer
};

struct MindiffResult {
  int direct = 1;
  int closed = 1;
  bool equal() const { return direct == closed; }
};

inline MindiffResult mindiff_character(const CoverContext& ctxT,
                                       const std::vector<MindiffOrbit>& plan,
                                       const std::vector<CharacterSpec>& chi_target,
                                       const RationalFamily& x) {
  if (plan.size() != ctxT.orbits.size() || chi_target.size() != ctxT.orbits.size())
    throw std::invalid_argument("one transport plan and target character per orbit required");
  validate_family(ctxT, x);
  for (size_t o = 0; o < ctxT.orbits.size(); ++o) {
    if (ctxT.backend[o].is_archimedean())
      throw std::invalid_argument("minimal-difference character is non-archimedean");
    if (x.x[o].v != 0) throw std::invalid_argument("minimal-difference input must be a unit family");
  }

  // direct: ζ = (min inf χ') · (inf χ')⁻¹ evaluated as a descent character
  ZetaData zd;
  ChiData inf_data;
  for (size_t o = 0; o < ctxT.orbits.size(); ++o)
    inf_data.chi.push_back(inf_character_spec(ctxT.backend[o], plan[o].target, chi_target[o],
                                              plan[o].e, plan[o].pi_image));
  ChiData min_data = min_chi(ctxT, inf_data);
  for (size_t o = 0; o < ctxT.orbits.size(); ++o)
    zd.zeta.push_back(min_data.chi[o].times(inf_data.chi[o].inverse()));
  Frac val = zeta_S(ctxT, zd, x);
  MindiffResult res;
  if (val == Frac(1, 2)) res.direct = -1;
  else if (!val.is_zero()) throw std::logic_error("minimal-difference value is not a sign");

  // closed formula: residue signs over the orbits whose image is ramified
  // symmetric
  for (size_t o = 0; o < ctxT.orbits.size(); ++o) {
    if (!(plan[o].target_symmetric && plan[o].target.kind == FieldKind::PadicRamified)) continue;
    const FieldBackend& B = ctxT.backend[o];
    int s = 1;
    if (!ctxT.orbits[o].symmetric)
      s = residue_sign(B, x.x[o]);
    else if (B.kind == FieldKind::PadicUnramified)
      s = norm_one_residue_sign(B, x.x[o]);
    else
      continue;  // ramified symmetric source: no contribution
    if (plan[o].e % 2 != 0) res.closed *= s;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Weil-side transport and the compatibility report

inline WeilChiData inf_weil_chi(const CoverMapContext& cm, const WeilModel& wmT,
                                const WeilModel& wmS, const WeilChiData& d_dst) {
  if (wmT.W != wmS.W || wmT.phi.img != wmS.phi.img)
    throw std::invalid_argument("Weil transport needs a common covering group");
  validate_weil_chi(wmS, d_dst);
  WeilChiData out;
  for (size_t o = 0; o < cm.m->src_orbits.size(); ++o) {
    int oi = cm.m->orbit_image[o];
    OrbitCharacter c;
    for (int w : wmT.ch[o].W_alpha.elems)
      c.val.push_back(d_dst.chi[oi].val[wmS.alpha_index(oi, w)]);
    out.chi.push_back(std::move(c));
  }
  validate_weil_chi(wmT, out);
  return out;
}

struct FunctorialityReport {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

inline FunctorialityReport llcfunc_verify(const CoverMapContext& cm, const ChiData& chi_dst,
                                          const ZetaData& zeta_dst,
                                          const std::vector<CoverElement>& samples,
                                          const WeilModel& wmT, const WeilModel& wmS,
                                          const WeilChiData& wchi_dst, const Gauge& qp) {
  FunctorialityReport rep;
  ChiData chi_src = inf_chi(cm, chi_dst);
  ZetaData zeta_src = inf_zeta(cm, zeta_dst);
  for (const CoverElement& e : samples) {
    CoverElement pushed = cover_pushforward(cm, e);
    rep.require(chi_S(*cm.dst, chi_dst, pushed) == chi_S(*cm.src, chi_src, e),
                "pulled-back genuine character differs");
    rep.require(zeta_S(*cm.dst, zeta_dst, pushed.x) == zeta_S(*cm.src, zeta_src, e.x),
                "pulled-back descent character differs");
  }
  Gauge q = pullback_gauge(*cm.m, qp);
  WeilChiData wchi_src = inf_weil_chi(cm, wmT, wmS, wchi_dst);
  Cochain rS = r_q(wmS, wchi_dst, qp);
  Cochain rT = map_cochain(r_q(wmT, wchi_src, q), cm.m->f_star, wmS.latW);
  rep.require(cohomologous(rS, rT), "parameter cochains are not cohomologous");
  return rep;
}

}  // namespace covertorus

#endif
