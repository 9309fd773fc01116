// Finite Weil-group models over a Σ-set: per-orbit transversal choices, orbit
// characters with their restriction conditions, the parameter cochains z_ζ
// and r_p (with the section-based alternative form), parameter matching, and
// the rank-wise polar cover comparison.
#ifndef COVERTORUS_WEIL_HPP
#define COVERTORUS_WEIL_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covertorus/cover.hpp"
#include "covertorus/tits.hpp"

namespace covertorus {

struct WeilOrbitChoices {
  Subgroup W_alpha;          // preimage of Γ_α
  Subgroup W_pm;             // preimage of Γ_{±α}
  std::vector<int> w;        // transversal of W_{±α}\W
  int v0 = 0;                // element of W_α
  int v1 = -1;               // element of W_{±α} ∖ W_α (symmetric orbits)
  // transfer bookkeeping (symmetric orbits)
  GroupPtr pm_group;
  std::vector<int> pm_index;
  std::optional<TransferData> transfer;
  Subgroup alpha_in_pm;
};

struct WeilModel {
  GroupPtr W;
  GroupHom phi;              // W -> Γ of the Σ-set
  const SigmaSet* R = nullptr;
  std::vector<OrbitInfo> orbits;
  GaloisLattice latW;        // ambient lattice with the action pulled back to W
  std::vector<WeilOrbitChoices> ch;

  int alpha_index(size_t o, int w_elem) const {
    const auto& els = ch[o].W_alpha.elems;
    auto it = std::lower_bound(els.begin(), els.end(), w_elem);
    if (it == els.end() || *it != w_elem)
      throw std::invalid_argument("element outside the orbit stabilizer subgroup");
    return (int)(it - els.begin());
  }

  // v_0(u): v_0·u = v_0(u)·v_j with v_0(u) ∈ W_α
  int v0_of(size_t o, int u) const {
    const WeilOrbitChoices& c = ch[o];
    int x = W->op(c.v0, u);
    int h = W->op(x, W->invert(c.v0));
    if (c.W_alpha.contains(h)) return h;
    if (c.v1 < 0) throw std::logic_error("stabilizer decomposition failed");
    h = W->op(x, W->invert(c.v1));
    if (!c.W_alpha.contains(h)) throw std::logic_error("stabilizer decomposition failed");
    return h;
  }
};

inline void finish_choices(WeilModel& wm, size_t o) {
  WeilOrbitChoices& c = wm.ch[o];
  const FiniteGroup& W = *wm.W;
  const OrbitInfo& info = wm.orbits[o];
  if (!c.W_alpha.contains(c.v0)) throw std::invalid_argument("v0 must stabilize the representative");
  if (info.symmetric) {
    if (c.v1 < 0 || !c.W_pm.contains(c.v1) || c.W_alpha.contains(c.v1))
      throw std::invalid_argument("v1 must lie in the ± stabilizer outside the stabilizer");
  } else if (c.v1 >= 0) {
    throw std::invalid_argument("asymmetric orbits take no v1");
  }
  if (c.w.size() * c.W_pm.size() != (size_t)W.n)
    throw std::invalid_argument("transversal size mismatch");
  std::vector<char> seen(W.n, 0);
  for (int rep : c.w)
    for (int u : c.W_pm.elems) {
      int g = W.op(u, rep);
      if (seen[g]) throw std::invalid_argument("transversal has overlapping cosets");
      seen[g] = 1;
    }
  if (info.symmetric) {
    c.pm_group = subgroup_as_group(W, c.W_pm, &c.pm_index);
    std::vector<int> alpha_local;
    for (int g : c.W_alpha.elems) alpha_local.push_back(c.pm_index[g]);
    c.alpha_in_pm = Subgroup::from_elements(*c.pm_group, alpha_local);
    c.transfer = transfer_hom(c.pm_group, c.alpha_in_pm, c.pm_index[c.v1]);
  }
}

inline WeilModel weil_model(const SigmaSet& R, GroupPtr W, GroupHom phi) {
  phi.validate();
  if (!phi.is_surjective()) throw std::invalid_argument("Weil model needs a surjection onto Γ");
  if (phi.src != W || phi.dst != R.gamma())
    throw std::invalid_argument("projection endpoints mismatch");
  WeilModel wm;
  wm.W = W;
  wm.phi = phi;
  wm.R = &R;
  wm.orbits = classify(R);
  wm.latW.gamma = W;
  wm.latW.rank = R.lat.rank;
  wm.latW.act.resize(W->n);
  for (int g = 0; g < W->n; ++g) wm.latW.act[g] = R.lat.act[phi(g)];
  wm.latW.validate();
  wm.ch.resize(wm.orbits.size());
  for (size_t o = 0; o < wm.orbits.size(); ++o) {
    WeilOrbitChoices& c = wm.ch[o];
    c.W_alpha = Subgroup::preimage(*W, phi.img, wm.orbits[o].stab_alpha);
    c.W_pm = Subgroup::preimage(*W, phi.img, wm.orbits[o].stab_pm);
    c.w = right_coset_reps(*W, c.W_pm);
    c.v0 = 0;
    if (wm.orbits[o].symmetric)
      for (int g : c.W_pm.elems)
        if (!c.W_alpha.contains(g)) { c.v1 = g; break; }
    finish_choices(wm, o);
  }
  return wm;
}

// the gauge p(w_i⁻¹α) = +1 determined by the transversal images in Γ
inline Gauge model_gauge(const WeilModel& wm) {
  std::vector<std::vector<int>> wreps;
  for (size_t o = 0; o < wm.orbits.size(); ++o) {
    std::vector<int> r;
    for (int wi : wm.ch[o].w) r.push_back(wm.phi(wi));
    wreps.push_back(std::move(r));
  }
  return make_gauge_from_reps(*wm.R, wm.orbits, wreps);
}

// a character of W_α (values indexed along W_α's element list)
struct OrbitCharacter {
  std::vector<Frac> val;
};

struct WeilChiData {
  std::vector<OrbitCharacter> chi;
};

namespace wdetail {

inline void check_multiplicative(const WeilModel& wm, size_t o, const OrbitCharacter& c) {
  const auto& els = wm.ch[o].W_alpha.elems;
  if (c.val.size() != els.size()) throw std::invalid_argument("character table size mismatch");
  for (size_t a = 0; a < els.size(); ++a)
    for (size_t b = 0; b < els.size(); ++b) {
      int prod = wm.W->op(els[a], els[b]);
      if (c.val[wm.alpha_index(o, prod)] != (c.val[a] + c.val[b]).mod1())
        throw std::invalid_argument("orbit character is not multiplicative");
    }
}

// value of χ∘transfer at u ∈ W_{±α}
inline Frac transfer_value(const WeilModel& wm, size_t o, const OrbitCharacter& c, int u) {
  const WeilOrbitChoices& cc = wm.ch[o];
  const TransferData& t = *cc.transfer;
  int cls = t.hom(cc.pm_index[u]);
  int h_local = t.hab.reps[cls];
  int pm_local = cc.alpha_in_pm.elems[h_local];
  int w_elem = cc.W_pm.elems[pm_local];
  return c.val[wm.alpha_index(o, w_elem)];
}

}  // namespace wdetail

// symmetric condition: χ_α∘transfer = κ_α∘φ on W_{±α}; trivial_target swaps
// κ for the trivial character (ζ-data)
inline bool check_weil_condition(const WeilModel& wm, size_t o, const OrbitCharacter& c,
                                 bool trivial_target) {
  wdetail::check_multiplicative(wm, o, c);
  if (!wm.orbits[o].symmetric) return true;
  for (int u : wm.ch[o].W_pm.elems) {
    Frac target = !trivial_target && wm.orbits[o].kappa(wm.phi(u)) == -1 ? Frac(1, 2) : Frac(0);
    if (wdetail::transfer_value(wm, o, c, u) != target) return false;
  }
  return true;
}

inline void validate_weil_chi(const WeilModel& wm, const WeilChiData& d, bool trivial_target = false) {
  if (d.chi.size() != wm.orbits.size())
    throw std::invalid_argument("one orbit character per orbit required");
  for (size_t o = 0; o < wm.orbits.size(); ++o)
    if (!check_weil_condition(wm, o, d.chi[o], trivial_target))
      throw std::invalid_argument("orbit character fails its restriction condition");
}

// all characters of W_α, optionally filtered by the restriction condition
inline std::vector<OrbitCharacter> orbit_characters(const WeilModel& wm, size_t o) {
  auto Ha = subgroup_as_group(*wm.W, wm.ch[o].W_alpha);
  auto ab = abelianization(Ha);
  auto chars = abelian_characters(*ab.quotient);
  std::vector<OrbitCharacter> out;
  for (const auto& ch : chars) {
    OrbitCharacter c;
    for (int i = 0; i < Ha->n; ++i) c.val.push_back(ch[ab.proj(i)]);
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<OrbitCharacter> admissible_orbit_characters(const WeilModel& wm, size_t o,
                                                               bool trivial_target) {
  std::vector<OrbitCharacter> out;
  for (auto& c : orbit_characters(wm, o))
    if (check_weil_condition(wm, o, c, trivial_target)) out.push_back(std::move(c));
  return out;
}

inline WeilChiData weil_chi_times(const WeilChiData& a, const WeilChiData& b) {
  WeilChiData out;
  for (size_t o = 0; o < a.chi.size(); ++o) {
    OrbitCharacter c;
    for (size_t i = 0; i < a.chi[o].val.size(); ++i)
      c.val.push_back((a.chi[o].val[i] + b.chi[o].val[i]).mod1());
    out.chi.push_back(std::move(c));
  }
  return out;
}

// the parameter cochain: value at w is Σ_orbits Σ_i χ_α(v_0(u_i(w))) · (w_i⁻¹ᾱ)
inline Cochain parameter_cochain(const WeilModel& wm, const WeilChiData& d) {
  const FiniteGroup& W = *wm.W;
  Cochain out = Cochain::zero(wm.latW, 1);
  for (int w = 0; w < W.n; ++w) {
    TorusElement val(wm.latW.rank, Frac(0));
    for (size_t o = 0; o < wm.orbits.size(); ++o) {
      const WeilOrbitChoices& c = wm.ch[o];
      for (size_t i = 0; i < c.w.size(); ++i) {
        auto [j, u] = right_coset_decompose(W, c.W_pm, c.w, W.op(c.w[i], w));
        Frac x = d.chi[o].val[wm.alpha_index(o, wm.v0_of(o, u))];
        if (x.is_zero()) continue;
        IVec vec = wm.R->lat.apply_vec(wm.phi(W.invert(c.w[i])), wm.R->bar[wm.orbits[o].rep]);
        for (int r = 0; r < wm.latW.rank; ++r)
          val[r] = (val[r] + x * Frac(vec[r])).mod1();
      }
    }
    out.at({w}) = val;
  }
  return out;
}

inline Cochain r_p(const WeilModel& wm, const WeilChiData& d) {
  validate_weil_chi(wm, d, false);
  return parameter_cochain(wm, d);
}

inline Cochain z_zeta(const WeilModel& wm, const WeilChiData& d) {
  validate_weil_chi(wm, d, true);
  Cochain z = parameter_cochain(wm, d);
  if (!is_cocycle(z)) throw std::logic_error("descent parameter is not a cocycle");
  return z;
}

// section form: r_p(w) = Σ_orbits Σ_cosets χ_α(v_0(r(s_i)⁻¹ r(s_i·w))) · (s_i⁻¹ᾱ)
// with r(g)·s(coset of g) = g; sections default to the stored transversals
inline Cochain r_p_section_form(const WeilModel& wm, const WeilChiData& d,
                                const std::vector<std::vector<int>>* sections = nullptr) {
  validate_weil_chi(wm, d, false);
  const FiniteGroup& W = *wm.W;
  Cochain out = Cochain::zero(wm.latW, 1);
  for (int w = 0; w < W.n; ++w) {
    TorusElement val(wm.latW.rank, Frac(0));
    for (size_t o = 0; o < wm.orbits.size(); ++o) {
      const WeilOrbitChoices& c = wm.ch[o];
      const std::vector<int>& sec = sections ? (*sections)[o] : c.w;
      auto rpart = [&](int g) {
        auto [j, u] = right_coset_decompose(W, c.W_pm, c.w, g);
        int r = W.op(g, W.invert(sec[j]));
        if (!c.W_pm.contains(r)) throw std::invalid_argument("section leaves its coset");
        return r;
      };
      for (size_t i = 0; i < c.w.size(); ++i) {
        int a = W.op(W.invert(rpart(sec[i])), rpart(W.op(sec[i], w)));
        Frac x = d.chi[o].val[wm.alpha_index(o, wm.v0_of(o, a))];
        if (x.is_zero()) continue;
        IVec vec = wm.R->lat.apply_vec(wm.phi(W.invert(sec[i])), wm.R->bar[wm.orbits[o].rep]);
        for (int r = 0; r < wm.latW.rank; ++r)
          val[r] = (val[r] + x * Frac(vec[r])).mod1();
      }
    }
    out.at({w}) = val;
  }
  return out;
}

// the cochain for an arbitrary gauge q: s_{q/p} (inflated) plus r_p
inline Cochain r_q(const WeilModel& wm, const WeilChiData& d, const Gauge& q) {
  Gauge p = model_gauge(wm);
  Cochain s = inflate(gauge_cochain(*wm.R, q, p), wm.phi);
  return cochain_add(s, r_p(wm, d));
}

// ∂r_p must be the inflation of the Tits cocycle at the model gauge
inline bool check_parameter_differential(const WeilModel& wm, const Cochain& rp) {
  Gauge p = model_gauge(wm);
  Cochain t = inflate(tits_cocycle(*wm.R, p), wm.phi);
  return cochain_eq(differential(rp), t);
}

// parameter of a genuine character presented as θ-parameter t plus χ-data
inline Cochain llc_match(const WeilModel& wm, const Cochain& t, const WeilChiData& d) {
  if (t.degree != 1 || !is_cocycle(t)) throw std::invalid_argument("theta parameter must be a 1-cocycle");
  return cochain_add(t, r_p(wm, d));
}

// ---------------------------------------------------------------------------
// Real-torus comparison for a half-integral weight vector γ: the Σ-set
// {±2γ} with the sign involution, its Tits table, splitting status, the
// explicit polar cover model (s, z) with z/conj(z) = [2γ](s), and the
// order-4 parameter model.

struct AdamsVoganReport {
  bool ok = true;
  std::vector<std::string> failures;
  TorusElement tits_value;
  bool tits_trivial = false;
  SplitStatus status = SplitStatus::Nonsplit;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

namespace wdetail {

struct HalfWeightModel {
  GroupPtr c2;
  SigmaSet R;
};

inline HalfWeightModel half_weight_set(const std::vector<Frac>& gamma) {
  HalfWeightModel m;
  int r = (int)gamma.size();
  IVec two_gamma(r);
  for (int i = 0; i < r; ++i) {
    Frac d = (gamma[i] + gamma[i]);
    if (d.den != 1) throw std::invalid_argument("weight vector must be half-integral");
    two_gamma[i] = d.num;
  }
  m.c2 = std::make_shared<FiniteGroup>(FiniteGroup::from_perms({{1, 0}}));
  m.R.lat.gamma = m.c2;
  m.R.lat.rank = r;
  IMat neg = imat_identity(r);
  for (int i = 0; i < r; ++i) neg[i][i] = -1;
  m.R.lat.act = {imat_identity(r), neg};
  m.R.lat.validate();
  m.R.gact = {{0, 1}, {1, 0}};
  m.R.neg = {1, 0};
  m.R.bar = {two_gamma, ivec_neg(two_gamma)};
  m.R.validate();
  return m;
}

}  // namespace wdetail

inline AdamsVoganReport adams_vogan_check(const std::vector<Frac>& gamma, int samples = 100,
                                          unsigned long long seed = 0x5eed) {
  AdamsVoganReport rep;
  auto m = wdetail::half_weight_set(gamma);
  int r = (int)gamma.size();
  bool integral = true;
  for (const Frac& g : gamma)
    if (g.den != 1) integral = false;

  // Tits table of the default gauge: the only nonzero entry is γ mod 1
  Gauge p = make_gauge_halfset(m.R);
  Cochain t = tits_cocycle(m.R, p);
  rep.tits_value = t.at({1, 1});
  TorusElement expect(r);
  for (int i = 0; i < r; ++i) expect[i] = gamma[i].mod1();
  rep.require(rep.tits_value == expect, "Tits value differs from the weight");
  rep.require(t.at({0, 1}) == TorusElement(r, Frac(0)) && t.at({1, 0}) == TorusElement(r, Frac(0)),
              "normalization failure");
  rep.tits_trivial = is_coboundary(t).yes;
  rep.require(rep.tits_trivial == integral, "triviality does not match integrality");

  // splitting of the real cover
  auto ctx = make_context(m.R, {FieldBackend::archimedean()});
  rep.status = split_status(ctx);
  rep.require((rep.status == SplitStatus::CanonicalSplit) == integral,
              "splitting does not match integrality");

  // polar cover model: points (s, z) with z/conj(z) = [2γ](s)
  std::mt19937_64 rng(seed);
  auto sample = [&]() {
    std::vector<Frac> theta(r);
    for (int i = 0; i < r; ++i) theta[i] = Frac((long long)(rng() % 48), 48);
    return theta;
  };
  auto pair_at = [&](const std::vector<Frac>& theta, const Frac& extra) {
    Frac xa(0), za(0);
    for (int i = 0; i < r; ++i) {
      xa = xa + (gamma[i] + gamma[i]) * theta[i];
      za = za + gamma[i] * theta[i];
    }
    FieldElement x = polar(Frac(1), xa);
    FieldElement z = polar(Frac(1), (za + extra).mod1());
    return std::make_pair(x, z);
  };
  auto embed = [&](const FieldElement& x, const FieldElement& z) {
    return cover_make(ctx, RationalFamily{{x}}, 1, {z});
  };
  for (int s = 0; s < samples; ++s) {
    auto th1 = sample();
    auto th2 = sample();
    auto [x1, z1] = pair_at(th1, Frac(0));
    auto [x2, z2] = pair_at(th2, Frac(0));
    CoverElement e1 = embed(x1, z1);
    CoverElement e2 = embed(x2, z2);
    // multiplicative: the product pair presents the product element
    const FieldBackend& B = ctx.backend[0];
    CoverElement prod = cover_mul(ctx, e1, e2);
    rep.require(cover_eq(ctx, embed(field_mul(B, x1, x2), field_mul(B, z1, z2)), prod),
                "comparison is not multiplicative");
    // re-deriving the fiber point from the summed angles stays on the cover,
    // landing on one of the two sheets over the product
    std::vector<Frac> th12(r);
    for (int i = 0; i < r; ++i) th12[i] = (th1[i] + th2[i]).mod1();
    auto [x12, z12] = pair_at(th12, Frac(0));
    CoverElement re = embed(x12, z12);
    rep.require(cover_eq(ctx, re, prod) || cover_eq(ctx, re, cover_mul(ctx, cover_central(ctx), prod)),
                "re-derived fiber point left the two sheets");
    // z ↦ −z is the deck transformation
    CoverElement flipped = embed(x1, polar(Frac(1), (z1.angle + Frac(1, 2)).mod1()));
    rep.require(cover_eq(ctx, flipped, cover_mul(ctx, cover_central(ctx), e1)),
                "sign flip is not the deck transformation");
    rep.require(!cover_eq(ctx, flipped, e1), "fibers collapse");
    // positive rescaling of z is invisible
    CoverElement scaled = cover_make(ctx, RationalFamily{{x1}}, 1,
                                     {polar(Frac(1 + (long long)(rng() % 7)), z1.angle)});
    rep.require(cover_eq(ctx, scaled, e1), "positive rescaling changed the class");
  }

  // order-4 parameter model over the order-2 group
  auto c4 = std::make_shared<FiniteGroup>(FiniteGroup::from_perms({{1, 2, 3, 0}}));
  GroupHom phi{c4, m.c2, {0, 1, 0, 1}};
  WeilModel wm = weil_model(m.R, c4, phi);
  auto chis = admissible_orbit_characters(wm, 0, false);
  rep.require(chis.size() == 1, "expected a unique admissible orbit character");
  if (!chis.empty()) {
    WeilChiData d{{chis[0]}};
    Cochain rp = r_p(wm, d);
    rep.require(rp.at({0}) == TorusElement(r, Frac(0)) && rp.at({1}) == TorusElement(r, Frac(0)),
                "parameter does not vanish on the section part");
    rep.require(rp.at({2}) == expect && rp.at({3}) == expect,
                "parameter value differs from the weight");
    rep.require(check_parameter_differential(wm, rp), "parameter differential mismatch");
  }
  return rep;
}

}  // namespace covertorus

#endif
