// Double-cover element calculus over a Σ-set with per-orbit field models:
// rational point families, cover elements (x, ε, (δ_α)) with their
// equality/multiplication rules, splitting status, the genuine character χ_S,
// the descent character ζ_S, and the a-data sign function a_S.
#ifndef COVERTORUS_COVER_HPP
#define COVERTORUS_COVER_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "covertorus/field.hpp"
#include "covertorus/sigma.hpp"

namespace covertorus {

// Σ-set together with one field backend per orbit (indexed like classify(R))
struct CoverContext {
  const SigmaSet* R = nullptr;
  std::vector<OrbitInfo> orbits;
  std::vector<FieldBackend> backend;

  void validate() const {
    if (!R) throw std::invalid_argument("cover context needs a sigma set");
    if (backend.size() != orbits.size())
      throw std::invalid_argument("cover context needs one backend per orbit");
  }
};

inline CoverContext make_context(const SigmaSet& R, std::vector<FieldBackend> backends) {
  CoverContext ctx;
  ctx.R = &R;
  ctx.orbits = classify(R);
  ctx.backend = std::move(backends);
  ctx.validate();
  return ctx;
}

// one x_α ∈ F_α^× per orbit representative; symmetric orbits require
// norm-one values (the negation acts there through conjugation)
struct RationalFamily {
  std::vector<FieldElement> x;
};

inline void validate_family(const CoverContext& ctx, const RationalFamily& f) {
  if (f.x.size() != ctx.orbits.size())
    throw std::invalid_argument("family needs one value per orbit");
  for (size_t o = 0; o < ctx.orbits.size(); ++o)
    if (ctx.orbits[o].symmetric &&
        !(field_norm(ctx.backend[o], f.x[o]) == field_one(ctx.backend[o])))
      throw std::invalid_argument("symmetric orbit value must have norm one");
}

inline RationalFamily family_one(const CoverContext& ctx) {
  RationalFamily f;
  for (const auto& B : ctx.backend) f.x.push_back(field_one(B));
  return f;
}

inline RationalFamily family_mul(const CoverContext& ctx, const RationalFamily& a,
                                 const RationalFamily& b) {
  RationalFamily f;
  for (size_t o = 0; o < ctx.backend.size(); ++o)
    f.x.push_back(field_mul(ctx.backend[o], a.x[o], b.x[o]));
  return f;
}

inline bool family_eq(const RationalFamily& a, const RationalFamily& b) { return a.x == b.x; }

struct CoverElement {
  RationalFamily x;
  int eps = 1;
  std::vector<std::optional<FieldElement>> delta;  // symmetric orbits only
};

inline CoverElement cover_make(const CoverContext& ctx, RationalFamily x, int eps,
                               std::vector<std::optional<FieldElement>> deltas) {
  validate_family(ctx, x);
  if (eps != 1 && eps != -1) throw std::invalid_argument("sign must be ±1");
  if (deltas.size() != ctx.orbits.size())
    throw std::invalid_argument("one delta slot per orbit required");
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    if (!ctx.orbits[o].symmetric) {
      if (deltas[o]) throw std::invalid_argument("delta given on an asymmetric orbit");
      continue;
    }
    if (!deltas[o]) throw std::invalid_argument("symmetric orbit needs a delta");
    if (!(norm_one_of(ctx.backend[o], *deltas[o]) == x.x[o]))
      throw std::invalid_argument("delta does not present the orbit value");
  }
  CoverElement e;
  e.x = std::move(x);
  e.eps = eps;
  e.delta = std::move(deltas);
  return e;
}

// economical form: ε = +1
inline CoverElement cover_make(const CoverContext& ctx, RationalFamily x,
                               std::vector<std::optional<FieldElement>> deltas) {
  return cover_make(ctx, std::move(x), 1, std::move(deltas));
}

inline CoverElement cover_identity(const CoverContext& ctx) {
  std::vector<std::optional<FieldElement>> d(ctx.orbits.size());
  for (size_t o = 0; o < ctx.orbits.size(); ++o)
    if (ctx.orbits[o].symmetric) d[o] = field_one(ctx.backend[o]);
  return cover_make(ctx, family_one(ctx), 1, std::move(d));
}

inline CoverElement cover_central(const CoverContext& ctx) {
  CoverElement e = cover_identity(ctx);
  e.eps = -1;
  return e;
}

inline CoverElement cover_mul(const CoverContext& ctx, const CoverElement& a,
                              const CoverElement& b) {
  CoverElement e;
  e.x = family_mul(ctx, a.x, b.x);
  e.eps = a.eps * b.eps;
  e.delta.resize(ctx.orbits.size());
  for (size_t o = 0; o < ctx.orbits.size(); ++o)
    if (ctx.orbits[o].symmetric)
      e.delta[o] = field_mul(ctx.backend[o], *a.delta[o], *b.delta[o]);
  return e;
}

// equality through the representation relation: η_α = δ'_α/δ_α must lie in
// the base field and the sign must absorb ∏ κ_α(η_α)
inline bool cover_eq(const CoverContext& ctx, const CoverElement& a, const CoverElement& b) {
  if (!family_eq(a.x, b.x)) return false;
  int sign = 1;
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    if (!ctx.orbits[o].symmetric) continue;
    FieldElement eta = field_div(ctx.backend[o], *b.delta[o], *a.delta[o]);
    if (!in_base_field(ctx.backend[o], eta)) return false;
    sign *= kappa(ctx.backend[o], eta);
  }
  return a.eps * b.eps == sign;
}

// ---------------------------------------------------------------------------
// Splitting status

enum class SplitStatus { CanonicalSplit, SplitNonCanonical, Nonsplit };

inline SplitStatus orbit_split_status(const CoverContext& ctx, size_t o) {
  const OrbitInfo& info = ctx.orbits[o];
  bool divisible = true;
  for (long long v : ctx.R->bar[info.rep])
    if (v % 2 != 0) { divisible = false; break; }
  if (divisible) return SplitStatus::CanonicalSplit;
  if (!info.symmetric) return SplitStatus::CanonicalSplit;
  const FieldBackend& B = ctx.backend[o];
  if (B.is_archimedean()) return SplitStatus::Nonsplit;
  if (B.kind == FieldKind::PadicUnramified) return SplitStatus::CanonicalSplit;
  return B.q_alpha() % 4 == 1 ? SplitStatus::SplitNonCanonical : SplitStatus::Nonsplit;
}

inline SplitStatus split_status(const CoverContext& ctx) {
  SplitStatus agg = SplitStatus::CanonicalSplit;
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    SplitStatus s = orbit_split_status(ctx, o);
    if (s == SplitStatus::Nonsplit) return SplitStatus::Nonsplit;
    if (s == SplitStatus::SplitNonCanonical) agg = SplitStatus::SplitNonCanonical;
  }
  return agg;
}

// ---------------------------------------------------------------------------
// Character data: one CharacterSpec per orbit

struct ChiData {
  std::vector<CharacterSpec> chi;
};

inline void validate_chi_data(const CoverContext& ctx, const ChiData& d) {
  if (d.chi.size() != ctx.orbits.size())
    throw std::invalid_argument("chi-data needs one character per orbit");
  for (size_t o = 0; o < ctx.orbits.size(); ++o)
    if (!check_chi_condition(ctx.backend[o], d.chi[o], ctx.orbits[o].symmetric))
      throw std::invalid_argument("character fails the symmetric restriction condition");
}

struct ZetaData {
  std::vector<CharacterSpec> zeta;
};

inline void validate_zeta_data(const CoverContext& ctx, const ZetaData& d) {
  if (d.zeta.size() != ctx.orbits.size())
    throw std::invalid_argument("zeta-data needs one character per orbit");
  for (size_t o = 0; o < ctx.orbits.size(); ++o)
    if (!check_zeta_condition(ctx.backend[o], d.zeta[o], ctx.orbits[o].symmetric))
      throw std::invalid_argument("character fails the trivial-restriction condition");
}

inline ChiData chi_times_zeta(const ChiData& c, const ZetaData& z) {
  ChiData out;
  for (size_t o = 0; o < c.chi.size(); ++o) out.chi.push_back(c.chi[o].times(z.zeta[o]));
  return out;
}

// genuine character value: sign part plus per-orbit character values
inline Frac chi_S(const CoverContext& ctx, const ChiData& d, const CoverElement& e) {
  validate_chi_data(ctx, d);
  Frac v = e.eps == -1 ? Frac(1, 2) : Frac(0);
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    const FieldElement& arg = ctx.orbits[o].symmetric ? *e.delta[o] : e.x.x[o];
    v = (v + eval_character(ctx.backend[o], d.chi[o], arg)).mod1();
  }
  return v;
}

// descent character: symmetric orbits evaluate at any y with y/conj(y) = x_α;
// independence of the choice is asserted against a unit twist
inline Frac zeta_S(const CoverContext& ctx, const ZetaData& d, const RationalFamily& f) {
  validate_zeta_data(ctx, d);
  validate_family(ctx, f);
  Frac v(0);
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    const FieldBackend& B = ctx.backend[o];
    if (!ctx.orbits[o].symmetric) {
      v = (v + eval_character(B, d.zeta[o], f.x[o])).mod1();
      continue;
    }
    FieldElement y = norm_one_preimage(B, f.x[o]);
    Frac val = eval_character(B, d.zeta[o], y);
    FieldElement twist = B.is_archimedean() ? field_from_int(B, -1) : field_from_int(B, B.p);
    if (eval_character(B, d.zeta[o], field_mul(B, y, twist)) != val)
      throw std::logic_error("descent value depends on the preimage choice");
    v = (v + val).mod1();
  }
  return v;
}

// ---------------------------------------------------------------------------
// a-data

struct AData {
  std::vector<std::optional<FieldElement>> a;  // symmetric orbits only
};

inline void validate_a_data(const CoverContext& ctx, const AData& d) {
  if (d.a.size() != ctx.orbits.size())
    throw std::invalid_argument("a-data needs one slot per orbit");
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    if (!ctx.orbits[o].symmetric) {
      if (d.a[o]) throw std::invalid_argument("a-data given on an asymmetric orbit");
      continue;
    }
    if (!d.a[o]) throw std::invalid_argument("symmetric orbit needs a-data");
    if (!is_trace_zero(ctx.backend[o], *d.a[o]))
      throw std::invalid_argument("a-data must be trace-zero");
  }
}

// δ − conj(δ), valid when δ/conj(δ) ≠ 1; archimedean case from angles alone
inline FieldElement delta_minus_conj(const FieldBackend& B, const FieldElement& delta) {
  if (B.is_archimedean()) {
    Frac t = delta.angle.mod1();
    if (t.is_zero() || t == Frac(1, 2))
      throw std::domain_error("real delta has vanishing imaginary part");
    bool upper = t < Frac(1, 2);
    return polar(Frac(1), Frac(upper ? 1 : 3, 4));
  }
  return field_add(B, delta, field_neg(B, field_conj(B, delta)));
}

inline int a_S(const CoverContext& ctx, const AData& d, const CoverElement& e) {
  validate_a_data(ctx, d);
  int sign = e.eps;
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    if (!ctx.orbits[o].symmetric) continue;
    const FieldBackend& B = ctx.backend[o];
    if (e.x.x[o] == field_one(B)) continue;
    FieldElement diff = delta_minus_conj(B, *e.delta[o]);
    sign *= trace_zero_ratio_sign(B, diff, *d.a[o]);
  }
  return sign;
}

}  // namespace covertorus

#endif
