// Exact models of the quadratic local-field extensions attached to orbits:
// archimedean C/R in polar form, and p-adic quadratic extensions (unramified
// and ramified, odd p) at fixed precision, with conjugation, norms, the
// quadratic norm character, residue data and tame character evaluation.
#ifndef COVERTORUS_FIELD_HPP
#define COVERTORUS_FIELD_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertorus/rational.hpp"

namespace covertorus {

enum class FieldKind { ArchimedeanPolar, PadicUnramified, PadicRamified };

inline long long mod_pow(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

inline long long mod_inv(long long a, long long mod) {
  long long g = mod, x = 0, x1 = 1, a1 = a % mod;
  if (a1 < 0) a1 += mod;
  long long b = a1;
  // extended Euclid
  long long r0 = mod, r1 = b, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
  }
  if (r0 != 1) throw std::domain_error("mod_inv: not invertible");
  long long res = s0 % mod;
  if (res < 0) res += mod;
  return res;
  (void)g; (void)x; (void)x1;
}

inline int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("legendre of zero");
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

struct FieldBackend {
  FieldKind kind = FieldKind::ArchimedeanPolar;
  int p = 0;        // odd prime (p-adic kinds)
  long long u = 1;  // unramified: quadratic non-residue; ramified: unit with ϖ² = u·p
  int k = 6;        // precision
  int e_abs = 0;    // absolute ramification index of the modeled F_α (0 = default)

  long long pk = 0;  // p^k, cached

  static FieldBackend archimedean() {
    FieldBackend b;
    b.kind = FieldKind::ArchimedeanPolar;
    return b;
  }

  static FieldBackend padic_unramified(int p, int k = 6, int e_abs = 0) {
    FieldBackend b;
    b.kind = FieldKind::PadicUnramified;
    b.p = p;
    b.k = k;
    b.e_abs = e_abs ? e_abs : 1;
    b.finish();
    // smallest quadratic non-residue
    for (long long c = 2; c < p; ++c)
      if (legendre(c, p) == -1) { b.u = c; break; }
    return b;
  }

  static FieldBackend padic_ramified(int p, long long u = 1, int k = 6, int e_abs = 0) {
    FieldBackend b;
    b.kind = FieldKind::PadicRamified;
    b.p = p;
    b.u = u % p == 0 ? throw std::invalid_argument("ramified unit must be prime to p") : u;
    b.k = k;
    b.e_abs = e_abs ? e_abs : 2;
    b.finish();
    return b;
  }

  void finish() {
    if (p % 2 == 0 || p < 3) throw std::invalid_argument("odd residue characteristic required");
    if (k < 2) throw std::invalid_argument("precision must be at least 2");
    pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
  }

  bool is_archimedean() const { return kind == FieldKind::ArchimedeanPolar; }

  // residue field size of F_α
  long long q_alpha() const {
    switch (kind) {
      case FieldKind::PadicUnramified: return (long long)p * p;
      case FieldKind::PadicRamified: return p;
      default: throw std::domain_error("no residue field on archimedean backend");
    }
  }

  bool operator==(const FieldBackend& o) const {
    return kind == o.kind && p == o.p && u == o.u && k == o.k;
  }
};

// e(α/α′) for the modeled tower F_α ⊇ F_α′
inline int ramification_degree(const FieldBackend& a, const FieldBackend& b) {
  if (a.is_archimedean() || b.is_archimedean())
    throw std::invalid_argument("ramification degree needs p-adic backends");
  if (a.p != b.p) throw std::invalid_argument("ramification degree needs matching p");
  if (a.e_abs % b.e_abs != 0)
    throw std::invalid_argument("inconsistent ramification tower");
  return a.e_abs / b.e_abs;
}

// Element of F_α^×.  Archimedean: positive rational modulus and angle mod 1.
// p-adic: x = ϖ^v · (a + b·θ) with (a,b) a unit mod p^k; θ = √u (unramified,
// v counts powers of p) or θ = ϖ with ϖ² = u·p (ramified, v counts powers of ϖ).
struct FieldElement {
  Frac modulus{1};
  Frac angle{0};
  long long v = 0;
  long long a = 1;
  long long b = 0;

  bool operator==(const FieldElement& o) const {
    return modulus == o.modulus && angle == o.angle && v == o.v && a == o.a && b == o.b;
  }
};

inline FieldElement polar(const Frac& modulus, const Frac& angle) {
  if (!(Frac(0) < modulus)) throw std::invalid_argument("polar element needs positive modulus");
  FieldElement e;
  e.modulus = modulus;
  e.angle = angle.mod1();
  return e;
}

namespace fdetail {

// renormalize a p-adic pair so the unit condition holds; throws on full
// cancellation (precision exhaustion)
inline void canonicalize(const FieldBackend& B, FieldElement& x) {
  long long pk = B.pk;
  x.a %= pk; if (x.a < 0) x.a += pk;
  x.b %= pk; if (x.b < 0) x.b += pk;
  if (B.kind == FieldKind::PadicUnramified) {
    int steps = 0;
    while (x.a % B.p == 0 && x.b % B.p == 0) {
      if (x.a == 0 && x.b == 0) throw std::domain_error("precision exhausted (all digits cancelled)");
      x.a /= B.p;
      x.b /= B.p;
      x.v += 1;
      if (++steps > B.k) throw std::domain_error("precision exhausted (all digits cancelled)");
    }
  } else {
    // ramified: unit means a prime to p; a ≡ 0 shifts a power of ϖ out:
    // ϖ^v(pa' + bϖ) = ϖ^{v+1}(b + ϖ·u^{-1}a')
    int steps = 0;
    while (x.a % B.p == 0) {
      if (x.a == 0 && x.b == 0) throw std::domain_error("precision exhausted (all digits cancelled)");
      long long ap = x.a / B.p;
      long long uinv = mod_inv(((B.u % pk) + pk) % pk, pk);
      long long na = x.b, nb = uinv % pk * (ap % pk) % pk;
      x.a = na;
      x.b = nb;
      x.v += 1;
      x.a %= pk; if (x.a < 0) x.a += pk;
      x.b %= pk; if (x.b < 0) x.b += pk;
      if (++steps > 2 * B.k) throw std::domain_error("precision exhausted (all digits cancelled)");
    }
  }
}

}  // namespace fdetail

inline FieldElement padic(const FieldBackend& B, long long v, long long a, long long b) {
  if (B.is_archimedean()) throw std::invalid_argument("padic element on archimedean backend");
  FieldElement x;
  x.modulus = Frac(1);
  x.angle = Frac(0);
  x.v = v;
  x.a = a;
  x.b = b;
  fdetail::canonicalize(B, x);
  return x;
}

inline FieldElement field_one(const FieldBackend& B) {
  return B.is_archimedean() ? polar(Frac(1), Frac(0)) : padic(B, 0, 1, 0);
}

inline FieldElement field_from_int(const FieldBackend& B, long long n) {
  if (n == 0) throw std::invalid_argument("zero is not a unit of the field");
  if (B.is_archimedean())
    return polar(Frac(n < 0 ? -n : n), Frac(n < 0 ? 1 : 0, 2));
  // factor out p exactly (dividing residues mod p^k would drop top digits)
  long long m = n, t = 0;
  while (m % B.p == 0) { m /= B.p; ++t; }
  if (B.kind == FieldKind::PadicUnramified) return padic(B, t, m, 0);
  // p^t = ϖ^{2t}·u^{−t}
  long long uinv = mod_inv(((B.u % B.pk) + B.pk) % B.pk, B.pk);
  long long unit = ((m % B.pk) + B.pk) % B.pk;
  for (long long i = 0; i < t; ++i) unit = unit * uinv % B.pk;
  return padic(B, 2 * t, unit, 0);
}

inline FieldElement field_mul(const FieldBackend& B, const FieldElement& x, const FieldElement& y) {
  if (B.is_archimedean()) return polar(x.modulus * y.modulus, x.angle + y.angle);
  long long pk = B.pk;
  FieldElement r;
  r.v = x.v + y.v;
  if (B.kind == FieldKind::PadicUnramified) {
    r.a = (x.a * y.a + x.b % pk * (y.b % pk) % pk * (B.u % pk)) % pk;
    r.b = (x.a * y.b + x.b * y.a) % pk;
  } else {
    // (a+bϖ)(c+dϖ) = ac + bd·up + (ad+bc)ϖ
    long long up = (B.u % pk) * B.p % pk;
    r.a = (x.a * y.a % pk + x.b * y.b % pk * up) % pk;
    r.b = (x.a * y.b + x.b * y.a) % pk;
  }
  fdetail::canonicalize(B, r);
  return r;
}

inline FieldElement field_conj(const FieldBackend& B, const FieldElement& x) {
  if (B.is_archimedean()) return polar(x.modulus, -x.angle);
  FieldElement r = x;
  r.b = (B.pk - x.b % B.pk) % B.pk;
  if (B.kind == FieldKind::PadicRamified && (x.v % 2 != 0)) {
    // conj(ϖ^v) = (−1)^v ϖ^v
    r.a = (B.pk - r.a % B.pk) % B.pk;
    r.b = (B.pk - r.b) % B.pk;
  }
  fdetail::canonicalize(B, r);
  return r;
}

inline FieldElement field_inv(const FieldBackend& B, const FieldElement& x) {
  if (B.is_archimedean()) return polar(Frac(1) / x.modulus, -x.angle);
  long long pk = B.pk;
  long long n;
  if (B.kind == FieldKind::PadicUnramified)
    n = ((x.a * x.a - x.b % pk * (x.b % pk) % pk * (B.u % pk)) % pk + pk) % pk;
  else
    n = ((x.a * x.a - x.b * x.b % pk * ((B.u % pk) * B.p % pk)) % pk + pk) % pk;
  long long ninv = mod_inv(n, pk);
  FieldElement c = field_conj(B, FieldElement{Frac(1), Frac(0), 0, x.a, x.b});
  FieldElement r;
  r.v = -x.v;
  r.a = c.a * ninv % pk;
  r.b = c.b * ninv % pk;
  fdetail::canonicalize(B, r);
  return r;
}

inline FieldElement field_div(const FieldBackend& B, const FieldElement& x, const FieldElement& y) {
  return field_mul(B, x, field_inv(B, y));
}

inline FieldElement field_norm(const FieldBackend& B, const FieldElement& x) {
  return field_mul(B, x, field_conj(B, x));
}

// x / conj(x): the norm-one image
inline FieldElement norm_one_of(const FieldBackend& B, const FieldElement& x) {
  return field_div(B, x, field_conj(B, x));
}

// addition (p-adic only; archimedean polar sums are not polar-rational)
inline FieldElement field_add(const FieldBackend& B, const FieldElement& x, const FieldElement& y) {
  if (B.is_archimedean()) throw std::invalid_argument("no exact polar addition");
  long long pk = B.pk;
  const FieldElement& lo = x.v <= y.v ? x : y;
  const FieldElement& hi = x.v <= y.v ? y : x;
  long long shift = hi.v - lo.v;
  FieldElement h = hi;
  // multiply hi's unit by θ^shift to align valuations
  if (B.kind == FieldKind::PadicUnramified) {
    long long f = 1;
    for (long long i = 0; i < shift && f != 0; ++i) f = f * B.p % pk;
    h.a = h.a * f % pk;
    h.b = h.b * f % pk;
  } else {
    for (long long i = 0; i < shift; ++i) {
      long long up = (B.u % pk) * B.p % pk;
      long long na = h.b * up % pk, nb = h.a;
      h.a = na;
      h.b = nb;
    }
  }
  FieldElement r;
  r.v = lo.v;
  r.a = (lo.a + h.a) % pk;
  r.b = (lo.b + h.b) % pk;
  fdetail::canonicalize(B, r);
  return r;
}

inline FieldElement field_neg(const FieldBackend& B, const FieldElement& x) {
  if (B.is_archimedean()) return polar(x.modulus, x.angle + Frac(1, 2));
  FieldElement r = x;
  r.a = (B.pk - x.a % B.pk) % B.pk;
  r.b = (B.pk - x.b % B.pk) % B.pk;
  fdetail::canonicalize(B, r);
  return r;
}

inline bool in_base_field(const FieldBackend& B, const FieldElement& x) {
  if (B.is_archimedean()) return x.angle == Frac(0) || x.angle == Frac(1, 2);
  if (B.kind == FieldKind::PadicUnramified) return x.b % B.pk == 0;
  return x.b % B.pk == 0 && x.v % 2 == 0;
}

inline bool is_trace_zero(const FieldBackend& B, const FieldElement& x) {
  if (B.is_archimedean()) return x.angle == Frac(1, 4) || x.angle == Frac(3, 4);
  if (B.kind == FieldKind::PadicUnramified) return x.a % B.pk == 0;
  return x.b % B.pk == 0 && (x.v % 2 != 0);
}

// κ_α: the quadratic character of F_{±α}^× attached to F_α/F_{±α}
inline int kappa(const FieldBackend& B, const FieldElement& x) {
  if (!in_base_field(B, x)) throw std::invalid_argument("kappa of element outside the base field");
  switch (B.kind) {
    case FieldKind::ArchimedeanPolar:
      return x.angle == Frac(0) ? 1 : -1;
    case FieldKind::PadicUnramified:
      return (x.v % 2 == 0) ? 1 : -1;
    case FieldKind::PadicRamified: {
      int s = legendre(x.a, B.p);
      if (((x.v / 2) % 2) != 0) s *= legendre(-1, B.p);
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Residue-field data.  The residue field of F_α is F_p (ramified) or
// F_{p²} = F_p(√u) (unramified); discrete logs are taken with respect to the
// smallest generator.

namespace fdetail {

struct ResidueTable {
  long long q = 0;
  std::map<std::pair<long long, long long>, long long> dlog;  // (a,b) -> exponent
  std::pair<long long, long long> gen;
};

inline const ResidueTable& residue_table(const FieldBackend& B) {
  static std::map<std::tuple<int, int, long long>, ResidueTable> cache;
  auto key = std::make_tuple((int)B.kind, B.p, B.u);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ResidueTable t;
  long long p = B.p;
  bool quad = B.kind == FieldKind::PadicUnramified;
  t.q = quad ? p * p : p;
  auto mul = [&](std::pair<long long, long long> x, std::pair<long long, long long> y) {
    if (!quad) return std::make_pair(x.first * y.first % p, 0LL);
    return std::make_pair((x.first * y.first + x.second * y.second % p * (B.u % p)) % p,
                          (x.first * y.second + x.second * y.first) % p);
  };
  for (long long a = 0; a < p && t.dlog.empty(); ++a)
    for (long long b = (quad ? 0 : 0); b < (quad ? p : 1); ++b) {
      if (a == 0 && b == 0) continue;
      if (!quad && a == 0) continue;
      // test multiplicative order
      std::pair<long long, long long> x{a, b}, acc{1, 0};
      long long ord = 0;
      do { acc = mul(acc, x); ++ord; } while (!(acc.first == 1 && acc.second == 0));
      if (ord == t.q - 1) {
        t.gen = {a, b};
        acc = {1, 0};
        for (long long e = 0; e < t.q - 1; ++e) {
          t.dlog[acc] = e;
          acc = mul(acc, x);
        }
        break;
      }
    }
  if (t.dlog.empty()) throw std::logic_error("no residue generator found");
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace fdetail

inline long long residue_dlog(const FieldBackend& B, const FieldElement& unit_part) {
  const auto& t = fdetail::residue_table(B);
  long long a = unit_part.a % B.p, b = unit_part.b % B.p;
  if (B.kind == FieldKind::PadicRamified) b = 0;
  auto it = t.dlog.find({a, b});
  if (it == t.dlog.end()) throw std::invalid_argument("residue of non-unit");
  return it->second;
}

// quadratic character of k_α^× at the residue of a unit
inline int residue_sign(const FieldBackend& B, const FieldElement& x) {
  if (x.v != 0) throw std::invalid_argument("residue sign of non-unit");
  return residue_dlog(B, x) % 2 == 0 ? 1 : -1;
}

// quadratic character of the norm-one subgroup k_α¹ (unramified backends):
// x^{(p+1)/2} = ±1 for x ∈ k¹
inline int norm_one_residue_sign(const FieldBackend& B, const FieldElement& x) {
  if (B.kind != FieldKind::PadicUnramified)
    throw std::invalid_argument("norm-one residue sign needs an unramified backend");
  if (x.v != 0) throw std::invalid_argument("residue sign of non-unit");
  long long d = residue_dlog(B, x);
  long long q = (long long)B.p * B.p;
  if (d % (B.p - 1) != 0)
    throw std::invalid_argument("residue is not norm-one");
  // k¹ = ⟨g^{p-1}⟩ of order p+1; parity of the exponent in that generator
  long long e = d / (B.p - 1);
  (void)q;
  return e % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Characters.  Archimedean: z ↦ exponent·angle (i.e. (z/|z|)^m).  p-adic
// tame: x = ϖ^v·w ↦ v·c_pi + rho(res w), rho = rho_exp · dlog/(q_α − 1).

struct CharacterSpec {
  long long m = 0;
  Frac c_pi{0};
  long long rho_exp = 0;

  CharacterSpec inverse() const { return {-m, (-c_pi).mod1(), -rho_exp}; }
  CharacterSpec times(const CharacterSpec& o) const {
    return {m + o.m, (c_pi + o.c_pi).mod1(), rho_exp + o.rho_exp};
  }
  bool is_trivial_spec() const { return m == 0 && c_pi.is_zero() && rho_exp == 0; }
};

inline Frac eval_character(const FieldBackend& B, const CharacterSpec& chi, const FieldElement& x) {
  if (B.is_archimedean()) return (Frac(chi.m) * x.angle).mod1();
  long long qm1 = B.q_alpha() - 1;
  FieldElement unit = x;
  unit.v = 0;
  long long d = residue_dlog(B, unit);
  return (Frac(x.v) * chi.c_pi + Frac(chi.rho_exp * d, qm1)).mod1();
}

// Does chi restrict to κ (symmetric condition) resp. to the trivial
// character (ζ condition) on the base field?  Checked on generators of
// F_{±α}^× modulo wild inertia: −1 (archimedean); p and a residue generator
// (p-adic).
inline bool check_restriction(const FieldBackend& B, const CharacterSpec& chi, bool want_kappa) {
  auto target = [&](const FieldElement& x) { return want_kappa && kappa(B, x) == -1 ? Frac(1, 2) : Frac(0); };
  std::vector<FieldElement> gens;
  if (B.is_archimedean()) {
    gens.push_back(polar(Frac(1), Frac(1, 2)));  // −1
  } else {
    gens.push_back(field_from_int(B, B.p));
    // a generator of the residue field of the base (prime-to-p units)
    for (long long g = 2; g < B.p; ++g) {
      std::pair<long long, long long> acc{1, 0};
      long long ord = 0;
      do { acc.first = acc.first * g % B.p; ++ord; } while (acc.first != 1);
      if (ord == B.p - 1) { gens.push_back(field_from_int(B, g)); break; }
    }
  }
  for (const auto& x : gens)
    if (eval_character(B, chi, x) != target(x)) return false;
  return true;
}

inline bool check_chi_condition(const FieldBackend& B, const CharacterSpec& chi, bool symmetric) {
  if (!symmetric) return true;  // no restriction condition on asymmetric orbits
  return check_restriction(B, chi, true);
}

inline bool check_zeta_condition(const FieldBackend& B, const CharacterSpec& zeta, bool symmetric) {
  if (!symmetric) return true;
  return check_restriction(B, zeta, false);
}

// the canonical unramified extension of κ: c_pi = ½, trivial on units
inline CharacterSpec canonical_unramified_chi() { return {0, Frac(1, 2), 0}; }

// sign of the base-field quotient of two trace-zero elements
inline int trace_zero_ratio_sign(const FieldBackend& B, const FieldElement& d, const FieldElement& a) {
  if (!is_trace_zero(B, d) || !is_trace_zero(B, a))
    throw std::invalid_argument("inputs must be trace-zero");
  if (B.is_archimedean()) {
    // d = i·s_d·|d|, a = i·s_a·|a| with s = +1 at angle ¼, −1 at ¾
    int sd = d.angle == Frac(1, 4) ? 1 : -1;
    int sa = a.angle == Frac(1, 4) ? 1 : -1;
    return sd * sa;
  }
  FieldElement q = field_div(B, d, a);
  if (!in_base_field(B, q)) throw std::logic_error("trace-zero quotient left the base field");
  return kappa(B, q);
}

// solve y / conj(y) = x for norm-one x (Hilbert 90, constructive)
inline FieldElement norm_one_preimage(const FieldBackend& B, const FieldElement& x) {
  if (B.is_archimedean()) {
    if (x.modulus != Frac(1)) throw std::invalid_argument("norm-one preimage of non-norm-one element");
    return polar(Frac(1), Frac(x.angle.num, x.angle.den * 2));
  }
  FieldElement n = field_norm(B, x);
  if (!(n == field_one(B))) throw std::invalid_argument("norm-one preimage of non-norm-one element");
  // y = 1 + x works unless x = −1; fall back to a trace-zero element
  try {
    FieldElement y = field_add(B, field_one(B), x);
    return y;
  } catch (const std::domain_error&) {
    return B.kind == FieldKind::PadicUnramified ? padic(B, 0, 0, 1) : padic(B, 1, 1, 0);
  }
}

// promote an approximate trace-zero element (conj(ȧ) = −ȧ + z with z small)
// to an exact one: a = ȧ − z/2
inline FieldElement trace_zero_lift(const FieldBackend& B, const FieldElement& adot) {
  if (is_trace_zero(B, adot)) return adot;
  if (B.is_archimedean()) throw std::invalid_argument("archimedean trace-zero lift is angle-exact already");
  FieldElement z = field_add(B, adot, field_conj(B, adot));
  FieldElement half = field_inv(B, field_from_int(B, 2));
  FieldElement a = field_add(B, adot, field_neg(B, field_mul(B, z, half)));
  if (!is_trace_zero(B, a)) throw std::domain_error("trace-zero lift failed (precision exhausted)");
  return a;
}

}  // namespace covertorus

#endif
