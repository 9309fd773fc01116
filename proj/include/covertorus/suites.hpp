// Named verification suites: seed-deterministic batteries of identity checks
// over randomized and fixed fixtures, shared by the command-line tool and the
// acceptance harness.
#ifndef COVERTORUS_SUITES_HPP
#define COVERTORUS_SUITES_HPP

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covertorus/cover.hpp"
#include "covertorus/functorial.hpp"
#include "covertorus/levi.hpp"
#include "covertorus/tits.hpp"
#include "covertorus/weil.hpp"

namespace covertorus::suites {

// mt19937_64 is the project-wide named generator (seeded per suite)
using Rng = std::mt19937_64;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  unsigned long long seed = 0;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tits-core", "llc-param",  "functoriality",
                                              "levi",      "adams-vogan", "mindiff"};
  return names;
}

// ---------------------------------------------------------------------------
// Shared fixture builders

namespace sdetail {

inline GroupPtr cyclic(int n) {
  std::vector<int> gen(n);
  for (int i = 0; i < n; ++i) gen[i] = (i + 1) % n;
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({gen}));
}

inline GroupPtr sym3() {
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({{1, 0, 2}, {0, 2, 1}}));
}

inline GroupPtr dihedral4() {
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({{1, 2, 3, 0}, {0, 3, 2, 1}}));
}

inline GroupPtr quaternion8() {
  // left multiplication on [1, i, -1, -i, j, k, -j, -k]
  return std::make_shared<FiniteGroup>(
      FiniteGroup::from_perms({{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}));
}

// every subgroup of a group of order <= 8 is generated by at most two elements
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  for (int a = 0; a < G.n; ++a)
    for (int b = a; b < G.n; ++b) {
      Subgroup s = Subgroup::closure(G, {a, b});
      if (seen.insert(s.elems).second) out.push_back(std::move(s));
    }
  return out;
}

// homomorphisms to {±1}: trivial plus one per index-two subgroup
inline std::vector<std::vector<int>> sign_characters(const FiniteGroup& G,
                                                     const std::vector<Subgroup>& subs) {
  std::vector<std::vector<int>> out{std::vector<int>(G.n, 1)};
  for (const Subgroup& s : subs) {
    if (2 * s.size() != G.n) continue;
    std::vector<int> eps(G.n);
    for (int g = 0; g < G.n; ++g) eps[g] = s.contains(g) ? 1 : -1;
    out.push_back(std::move(eps));
  }
  return out;
}

struct CatalogGroup {
  std::string name;
  GroupPtr gamma;
  std::vector<Subgroup> subs;
  std::vector<std::vector<int>> signs;
};

inline std::vector<CatalogGroup> group_catalog() {
  std::vector<CatalogGroup> cat;
  auto push = [&](std::string name, GroupPtr g) {
    CatalogGroup e;
    e.name = std::move(name);
    e.gamma = std::move(g);
    e.subs = all_subgroups(*e.gamma);
    e.signs = sign_characters(*e.gamma, e.subs);
    cat.push_back(std::move(e));
  };
  push("c2", cyclic(2));
  push("c3", cyclic(3));
  push("c4", cyclic(4));
  push("c6", cyclic(6));
  push("c8", cyclic(8));
  push("s3", sym3());
  push("d4", dihedral4());
  push("q8", quaternion8());
  return cat;
}

// random admissible set over the group: signed coset blocks, possibly with
// repeated slots at different multipliers, rank <= 4 and at most 16 elements
inline SigmaSet random_sigma_set(Rng& rng, const CatalogGroup& cg) {
  const FiniteGroup& G = *cg.gamma;
  struct Block {
    std::vector<int> reps;
    std::vector<int> coset_of;
    std::vector<int> eps;
    std::vector<long long> mults;
  };
  std::vector<Block> blocks;
  int rank_budget = 4, elem_budget = 16;
  int nb = 1 + (int)(rng() % 2);
  for (int b = 0; b < nb; ++b) {
    std::vector<const Subgroup*> cands;
    for (const Subgroup& s : cg.subs) {
      int k = G.n / s.size();
      if (k <= rank_budget && 2 * k <= elem_budget) cands.push_back(&s);
    }
    if (cands.empty()) break;
    const Subgroup& H = *cands[rng() % cands.size()];
    Block bl;
    bl.coset_of.assign(G.n, -1);
    for (int g = 0; g < G.n; ++g) {
      if (bl.coset_of[g] >= 0) continue;
      int c = (int)bl.reps.size();
      bl.reps.push_back(g);
      for (int h : H.elems) bl.coset_of[G.op(g, h)] = c;
    }
    int k = (int)bl.reps.size();
    bl.eps = cg.signs[rng() % cg.signs.size()];
    int max_copies = elem_budget / (2 * k);
    int copies = 1 + (int)(rng() % (unsigned)std::min(2, max_copies));
    for (int c = 0; c < copies; ++c) bl.mults.push_back(1 + (long long)(rng() % 3));
    rank_budget -= k;
    elem_budget -= 2 * k * copies;
    blocks.push_back(std::move(bl));
  }

  int rank = 0, elems = 0;
  for (const Block& bl : blocks) {
    rank += (int)bl.reps.size();
    elems += 2 * (int)bl.reps.size() * (int)bl.mults.size();
  }

  SigmaSet R;
  R.lat.gamma = cg.gamma;
  R.lat.rank = rank;
  R.lat.act.assign(G.n, IMat(rank, IVec(rank, 0)));
  for (int g = 0; g < G.n; ++g) {
    int off = 0;
    for (const Block& bl : blocks) {
      int k = (int)bl.reps.size();
      for (int j = 0; j < k; ++j)
        R.lat.act[g][off + bl.coset_of[G.op(g, bl.reps[j])]][off + j] = bl.eps[g];
      off += k;
    }
  }
  R.lat.validate();

  R.neg.resize(elems);
  R.bar.resize(elems);
  R.gact.assign(G.n, std::vector<int>(elems));
  int off = 0, base = 0;
  for (const Block& bl : blocks) {
    int k = (int)bl.reps.size();
    for (size_t c = 0; c < bl.mults.size(); ++c)
      for (int j = 0; j < k; ++j)
        for (int s = 0; s < 2; ++s) {
          int el = base + 2 * (int)(c * k + j) + s;
          long long sign = s == 0 ? 1 : -1;
          R.neg[el] = base + 2 * (int)(c * k + j) + (1 - s);
          IVec v(rank, 0);
          v[off + j] = sign * bl.mults[c];
          R.bar[el] = std::move(v);
          for (int g = 0; g < G.n; ++g) {
            int jj = bl.coset_of[G.op(g, bl.reps[j])];
            int ss = bl.eps[g] == 1 ? s : 1 - s;
            R.gact[g][el] = base + 2 * (int)(c * k + jj) + ss;
          }
        }
    base += 2 * k * (int)bl.mults.size();
    off += k;
  }
  R.validate();
  return R;
}

inline Gauge random_gauge(Rng& rng, const SigmaSet& R) {
  std::vector<int> p(R.size(), 0);
  for (int i = 0; i < R.size(); ++i)
    if (p[i] == 0) {
      int s = (rng() & 1) ? 1 : -1;
      p[i] = s;
      p[R.neg[i]] = -s;
    }
  return finish_gauge(R, std::move(p));
}

inline GroupHom cyclic_hom(GroupPtr W, int gen, GroupPtr G, int gen_img) {
  std::vector<int> img(W->n, -1);
  int w = 0, v = 0;
  img[0] = 0;
  for (int k = 1; k < W->n; ++k) {
    w = W->op(w, gen);
    v = G->op(v, gen_img);
    img[w] = v;
  }
  GroupHom phi{W, G, img};
  phi.validate();
  return phi;
}

inline GroupHom mod_kernel(GroupPtr W, const Subgroup& K, GroupPtr c2) {
  std::vector<int> img(W->n);
  for (int g = 0; g < W->n; ++g) img[g] = K.contains(g) ? 0 : 1;
  GroupHom phi{W, c2, img};
  phi.validate();
  return phi;
}

inline SigmaSet symmetric_pair(GroupPtr c2, long long bar = 1) {
  SigmaSet R;
  R.lat = GaloisLattice::sign(c2, {1, -1});
  R.gact = {{0, 1}, {1, 0}};
  R.neg = {1, 0};
  R.bar = {{bar}, {-bar}};
  R.validate();
  return R;
}

inline SigmaSet mixed_set(GroupPtr c2) {
  SigmaSet R;
  R.lat.gamma = c2;
  R.lat.rank = 2;
  R.lat.act = {imat_identity(2), IMat{{-1, 0}, {0, 1}}};
  R.lat.validate();
  R.gact = {{0, 1, 2, 3}, {1, 0, 2, 3}};
  R.neg = {1, 0, 3, 2};
  R.bar = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  R.validate();
  return R;
}

inline SigmaSet double_symmetric(GroupPtr c2) {
  SigmaSet R;
  R.lat.gamma = c2;
  R.lat.rank = 2;
  R.lat.act = {imat_identity(2), IMat{{-1, 0}, {0, -1}}};
  R.lat.validate();
  R.gact = {{0, 1, 2, 3}, {1, 0, 3, 2}};
  R.neg = {1, 0, 3, 2};
  R.bar = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  R.validate();
  return R;
}

// one asymmetric four-element orbit whose halves fuse onto a doubled pair
inline SigmaSet fusion_source(GroupPtr c2) {
  SigmaSet R;
  R.lat = GaloisLattice::sign(c2, {1, -1});
  R.gact = {{0, 1, 2, 3}, {3, 2, 1, 0}};
  R.neg = {1, 0, 3, 2};
  R.bar = {{1}, {-1}, {1}, {-1}};
  R.validate();
  return R;
}

inline SigmaSet two_sym_source(GroupPtr c2) {
  SigmaSet R;
  R.lat = GaloisLattice::sign(c2, {1, -1});
  R.gact = {{0, 1, 2, 3}, {1, 0, 3, 2}};
  R.neg = {1, 0, 3, 2};
  R.bar = {{1}, {-1}, {1}, {-1}};
  R.validate();
  return R;
}

// rank-2 symmetric pair summing onto a doubled rank-1 pair
inline SigmaSet diagonal_source(GroupPtr c2) {
  SigmaSet R;
  R.lat.gamma = c2;
  R.lat.rank = 2;
  R.lat.act = {imat_identity(2), IMat{{-1, 0}, {0, -1}}};
  R.lat.validate();
  R.gact = {{0, 1}, {1, 0}};
  R.neg = {1, 0};
  R.bar = {{1, 1}, {-1, -1}};
  R.validate();
  return R;
}

inline FieldElement random_unit(Rng& rng, const FieldBackend& B) {
  if (B.is_archimedean()) return polar(Frac(1 + rng() % 5, 1 + rng() % 5), Frac(rng() % 12, 12));
  while (true) {
    long long a = rng() % B.pk, b = rng() % B.pk;
    if (a % B.p == 0 && (B.kind == FieldKind::PadicRamified || b % B.p == 0)) continue;
    return padic(B, 0, a, b);
  }
}

inline CoverElement random_cover_element(Rng& rng, const CoverContext& ctx) {
  RationalFamily f;
  std::vector<std::optional<FieldElement>> deltas(ctx.orbits.size());
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    const FieldBackend& B = ctx.backend[o];
    if (ctx.orbits[o].symmetric) {
      FieldElement d = random_unit(rng, B);
      deltas[o] = d;
      f.x.push_back(norm_one_of(B, d));
    } else {
      f.x.push_back(random_unit(rng, B));
    }
  }
  return cover_make(ctx, std::move(f), (rng() & 1) ? 1 : -1, std::move(deltas));
}

// the tame quadratic-restriction characters of a ramified backend
inline std::vector<CharacterSpec> ramified_chi_specs(const FieldBackend& B) {
  std::vector<CharacterSpec> out;
  for (int num = 0; num < 4; ++num) {
    CharacterSpec c{0, Frac(num, 4), (B.p - 1) / 2};
    if (check_chi_condition(B, c, true)) out.push_back(c);
  }
  if (out.size() < 2) throw std::logic_error("tame quadratic extension catalog is too small");
  return out;
}

}  // namespace sdetail

// ---------------------------------------------------------------------------
// Quadratic-table battery: randomized admissible sets over the group catalog

inline SuiteResult run_tits_cocycles(unsigned long long seed) {
  Rng rng(seed);
  SuiteResult out;
  out.suite = "tits-core";
  out.seed = seed;
  auto cat = sdetail::group_catalog();
  int fails = 0;
  std::string first;
  for (int t = 0; t < 200; ++t) {
    const auto& cg = cat[t % cat.size()];
    SigmaSet R = sdetail::random_sigma_set(rng, cg);
    Gauge p = sdetail::random_gauge(rng, R);
    Cochain tp = tits_cocycle(R, p);
    if (!is_cocycle(tp) || !tp.is_normalized()) {
      ++fails;
      if (first.empty()) first = "fixture " + std::to_string(t) + " over " + cg.name;
    }
  }
  out.add("quadratic-table-is-normalized-cocycle", fails == 0,
          fails == 0 ? "200 randomized fixtures over 8 catalog groups" : first);
  return out;
}

inline SuiteResult run_gauge_comparisons(unsigned long long seed) {
  Rng rng(seed ^ 0x6761756765ULL);
  SuiteResult out;
  out.suite = "tits-core";
  out.seed = seed;
  auto cat = sdetail::group_catalog();
  int exact_fails = 0, class_fails = 0, n = 0;
  for (size_t gi = 0; gi < cat.size(); ++gi)
    for (int t = 0; t < 3; ++t) {
      SigmaSet R = sdetail::random_sigma_set(rng, cat[gi]);
      Gauge p = sdetail::random_gauge(rng, R);
      Gauge q = sdetail::random_gauge(rng, R);
      Gauge r = sdetail::random_gauge(rng, R);
      Cochain spq = gauge_cochain(R, p, q);
      Cochain sqr = gauge_cochain(R, q, r);
      Cochain spr = gauge_cochain(R, p, r);
      Cochain sqp = gauge_cochain(R, q, p);
      if (!cochain_eq(cochain_sub(tits_cocycle(R, p), tits_cocycle(R, q)), differential(spq)))
        ++exact_fails;
      if (!is_coboundary(cochain_sub(cochain_add(spq, sqr), spr)).yes) ++class_fails;
      if (!is_coboundary(cochain_add(spq, sqp)).yes) ++class_fails;
      ++n;
    }
  out.add("comparison-cochain-differential-exact", exact_fails == 0,
          std::to_string(n) + " gauge triples");
  out.add("comparison-cochain-transitive-and-symmetric", class_fails == 0,
          std::to_string(n) + " gauge triples");
  return out;
}

inline SuiteResult run_tits_core(unsigned long long seed) {
  SuiteResult out = run_tits_cocycles(seed);
  for (auto& c : run_gauge_comparisons(seed).checks) out.checks.push_back(std::move(c));
  return out;
}

// ---------------------------------------------------------------------------
// Parameter battery: the catalog of finite models of the Weil group

namespace sdetail {

inline std::optional<WeilChiData> pick_chi(Rng& rng, const WeilModel& wm, bool trivial_target) {
  WeilChiData d;
  for (size_t o = 0; o < wm.orbits.size(); ++o) {
    auto adm = admissible_orbit_characters(wm, o, trivial_target);
    if (adm.empty()) return std::nullopt;
    d.chi.push_back(adm[rng() % adm.size()]);
  }
  return d;
}

inline bool parameter_model_ok(Rng& rng, const SigmaSet& R, GroupPtr W, const GroupHom& phi,
                               std::string& why) {
  WeilModel wm = weil_model(R, W, phi);
  auto picked = pick_chi(rng, wm, false);
  if (!picked) {
    // no admissible character: the quadratic class must survive inflation
    Cochain t = inflate(tits_cocycle(R, model_gauge(wm)), phi);
    if (is_coboundary(t).yes) { why = "obstructed model has a split class"; return false; }
    return true;
  }
  WeilChiData d = *picked;
  Cochain rp = r_p(wm, d);
  if (!check_parameter_differential(wm, rp)) { why = "differential mismatch"; return false; }
  if (!cochain_eq(r_p_section_form(wm, d), rp)) { why = "section form mismatch"; return false; }

  WeilChiData dz = *pick_chi(rng, wm, true);
  Cochain z = z_zeta(wm, dz);
  Cochain rpz = r_p(wm, weil_chi_times(d, dz));
  if (!cochain_eq(rpz, cochain_add(rp, z))) { why = "descent twist mismatch"; return false; }
  if (!cochain_eq(llc_match(wm, z, d), rpz)) { why = "matching map mismatch"; return false; }

  for (int trial = 0; trial < 3; ++trial) {
    Gauge q = random_gauge(rng, R);
    Cochain rq = r_q(wm, d, q);
    if (!cochain_eq(differential(rq), inflate(tits_cocycle(R, q), phi))) {
      why = "re-gauged differential mismatch";
      return false;
    }
  }

  Subgroup ker = phi.kernel();
  if (ker.size() > 1) {
    std::vector<std::vector<int>> sections;
    for (const auto& c : wm.ch) {
      std::vector<int> sec;
      for (int wi : c.w) sec.push_back(W->op(ker.elems[rng() % ker.size()], wi));
      sections.push_back(std::move(sec));
    }
    Cochain alt = r_p_section_form(wm, d, &sections);
    if (!cochain_eq(differential(alt), differential(rp))) {
      why = "moved section changed the differential";
      return false;
    }
    auto diff = is_coboundary(cochain_sub(alt, rp));
    if (!diff.yes || !diff.witness) { why = "moved section left the class"; return false; }
    if (!cochain_eq(differential(*diff.witness), cochain_sub(alt, rp))) {
      why = "coboundary witness does not differentiate back";
      return false;
    }
  }
  return true;
}

}  // namespace sdetail

inline SuiteResult run_llc_param(unsigned long long seed) {
  using namespace sdetail;
  Rng rng(seed);
  SuiteResult out;
  out.suite = "llc-param";
  out.seed = seed;

  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  auto c8 = cyclic(8);
  auto d4 = dihedral4();
  auto q8 = quaternion8();

  SigmaSet sym = symmetric_pair(c2);
  SigmaSet mix = mixed_set(c2);
  SigmaSet dbl = double_symmetric(c2);
  SigmaSet divis = symmetric_pair(c2, 2);

  GroupHom c4_to_c2 = cyclic_hom(c4, 1, c2, 1);
  GroupHom c8_to_c2 = cyclic_hom(c8, 1, c2, 1);
  int rot = -1, ref = -1;
  for (int g = 0; g < d4->n; ++g) {
    if (d4->perms[g] == std::vector<int>{1, 2, 3, 0}) rot = g;
    if (d4->perms[g] == std::vector<int>{0, 3, 2, 1}) ref = g;
  }
  GroupHom d4_to_c2 = mod_kernel(d4, Subgroup::closure(*d4, {d4->op(rot, rot), ref}), c2);
  int qj = -1;
  for (int g = 0; g < q8->n; ++g)
    if (q8->perms[g] == std::vector<int>{4, 7, 6, 5, 2, 1, 0, 3}) qj = g;
  GroupHom q8_to_c2 = mod_kernel(q8, Subgroup::closure(*q8, {qj}), c2);
  GroupHom c8_to_c4 = cyclic_hom(c8, 1, c4, 1);

  InducedChain ch;
  ch.gamma = c4;
  ch.pm = Subgroup::whole(*c4);
  ch.plus = Subgroup::closure(*c4, {2});
  ch.tau = 1;
  SigmaSet ind = induced_sigma_set(ch).R;
  InducedChain ch2;
  ch2.gamma = c4;
  ch2.pm = Subgroup::closure(*c4, {2});
  ch2.plus = Subgroup::trivial(*c4);
  ch2.tau = 2;
  SigmaSet ind2 = induced_sigma_set(ch2).R;

  struct Model {
    std::string name;
    const SigmaSet* R;
    GroupPtr W;
    const GroupHom* phi;
  };
  std::vector<Model> models = {
      {"sym/c4", &sym, c4, &c4_to_c2},     {"sym/c8", &sym, c8, &c8_to_c2},
      {"sym/d4", &sym, d4, &d4_to_c2},     {"sym/q8", &sym, q8, &q8_to_c2},
      {"mix/c4", &mix, c4, &c4_to_c2},     {"mix/c8", &mix, c8, &c8_to_c2},
      {"mix/d4", &mix, d4, &d4_to_c2},     {"dbl/c4", &dbl, c4, &c4_to_c2},
      {"dbl/q8", &dbl, q8, &q8_to_c2},     {"divisible/c4", &divis, c4, &c4_to_c2},
      {"induced/c8", &ind, c8, &c8_to_c4}, {"induced2/c8", &ind2, c8, &c8_to_c4},
  };

  int fails = 0;
  std::string first;
  for (const Model& m : models) {
    std::string why;
    if (!sdetail::parameter_model_ok(rng, *m.R, m.W, *m.phi, why)) {
      ++fails;
      if (first.empty()) first = m.name + ": " + why;
    }
  }
  out.add("parameter-identities-across-model-catalog", fails == 0,
          fails == 0 ? std::to_string(models.size()) + " models" : first);
  return out;
}

// ---------------------------------------------------------------------------
// Functoriality battery: validated surjections with pullback and parameter
// comparisons over a range of field models

inline SuiteResult run_functoriality(unsigned long long seed) {
  using namespace sdetail;
  Rng rng(seed);
  SuiteResult out;
  out.suite = "functoriality";
  out.seed = seed;

  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  GroupHom phi = cyclic_hom(c4, 1, c2, 1);

  SigmaSet A = fusion_source(c2);
  SigmaSet S2 = two_sym_source(c2);
  SigmaSet D = diagonal_source(c2);
  SigmaSet P2 = symmetric_pair(c2, 2);
  SigmaSet M = mixed_set(c2);

  SurjSigmaMap fuse = check_surj_map(A, P2, {0, 1, 0, 1});
  SurjSigmaMap sfuse = check_surj_map(S2, P2, {0, 1, 0, 1});
  SurjSigmaMap diag = check_surj_map(D, P2, {0, 1}, IMat{{1, 1}});
  SurjSigmaMap idm = check_surj_map(M, M, {0, 1, 2, 3});

  WeilModel wmP = weil_model(P2, c4, phi);
  WeilModel wmA = weil_model(A, c4, phi);
  WeilModel wmS2 = weil_model(S2, c4, phi);
  WeilModel wmD = weil_model(D, c4, phi);
  WeilModel wmM = weil_model(M, c4, phi);

  auto admP = admissible_orbit_characters(wmP, 0, false);
  auto admM0 = admissible_orbit_characters(wmM, 0, false);
  auto admM1 = admissible_orbit_characters(wmM, 1, false);
  if (admP.empty() || admM0.empty() || admM1.empty())
    throw std::logic_error("functoriality suite: missing admissible characters");

  std::vector<FieldBackend> backends = {FieldBackend::archimedean(),
                                        FieldBackend::padic_unramified(3),
                                        FieldBackend::padic_unramified(5),
                                        FieldBackend::padic_unramified(7),
                                        FieldBackend::padic_unramified(13)};

  int maps = 0, fails = 0;
  std::string first;
  auto record = [&](const std::string& name, const FunctorialityReport& rep) {
    ++maps;
    if (!rep.ok) {
      ++fails;
      if (first.empty())
        first = name + ": " + (rep.failures.empty() ? "unknown" : rep.failures.front());
    }
  };

  for (const FieldBackend& B : backends) {
    struct Shape {
      std::string name;
      const SurjSigmaMap* m;
      const WeilModel* wmT;
      std::vector<FieldBackend> srcB;
    };
    std::vector<Shape> shapes = {{"fusion", &fuse, &wmA, {B}},
                                 {"pair-fusion", &sfuse, &wmS2, {B, B}},
                                 {"diagonal", &diag, &wmD, {B}}};
    for (const Shape& sh : shapes) {
      auto ctxT = make_context(*sh.m->src, sh.srcB);
      auto ctxS = make_context(P2, {B});
      CoverMapContext cm = make_cover_map(*sh.m, ctxT, ctxS);

      ChiData chi;
      ZetaData zeta;
      if (B.is_archimedean()) {
        chi.chi = {CharacterSpec{1, Frac(0), 0}};
        zeta.zeta = {CharacterSpec{2, Frac(0), 0}};
      } else {
        chi.chi = {canonical_unramified_chi()};
        zeta.zeta = {CharacterSpec{0, Frac(0), (long long)B.p - 1}};
      }
      validate_chi_data(ctxS, chi);
      validate_zeta_data(ctxS, zeta);

      std::vector<CoverElement> samples;
      for (int t = 0; t < 100; ++t) samples.push_back(random_cover_element(rng, ctxT));
      WeilChiData wchi{{admP.front()}};
      Gauge qp = finish_gauge(P2, {1, -1});
      record(sh.name + "/" + (B.is_archimedean() ? "arch" : "p" + std::to_string(B.p)),
             llcfunc_verify(cm, chi, zeta, samples, *sh.wmT, wmP, wchi, qp));
    }

    // identity shape: the asymmetric slot always models the residue field of 3
    auto ctxM = make_context(M, {B, FieldBackend::padic_unramified(3)});
    CoverMapContext cm = make_cover_map(idm, ctxM, ctxM);
    ChiData chi;
    ZetaData zeta;
    if (B.is_archimedean()) {
      chi.chi = {CharacterSpec{1, Frac(0), 0}, CharacterSpec{0, Frac(1, 3), 1}};
      zeta.zeta = {CharacterSpec{2, Frac(0), 0}, CharacterSpec{0, Frac(1, 3), 2}};
    } else {
      chi.chi = {canonical_unramified_chi(), CharacterSpec{0, Frac(1, 3), 1}};
      zeta.zeta = {CharacterSpec{0, Frac(0), (long long)B.p - 1}, CharacterSpec{0, Frac(1, 3), 2}};
    }
    validate_chi_data(ctxM, chi);
    validate_zeta_data(ctxM, zeta);
    std::vector<CoverElement> samples;
    for (int t = 0; t < 100; ++t) samples.push_back(random_cover_element(rng, ctxM));
    WeilChiData wchi{{admM0.front(), admM1.front()}};
    record("identity/" + std::string(B.is_archimedean() ? "arch" : "p" + std::to_string(B.p)),
           llcfunc_verify(cm, chi, zeta, samples, wmM, wmM, wchi,
                          finish_gauge(M, {1, -1, 1, -1})));
  }

  out.add("pullback-and-parameter-compatibility", fails == 0,
          fails == 0 ? std::to_string(maps) + " validated surjections, 100 samples each" : first);
  return out;
}

// ---------------------------------------------------------------------------
// Reflection-subsystem battery: factorization identities over all involutive
// root-preserving twists of the rank-two catalog

namespace sdetail {

struct LeviCase {
  std::string name;
  RootDatum rd;
  std::vector<std::vector<int>> subsystems;
  std::vector<int> delta;
};

inline RootDatum plain_datum(GroupPtr triv, std::vector<IVec> roots, std::vector<IVec> coroots) {
  RootDatum rd;
  rd.lat = GaloisLattice::trivial(triv, 2);
  rd.roots = std::move(roots);
  rd.coroots = std::move(coroots);
  rd.validate();
  return rd;
}

inline std::vector<LeviCase> levi_catalog() {
  auto triv = cyclic(1);
  std::vector<LeviCase> out;
  out.push_back({"a1xa1",
                 plain_datum(triv, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                             {{2, 0}, {-2, 0}, {0, 2}, {0, -2}}),
                 {{}, {0, 1}, {2, 3}},
                 {0, 2}});
  out.push_back({"a2",
                 plain_datum(triv, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}},
                             {{2, -1}, {-2, 1}, {-1, 2}, {1, -2}, {1, 1}, {-1, -1}}),
                 {{}, {0, 1}, {2, 3}, {4, 5}},
                 {0, 2}});
  out.push_back({"b2",
                 plain_datum(triv,
                             {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}, {1, 1}, {-1, -1}},
                             {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {-1, 1}, {1, -1}, {1, 1}, {-1, -1}}),
                 {{}, {0, 1}, {2, 3}, {4, 5}, {6, 7}},
                 {0, 4}});
  return out;
}

// all order-<=2 lattice automorphisms permuting the roots and carrying
// coroots along (the basis vectors are roots in every catalog case)
inline std::vector<IMat> involutive_twists(const RootDatum& rd) {
  std::vector<IMat> out{imat_identity(2)};
  for (int i = 0; i < rd.size(); ++i)
    for (int j = 0; j < rd.size(); ++j) {
      IMat m{{rd.roots[i][0], rd.roots[j][0]}, {rd.roots[i][1], rd.roots[j][1]}};
      if (m == imat_identity(2)) continue;
      if (imat_mul(m, m) != imat_identity(2)) continue;
      std::vector<int> perm;
      try {
        perm = rd.root_perm(m);
      } catch (const std::invalid_argument&) {
        continue;
      }
      bool coroot_ok = true;
      for (int k = 0; k < rd.size() && coroot_ok; ++k) {
        IVec img(2, 0);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) img[r] += m[c][r] * rd.coroots[k][c];
        if (rd.coroots[perm[k]] != img) coroot_ok = false;
      }
      if (coroot_ok) out.push_back(std::move(m));
    }
  return out;
}

}  // namespace sdetail

inline SuiteResult run_levi(unsigned long long seed) {
  using namespace sdetail;
  SuiteResult out;
  out.suite = "levi";
  out.seed = seed;
  auto c2 = cyclic(2);

  int verified = 0, rejected = 0, fails = 0;
  std::string first;
  for (const LeviCase& lc : levi_catalog()) {
    std::vector<IMat> twists = involutive_twists(lc.rd);
    for (const std::vector<int>& sub : lc.subsystems) {
      LeviDatum levi = make_levi(lc.rd, sub);
      for (const IMat& m : twists) {
        std::vector<int> perm = lc.rd.root_perm(m);
        bool stable = true;
        for (int i : levi.roots)
          if (!levi.member[perm[i]]) stable = false;
        if (!stable) {
          ++rejected;
          continue;
        }
        GaloisLattice gal;
        gal.gamma = c2;
        gal.rank = 2;
        gal.act = {imat_identity(2), m};
        gal.validate();
        try {
          LeviTitsReport rep = levi_tits_factorization(lc.rd, levi, gal, lc.delta);
          ++verified;
          if (!rep.lambda_match || !rep.lambda_invariant || !rep.factorization) {
            ++fails;
            if (first.empty()) first = lc.name + ": identity failed";
          }
        } catch (const std::invalid_argument&) {
          ++rejected;  // twist does not preserve the positive subsystem
        }
      }
    }
  }
  out.add("factorization-identities-over-involutive-twists", fails == 0 && verified >= 12,
          fails == 0 ? std::to_string(verified) + " twisted cases verified, " +
                           std::to_string(rejected) + " non-preserving twists rejected"
                     : first);
  return out;
}

// ---------------------------------------------------------------------------
// Real-weight battery

inline SuiteResult run_adams_vogan(unsigned long long seed) {
  SuiteResult out;
  out.suite = "adams-vogan";
  out.seed = seed;
  std::vector<std::vector<Frac>> gammas = {
      {Frac(1, 2)},
      {Frac(1)},
      {Frac(0)},
      {Frac(3, 2)},
      {Frac(1, 2), Frac(1)},
      {Frac(1), Frac(-3)},
      {Frac(-1, 2), Frac(5, 2)},
      {Frac(3, 2), Frac(2), Frac(-1, 2)},
      {Frac(1, 2), Frac(1, 2), Frac(1, 2)},
      {Frac(0), Frac(-1, 2), Frac(3)},
  };
  int fails = 0;
  std::string first;
  for (size_t i = 0; i < gammas.size(); ++i) {
    AdamsVoganReport rep = adams_vogan_check(gammas[i], 100, seed + i);
    if (!rep.ok) {
      ++fails;
      if (first.empty())
        first = "weight " + std::to_string(i) + ": " +
                (rep.failures.empty() ? "unknown" : rep.failures.front());
    }
  }
  out.add("half-integral-weight-comparison", fails == 0,
          fails == 0 ? "10 weights in ranks 1-3, 100 samples each" : first);
  return out;
}

// ---------------------------------------------------------------------------
// Minimal-difference battery

inline SuiteResult run_mindiff(unsigned long long seed) {
  using namespace sdetail;
  Rng rng(seed);
  SuiteResult out;
  out.suite = "mindiff";
  out.seed = seed;
  auto c2 = cyclic(2);

  SigmaSet R;
  R.lat.gamma = c2;
  R.lat.rank = 3;
  R.lat.act = {imat_identity(3), IMat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
  R.lat.validate();
  R.gact = {{0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 5, 4}};
  R.neg = {1, 0, 3, 2, 5, 4};
  R.bar = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  R.validate();

  int agree_fails = 0, indep_fails = 0, corollary_fails = 0;
  for (int p : {3, 5, 7, 13}) {
    auto Bu = FieldBackend::padic_unramified(p, 6, 2);
    auto Br = FieldBackend::padic_ramified(p, Bu.u);
    auto ctx = make_context(R, {Br, Bu, Br});
    std::vector<MindiffOrbit> plan(3);
    plan[0] = {Br, true, 1, std::nullopt};
    plan[1] = {Br, true, 1, field_from_int(Br, -p)};
    plan[2] = {Br, true, 1, std::nullopt};

    auto specs = ramified_chi_specs(Br);
    std::optional<int> reference;
    for (size_t a = 0; a < 2; ++a)
      for (size_t b = 0; b < 2; ++b) {
        std::vector<CharacterSpec> chi_target{specs[a], specs[b], specs.back()};
        for (int t = 0; t < 3; ++t) {
          RationalFamily x;
          x.x.push_back(random_unit(rng, Br));
          x.x.push_back(norm_one_of(Bu, random_unit(rng, Bu)));
          x.x.push_back(norm_one_of(Br, random_unit(rng, Br)));
          MindiffResult res = mindiff_character(ctx, plan, chi_target, x);
          if (res.direct != res.closed) ++agree_fails;
        }
        RationalFamily fixed;
        fixed.x.push_back(field_from_int(Br, 2));
        fixed.x.push_back(norm_one_of(Bu, padic(Bu, 0, 1, 1)));
        fixed.x.push_back(field_one(Br));
        MindiffResult ref = mindiff_character(ctx, plan, chi_target, fixed);
        if (ref.direct != ref.closed) ++agree_fails;
        if (!reference) reference = ref.direct;
        if (*reference != ref.direct) ++indep_fails;
      }

    // unramified images and an untouched ramified orbit: empty product
    auto Bq = FieldBackend::padic_unramified(p);
    auto qctx = make_context(R, {Bq, Bq, Br});
    std::vector<MindiffOrbit> quiet(3);
    quiet[0] = {Bq, true, 1, std::nullopt};
    quiet[1] = {Bq, true, 1, std::nullopt};
    quiet[2] = {Br, true, 1, std::nullopt};
    std::vector<CharacterSpec> quiet_chi{canonical_unramified_chi(), canonical_unramified_chi(),
                                         specs.front()};
    RationalFamily qx;
    qx.x.push_back(random_unit(rng, Bq));
    qx.x.push_back(norm_one_of(Bq, random_unit(rng, Bq)));
    qx.x.push_back(norm_one_of(Br, random_unit(rng, Br)));
    MindiffResult res = mindiff_character(qctx, quiet, quiet_chi, qx);
    if (res.closed != 1 || res.direct != 1) ++corollary_fails;
  }

  // worked residue values over the prime 5
  {
    auto B = FieldBackend::padic_ramified(5, 2);
    SigmaSet T;
    T.lat = GaloisLattice::trivial(c2, 1);
    T.gact = {{0, 1}, {0, 1}};
    T.neg = {1, 0};
    T.bar = {{1}, {-1}};
    T.validate();
    auto ctx = make_context(T, {B});
    std::vector<MindiffOrbit> plan{{B, true, 1, std::nullopt}};
    std::vector<CharacterSpec> chi_target{ramified_chi_specs(B).front()};
    MindiffResult two = mindiff_character(ctx, plan, chi_target, RationalFamily{{field_from_int(B, 2)}});
    MindiffResult four = mindiff_character(ctx, plan, chi_target, RationalFamily{{field_from_int(B, 4)}});
    if (two.closed != -1 || two.direct != -1 || four.closed != 1 || four.direct != 1)
      ++corollary_fails;
  }

  out.add("closed-formula-agrees-with-direct-evaluation", agree_fails == 0,
          "primes 3, 5, 7, 13");
  out.add("independent-of-minimal-choice", indep_fails == 0, "reference element per prime");
  out.add("trivial-transport-and-worked-values", corollary_fails == 0,
          "empty-product and residue-sign cases");
  return out;
}

// ---------------------------------------------------------------------------

inline SuiteResult run_suite(const std::string& name, unsigned long long seed) {
  if (name == "tits-core") return run_tits_core(seed);
  if (name == "llc-param") return run_llc_param(seed);
  if (name == "functoriality") return run_functoriality(seed);
  if (name == "levi") return run_levi(seed);
  if (name == "adams-vogan") return run_adams_vogan(seed);
  if (name == "mindiff") return run_mindiff(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace covertorus::suites

#endif
