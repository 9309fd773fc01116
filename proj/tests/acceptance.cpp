// End-to-end acceptance battery: one pass/fail line per criterion, nonzero
// exit if any fails.  Each criterion carries a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covertorus/scenario.hpp"
#include "covertorus/suites.hpp"
#include "helpers.hpp"

using namespace covertorus;
using suites::Rng;
using suites::SuiteResult;

namespace {

int failures = 0;

void report(int num, const std::string& label, bool ok, double secs, double budget,
            const std::string& note = "") {
  bool pass = ok && secs <= budget;
  if (!pass) ++failures;
  std::printf("criterion %02d: %s (%.1fs) %s%s%s\n", num, pass ? "pass" : "FAIL", secs,
              label.c_str(), note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
}

void run(int num, const std::string& label, double budget,
         const std::function<bool(std::string&)>& body) {
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(num, label, ok, secs, budget, note);
}

bool suite_ok(const SuiteResult& r, std::string& note) {
  if (r.ok()) return true;
  for (const auto& c : r.checks)
    if (!c.pass) note += (note.empty() ? "" : "; ") + c.name + ": " + c.detail;
  return false;
}

std::string env_dir(const char* var) {
  const char* v = std::getenv(var);
  return v ? v : ".";
}

// ---------------------------------------------------------------------------
// criterion 6: the two rank-two fixtures

std::set<std::vector<int>> orbit_root_sets(const scenario::Json& check_data) {
  std::set<std::vector<int>> out;
  for (const auto& o : check_data["orbits"]) {
    std::vector<int> roots = o["roots"].get<std::vector<int>>();
    std::sort(roots.begin(), roots.end());
    out.insert(roots);
  }
  return out;
}

bool psp4_fixture(const std::string& name, const std::set<std::vector<int>>& want_orbits,
                  bool want_sum_inj, bool want_quot_inj, std::string& note) {
  std::string spath = env_dir("COVERTORUS_SCENARIO_DIR") + "/" + name + ".json";
  auto s = scenario::load_file(spath);
  scenario::Json rep = scenario::run_scenario(s, 0);
  if (!scenario::report_ok(rep)) {
    note += name + ": a check failed; ";
    return false;
  }
  const scenario::Json* levi_data = nullptr;
  for (const auto& c : rep["checks"])
    if (c["name"] == "levi-orbits") levi_data = &c["data"];
  if (!levi_data) {
    note += name + ": no levi-orbits check; ";
    return false;
  }
  bool ok = true;
  if (orbit_root_sets(*levi_data) != want_orbits) {
    note += name + ": orbit sets differ; ";
    ok = false;
  }
  if ((*levi_data)["sum_map_injective"] != want_sum_inj ||
      (*levi_data)["quotient_map_injective"] != want_quot_inj) {
    note += name + ": injectivity pattern differs; ";
    ok = false;
  }
  std::string gpath = env_dir("COVERTORUS_GOLDEN_DIR") + "/" + name + ".json";
  std::ifstream g(gpath);
  std::stringstream buf;
  buf << g.rdbuf();
  if (!g || buf.str() != rep.dump(2) + "\n") {
    note += name + ": report differs from the golden file; ";
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 9: coset-chain transport identities

std::vector<int> random_section(Rng& rng, const InducedChain& ch) {
  const FiniteGroup& G = *ch.gamma;
  auto reps = right_coset_reps(G, ch.pm);
  std::vector<int> sec;
  for (int r : reps) {
    std::vector<int> coset;
    for (int h : ch.pm.elems) coset.push_back(G.op(h, r));
    sec.push_back(coset[rng() % coset.size()]);
  }
  return sec;
}

int element_of_order(const FiniteGroup& G, int ord, const Subgroup* avoid = nullptr) {
  for (int g = 1; g < G.n; ++g) {
    if (avoid && avoid->contains(g)) continue;
    int x = g, k = 1;
    while (x != 0) {
      x = G.op(x, g);
      ++k;
    }
    if (k == ord) return g;
  }
  throw std::logic_error("no element of the requested order");
}

std::vector<InducedChain> shipped_chains() {
  std::vector<InducedChain> out;
  auto c4 = suites::sdetail::cyclic(4);
  {
    InducedChain ch;  // order 4, whole over the halved subgroup
    ch.gamma = c4;
    ch.pm = Subgroup::whole(*c4);
    ch.plus = Subgroup::closure(*c4, {2});
    ch.tau = 1;
    out.push_back(ch);
  }
  {
    InducedChain ch;  // order 4, halved subgroup over the trivial one
    ch.gamma = c4;
    ch.pm = Subgroup::closure(*c4, {2});
    ch.plus = Subgroup::trivial(*c4);
    ch.tau = 2;
    out.push_back(ch);
  }
  auto c6 = suites::sdetail::cyclic(6);
  {
    InducedChain ch;  // order 6, whole over the index-two subgroup
    ch.gamma = c6;
    ch.pm = Subgroup::whole(*c6);
    ch.plus = Subgroup::closure(*c6, {2});
    ch.tau = 3;
    out.push_back(ch);
  }
  {
    InducedChain ch;  // order 6, the order-two subgroup over the trivial one
    ch.gamma = c6;
    ch.pm = Subgroup::closure(*c6, {3});
    ch.plus = Subgroup::trivial(*c6);
    ch.tau = 3;
    out.push_back(ch);
  }
  auto d4 = suites::sdetail::dihedral4();
  {
    int r = element_of_order(*d4, 4);
    InducedChain ch;  // dihedral, rotation subgroup over its square
    ch.gamma = d4;
    ch.pm = Subgroup::closure(*d4, {r});
    ch.plus = Subgroup::closure(*d4, {d4->op(r, r)});
    ch.tau = r;
    out.push_back(ch);

    Subgroup rot = ch.pm;
    int f = element_of_order(*d4, 2, &rot);
    InducedChain ch2;  // dihedral, a reflection-extended Klein subgroup
    ch2.gamma = d4;
    ch2.pm = Subgroup::closure(*d4, {d4->op(r, r), f});
    ch2.plus = Subgroup::closure(*d4, {d4->op(r, r)});
    ch2.tau = f;
    out.push_back(ch2);
  }
  auto q8 = suites::sdetail::quaternion8();
  {
    int i = element_of_order(*q8, 4);
    InducedChain ch;  // quaternion, an order-four subgroup over the center
    ch.gamma = q8;
    ch.pm = Subgroup::closure(*q8, {i});
    ch.plus = Subgroup::closure(*q8, {q8->op(i, i)});
    ch.tau = i;
    out.push_back(ch);
  }
  return out;
}

bool chain_battery(std::string& note) {
  Rng rng(0x9);
  auto chains = shipped_chains();
  if (chains.size() < 5) {
    note = "fewer than five chains";
    return false;
  }
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    const InducedChain& ch = chains[ci];
    auto is = induced_sigma_set(ch);
    Cochain z = canonical_quadratic_cocycle(ch);
    for (int trial = 0; trial < 4; ++trial) {
      auto s1 = random_section(rng, ch);
      auto s2 = random_section(rng, ch);
      auto r1 = induced_tits_identity(ch, s1);
      auto r2 = induced_tits_identity(ch, s2);
      if (!r1.equal || !r2.equal) {
        note = "transport identity failed on chain " + std::to_string(ci);
        return false;
      }
      Gauge p1 = section_gauge(ch, is, s1);
      Gauge p2 = section_gauge(ch, is, s2);
      if (!cochain_eq(cochain_sub(r1.shapiro_side, r2.shapiro_side),
                      differential(gauge_cochain(is.R, p1, p2)))) {
        note = "section change is not the comparison coboundary on chain " + std::to_string(ci);
        return false;
      }
    }
  }
  note = std::to_string(chains.size()) + " chains";
  return true;
}

// ---------------------------------------------------------------------------
// criterion 10: double-cover arithmetic

bool in_candidate_base(const FieldBackend& B, long long v) {
  return B.kind == FieldKind::PadicUnramified || v % 2 == 0;
}

// exhaustive search for a base-field ratio between the two representatives
bool cover_eq_brute(const CoverContext& ctx, const CoverElement& a, const CoverElement& b) {
  if (!family_eq(a.x, b.x)) return false;
  int sign = 1;
  for (size_t o = 0; o < ctx.orbits.size(); ++o) {
    if (!ctx.orbits[o].symmetric) continue;
    const FieldBackend& B = ctx.backend[o];
    bool found = false;
    for (long long v = -6; v <= 6 && !found; ++v) {
      if (!in_candidate_base(B, v)) continue;
      for (long long u = 1; u < B.pk && !found; ++u) {
        if (u % B.p == 0) continue;
        FieldElement eta = padic(B, v, u, 0);
        if (field_mul(B, eta, *a.delta[o]) == *b.delta[o]) {
          sign *= kappa(B, eta);
          found = true;
        }
      }
    }
    if (!found) return false;
  }
  return a.eps * b.eps == sign;
}

bool cover_battery(std::string& note) {
  Rng rng(0xA);
  auto c2 = suites::sdetail::cyclic(2);
  SigmaSet S = suites::sdetail::symmetric_pair(c2);
  SigmaSet M = suites::sdetail::mixed_set(c2);

  // genuineness and multiplicativity of the character evaluations
  for (const FieldBackend& B :
       {FieldBackend::padic_unramified(3), FieldBackend::padic_ramified(5)}) {
    auto ctx = make_context(M, {B, FieldBackend::padic_unramified(3)});
    CharacterSpec c0 = B.kind == FieldKind::PadicUnramified
                           ? canonical_unramified_chi()
                           : suites::sdetail::ramified_chi_specs(B).front();
    ChiData chi{{c0, CharacterSpec{0, Frac(1, 3), 1}}};
    validate_chi_data(ctx, chi);
    if (chi_S(ctx, chi, cover_identity(ctx)) != Frac(0) ||
        chi_S(ctx, chi, cover_central(ctx)) != Frac(1, 2)) {
      note = "character evaluation is not genuine";
      return false;
    }
    for (int t = 0; t < 8; ++t) {
      CoverElement e = suites::sdetail::random_cover_element(rng, ctx);
      CoverElement g = suites::sdetail::random_cover_element(rng, ctx);
      if (chi_S(ctx, chi, cover_mul(ctx, e, g)) !=
          (chi_S(ctx, chi, e) + chi_S(ctx, chi, g)).mod1()) {
        note = "character evaluation is not multiplicative";
        return false;
      }
      if (chi_S(ctx, chi, cover_mul(ctx, cover_central(ctx), e)) !=
          (chi_S(ctx, chi, e) + Frac(1, 2)).mod1()) {
        note = "central twist does not shift the character by a half";
        return false;
      }
    }
  }

  // sign evaluation: genuineness and the rescaling law
  for (const FieldBackend& B :
       {FieldBackend::padic_unramified(3), FieldBackend::padic_ramified(5),
        FieldBackend::padic_ramified(7)}) {
    auto ctx = make_context(S, {B});
    FieldElement a0 = B.kind == FieldKind::PadicUnramified ? padic(B, 0, 0, 1) : padic(B, 1, 1, 0);
    AData base{{a0}};
    validate_a_data(ctx, base);
    for (int t = 0; t < 8; ++t) {
      CoverElement x = suites::sdetail::random_cover_element(rng, ctx);
      if (a_S(ctx, base, cover_mul(ctx, cover_central(ctx), x)) != -a_S(ctx, base, x)) {
        note = "sign evaluation is not genuine";
        return false;
      }
      FieldElement c = field_from_int(B, (long long)(1 + rng() % (B.p - 1)) *
                                             (rng() % 2 ? B.p : 1));
      if (!(x.x.x[0] == field_one(B))) {
        AData scaled{{field_mul(B, c, a0)}};
        if (a_S(ctx, scaled, x) != kappa(B, c) * a_S(ctx, base, x)) {
          note = "sign evaluation rescaling law failed";
          return false;
        }
      }
    }
  }

  // splitting trichotomy across the residue characteristics
  struct { FieldBackend B; SplitStatus want; } cases[] = {
      {FieldBackend::padic_ramified(3), SplitStatus::Nonsplit},
      {FieldBackend::padic_ramified(5), SplitStatus::SplitNonCanonical},
      {FieldBackend::padic_ramified(7), SplitStatus::Nonsplit},
      {FieldBackend::padic_unramified(3), SplitStatus::CanonicalSplit},
      {FieldBackend::padic_ramified(13), SplitStatus::SplitNonCanonical},
      {FieldBackend::archimedean(), SplitStatus::Nonsplit},
  };
  for (const auto& c : cases)
    if (split_status(make_context(S, {c.B})) != c.want) {
      note = "splitting trichotomy mismatch";
      return false;
    }
  SigmaSet D = S;
  D.bar = {{2}, {-2}};
  D.validate();
  if (split_status(make_context(D, {FieldBackend::padic_ramified(3)})) !=
      SplitStatus::CanonicalSplit) {
    note = "divisible image did not split canonically";
    return false;
  }

  // equality test against the exhaustive base-field-ratio search
  int agreements = 0;
  for (const FieldBackend& B :
       {FieldBackend::padic_unramified(3), FieldBackend::padic_ramified(3)}) {
    auto ctx = make_context(S, {B});
    for (int t = 0; t < 20; ++t) {
      CoverElement e = suites::sdetail::random_cover_element(rng, ctx);
      // a twisted representative of the same element
      long long cval = (long long)(1 + rng() % (B.p - 1)) *
                       (rng() % 2 ? (B.kind == FieldKind::PadicRamified ? B.p * B.p : B.p) : 1);
      FieldElement c = field_from_int(B, cval);
      CoverElement e2 = e;
      e2.delta[0] = field_mul(B, c, *e.delta[0]);
      e2.eps = e.eps * kappa(B, c);
      CoverElement e3 = e2;
      e3.eps = -e2.eps;
      CoverElement g = suites::sdetail::random_cover_element(rng, ctx);
      std::vector<std::pair<CoverElement, CoverElement>> pairs = {
          {e, e2}, {e, e3}, {e, g}, {e, e}};
      for (const auto& [x, y] : pairs) {
        if (cover_eq(ctx, x, y) != cover_eq_brute(ctx, x, y)) {
          note = "equality test disagrees with the exhaustive ratio search";
          return false;
        }
        ++agreements;
      }
    }
  }
  note = std::to_string(agreements) + " brute-force agreements";
  return true;
}

// ---------------------------------------------------------------------------
// criterion 11: the coboundary decision against exhaustive witness search

bool coboundary_battery(std::string& note) {
  Rng rng(0xB);
  std::vector<GroupPtr> groups = {suites::sdetail::cyclic(2), suites::sdetail::cyclic(3),
                                  suites::sdetail::cyclic(4),
                                  std::make_shared<FiniteGroup>(FiniteGroup::from_perms(
                                      {{1, 0, 3, 2}, {2, 3, 0, 1}}))};
  int cases = 0;
  for (const GroupPtr& G : groups) {
    std::vector<GaloisLattice> lats = {GaloisLattice::trivial(G, 1),
                                       GaloisLattice::trivial(G, 2)};
    if (G->n == 2) lats.push_back(GaloisLattice::sign(G, {1, -1}));
    for (const GaloisLattice& lat : lats) {
      // degree-one cocycles with bounded denominators, both directions
      for (int trial = 0; trial < 6; ++trial) {
        Cochain c = testing::random_cochain(rng, lat, 1, 4);
        if (!is_cocycle(c)) continue;
        auto res = is_coboundary(c);
        // a degree-zero witness at worst halves again: denominators divide 24
        if (res.yes != testing::brute_force_coboundary(c, 24)) {
          note = "degree-one disagreement";
          return false;
        }
        if (res.yes && !cochain_eq(differential(*res.witness), c)) {
          note = "degree-one witness does not differentiate back";
          return false;
        }
        ++cases;
      }
      // degree-two coboundaries built from bounded-denominator witnesses
      for (int trial = 0; trial < 4; ++trial) {
        Cochain s = testing::random_cochain(rng, lat, 1, 4);
        Cochain c = differential(s);
        auto res = is_coboundary(c);
        if (!res.yes || !cochain_eq(differential(*res.witness), c)) {
          note = "constructed coboundary was not recognized";
          return false;
        }
        // witness entries have denominators dividing lcm(1..4) = 12
        if (G->n <= 3 && lat.rank == 1 && !testing::brute_force_coboundary(c, 12)) {
          note = "exhaustive search missed the constructed witness";
          return false;
        }
        ++cases;
      }
    }
  }
  // a known non-trivial class: the sign table of a symmetric pair
  SigmaSet S = suites::sdetail::symmetric_pair(suites::sdetail::cyclic(2));
  Cochain t = tits_cocycle(S, make_gauge_halfset(S));
  if (is_coboundary(t).yes || testing::brute_force_coboundary(t, 4)) {
    note = "non-trivial class reported as a coboundary";
    return false;
  }
  ++cases;
  note = std::to_string(cases) + " cases";
  return true;
}

}  // namespace

int main() {
  run(1, "randomized sigma-set cocycle battery", 10.0, [](std::string& note) {
    return suite_ok(suites::run_tits_cocycles(1), note);
  });
  run(2, "gauge comparison battery", 30.0, [](std::string& note) {
    return suite_ok(suites::run_gauge_comparisons(2), note);
  });
  run(3, "finite-model parameter battery", 30.0, [](std::string& note) {
    return suite_ok(suites::run_llc_param(3), note);
  });
  run(4, "surjective map battery", 60.0, [](std::string& note) {
    return suite_ok(suites::run_functoriality(4), note);
  });
  run(5, "minimal-difference battery", 30.0, [](std::string& note) {
    return suite_ok(suites::run_mindiff(5), note);
  });
  run(6, "rank-two fixture reports", 1.0, [](std::string& note) {
    bool a = psp4_fixture("psp4-levi-short", {{2}, {3}, {4, 6}, {5, 7}}, true, false, note);
    bool b = psp4_fixture("psp4-levi-long", {{0, 2}, {1, 3}, {6}, {7}}, false, true, note);
    return a && b;
  });
  run(7, "subsystem factorization battery", 30.0, [](std::string& note) {
    return suite_ok(suites::run_levi(7), note);
  });
  run(8, "half-integral weight battery", 10.0, [](std::string& note) {
    return suite_ok(suites::run_adams_vogan(8), note);
  });
  run(9, "coset-chain transport battery", 10.0, chain_battery);
  run(10, "double-cover arithmetic battery", 30.0, cover_battery);
  run(11, "coboundary decision battery", 10.0, coboundary_battery);

  return failures == 0 ? 0 : 1;
}
