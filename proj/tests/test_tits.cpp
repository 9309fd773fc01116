#include <catch2/catch_amalgamated.hpp>

#include "covertorus/tits.hpp"
#include "helpers.hpp"

using namespace covertorus;
using covertorus::testing::Rng;

namespace {

GroupPtr cyclic(int n) {
  std::vector<int> gen(n);
  for (int i = 0; i < n; ++i) gen[i] = (i + 1) % n;
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({gen}));
}

GroupPtr s3() {
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({{1, 0, 2}, {1, 2, 0}}));
}

SigmaSet symmetric_pair() {
  auto c2 = cyclic(2);
  SigmaSet R;
  R.lat = GaloisLattice::sign(c2, {1, -1});
  R.gact = {{0, 1}, {1, 0}};
  R.neg = {1, 0};
  R.bar = {{1}, {-1}};
  R.validate();
  return R;
}

Gauge random_gauge(Rng& rng, const SigmaSet& R) {
  std::vector<int> p(R.size(), 0);
  for (int i = 0; i < R.size(); ++i)
    if (p[i] == 0) {
      int s = (rng() & 1) ? 1 : -1;
      p[i] = s;
      p[R.neg[i]] = -s;
    }
  return finish_gauge(R, std::move(p));
}

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

}  // namespace

TEST_CASE("rank-one symmetric pair has the quadratic Tits table") {
  SigmaSet R = symmetric_pair();
  Gauge p = make_gauge_halfset(R);
  Cochain t = tits_cocycle(R, p);
  CHECK(t.at({1, 1}) == TorusElement{Frac(1, 2)});
  CHECK(t.at({0, 0}) == TorusElement{Frac(0)});
  CHECK(t.at({0, 1}) == TorusElement{Frac(0)});
  CHECK(t.at({1, 0}) == TorusElement{Frac(0)});
  CHECK(is_cocycle(t));
  CHECK(t.is_normalized());

  auto pres = lgroup(R, p);
  pres.check();
}

TEST_CASE("gauge cochain connects the Tits tables") {
  Rng rng(21);
  std::vector<InducedChain> chains;
  {
    InducedChain ch;
    ch.gamma = cyclic(4);
    ch.pm = Subgroup::whole(*ch.gamma);
    ch.plus = Subgroup::closure(*ch.gamma, {2});
    ch.tau = 1;
    chains.push_back(ch);
  }
  {
    InducedChain ch;
    ch.gamma = s3();
    ch.pm = Subgroup::closure(*ch.gamma, {1});
    ch.plus = Subgroup::trivial(*ch.gamma);
    ch.tau = 1;
    chains.push_back(ch);
  }
  for (const auto& ch : chains) {
    auto is = induced_sigma_set(ch);
    for (int trial = 0; trial < 8; ++trial) {
      Gauge p = random_gauge(rng, is.R);
      Gauge q = random_gauge(rng, is.R);
      Gauge r = random_gauge(rng, is.R);
      Cochain tp = tits_cocycle(is.R, p);
      Cochain tq = tits_cocycle(is.R, q);
      Cochain spq = gauge_cochain(is.R, p, q);
      CHECK(cochain_eq(cochain_sub(tp, tq), differential(spq)));

      // transitivity and symmetry up to coboundaries
      Cochain sqr = gauge_cochain(is.R, q, r);
      Cochain spr = gauge_cochain(is.R, p, r);
      CHECK(cohomologous(spr, cochain_add(spq, sqr)));
      Cochain sqp = gauge_cochain(is.R, q, p);
      CHECK(cohomologous(spq, sqp));
    }
  }
}

TEST_CASE("presentation transitions carry the gauge cochain") {
  SigmaSet R = symmetric_pair();
  Gauge p = make_gauge_halfset(R);
  std::vector<int> pos = {1};
  Gauge q = make_gauge_halfset(R, &pos);
  auto pres = lgroup(R, p);
  auto tr = transition(pres, q);
  tr.target.check();
  CHECK(cochain_eq(cochain_sub(pres.t, tr.target.t), differential(tr.s_pq)));
}

TEST_CASE("vanishing gauges") {
  // all-asymmetric: Γ-invariant gauge exists and kills the table
  auto c2 = cyclic(2);
  SigmaSet A;
  A.lat = GaloisLattice::trivial(c2, 1);
  A.gact = {{0, 1}, {0, 1}};
  A.neg = {1, 0};
  A.bar = {{1}, {-1}};
  A.validate();
  auto g = vanishing_gauge(A);
  REQUIRE(g.has_value());
  CHECK(g->gamma_invariant);
  CHECK(tits_cocycle(A, *g).is_zero());

  // symmetric with odd image: no vanishing gauge from divisibility
  SigmaSet R = symmetric_pair();
  CHECK_FALSE(vanishing_gauge(R).has_value());

  // symmetric with image divisible by two
  SigmaSet D = symmetric_pair();
  D.bar = {{2}, {-2}};
  D.validate();
  auto gd = vanishing_gauge(D);
  REQUIRE(gd.has_value());
  CHECK(tits_cocycle(D, *gd).is_zero());
}

TEST_CASE("induced sets match the transported quadratic cocycle") {
  Rng rng(33);
  std::vector<InducedChain> chains;
  {
    InducedChain ch;  // two cosets
    ch.gamma = cyclic(4);
    ch.pm = Subgroup::whole(*ch.gamma);
    ch.plus = Subgroup::closure(*ch.gamma, {2});
    ch.tau = 1;
    chains.push_back(ch);
  }
  {
    InducedChain ch;  // four cosets
    ch.gamma = cyclic(4);
    ch.pm = Subgroup::closure(*ch.gamma, {2});
    ch.plus = Subgroup::trivial(*ch.gamma);
    ch.tau = 2;
    chains.push_back(ch);
  }
  {
    InducedChain ch;  // six cosets
    ch.gamma = s3();
    ch.pm = Subgroup::closure(*ch.gamma, {1});
    ch.plus = Subgroup::trivial(*ch.gamma);
    ch.tau = 1;
    chains.push_back(ch);
  }
  for (const auto& ch : chains)
    for (int trial = 0; trial < 6; ++trial) {
      auto sec = random_section(rng, ch);
      auto rep = induced_tits_identity(ch, sec);
      CHECK(rep.equal);
    }
}

TEST_CASE("section changes shift the transport by the gauge cochain") {
  Rng rng(45);
  InducedChain ch;
  ch.gamma = s3();
  ch.pm = Subgroup::closure(*ch.gamma, {1});
  ch.plus = Subgroup::trivial(*ch.gamma);
  ch.tau = 1;
  auto is = induced_sigma_set(ch);
  Cochain z = canonical_quadratic_cocycle(ch);
  for (int trial = 0; trial < 6; ++trial) {
    auto s1 = random_section(rng, ch);
    auto s2 = random_section(rng, ch);
    Cochain sh1 = shapiro(z, ch, s1);
    Cochain sh2 = shapiro(z, ch, s2);
    Gauge p1 = section_gauge(ch, is, s1);
    Gauge p2 = section_gauge(ch, is, s2);
    Cochain spq = gauge_cochain(is.R, p1, p2);
    CHECK(cochain_eq(cochain_sub(sh1, sh2), differential(spq)));
  }
}
