#include <catch2/catch_amalgamated.hpp>

#include "covertorus/lattice.hpp"
#include "helpers.hpp"

using namespace covertorus;

namespace {

GroupPtr cyclic(int n) {
  std::vector<int> gen(n);
  for (int i = 0; i < n; ++i) gen[i] = (i + 1) % n;
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({gen}));
}

GroupPtr s3() {
  return std::make_shared<FiniteGroup>(FiniteGroup::from_perms({{1, 0, 2}, {1, 2, 0}}));
}

}  // namespace

TEST_CASE("torus arithmetic") {
  TorusElement a = {Frac(3, 4), Frac(1, 2)};
  TorusElement b = {Frac(1, 2), Frac(2, 3)};
  CHECK(torus_add(a, b) == TorusElement{Frac(1, 4), Frac(1, 6)});
  CHECK(torus_neg(a) == TorusElement{Frac(1, 4), Frac(1, 2)});
  CHECK(torus_is_zero(torus_add(a, torus_neg(a))));
  CHECK(half_point({3, 2}) == TorusElement{Frac(1, 2), Frac(0)});
}

TEST_CASE("sign lattice action") {
  auto c2 = cyclic(2);
  auto l = GaloisLattice::sign(c2, {1, -1});
  CHECK(l.apply(1, {Frac(1, 2)}) == TorusElement{Frac(1, 2)});
  CHECK(l.apply(1, {Frac(1, 4)}) == TorusElement{Frac(3, 4)});
  CHECK_THROWS(GaloisLattice::sign(c2, {1, 2}));  // not unimodular... (det 2)
}

TEST_CASE("induced modules") {
  auto c2 = cyclic(2);
  // Δ trivial: rank-2 swap
  auto swap2 = induce_module(c2, Subgroup::trivial(*c2));
  CHECK(swap2.lat.rank == 2);
  CHECK(swap2.lat.mat(1) == IMat{{0, 1}, {1, 0}});

  // Δ = Γ with sign character: rank-1, A_σ = (−1)
  std::vector<int> eps = {1, -1};
  auto zm = induce_module(c2, Subgroup::whole(*c2), &eps);
  CHECK(zm.lat.rank == 1);
  CHECK(zm.lat.mat(1) == IMat{{-1}});

  std::vector<int> bad = {1, 0};
  CHECK_THROWS(induce_module(c2, Subgroup::whole(*c2), &bad));
}

TEST_CASE("reciprocity transport round-trips") {
  auto g6 = s3();
  auto delta = Subgroup::closure(*g6, {1});  // order 2, generated by (12)
  std::vector<int> eps(g6->n, 1);
  eps[1] = -1;  // sign on the subgroup generator
  auto ind = induce_module(g6, delta, &eps);
  CHECK(ind.lat.rank == 3);

  FrobeniusMaps fm{ind, ind.lat};
  IVec y(ind.lat.rank, 0);
  y[0] = 1;  // identity-coset basis vector is Delta-equivariant for eps
  IMat M = fm.second_forward(y);
  CHECK(fm.second_backward(M) == y);
  // the produced map is Gamma-equivariant: M ∘ A_g == A_g ∘ M
  for (int g = 0; g < g6->n; ++g)
    CHECK(imat_mul(M, ind.lat.mat(g)) == imat_mul(ind.lat.mat(g), M));

  // first reciprocity with the dual functional
  IVec c(ind.lat.rank, 0);
  c[0] = 1;
  IMat N = fm.first_forward(c);
  CHECK(fm.first_backward(N) == c);

  IVec bad(ind.lat.rank, 1);
  CHECK_THROWS(fm.second_forward(bad));
}

TEST_CASE("unit and counit compose to the identity") {
  auto c2 = cyclic(2);
  auto ind = induce_module(c2, Subgroup::trivial(*c2));
  Frac x(2, 5);
  CHECK(ind_counit(ind, ind_unit(ind, x)) == x);
}

TEST_CASE("translated unit equals indicator restriction") {
  // gamma^{-1} f_{f(gamma)} = f · 1_{Δγ}
  auto g6 = s3();
  auto delta = Subgroup::closure(*g6, {1});
  std::vector<int> eps(g6->n, 1);
  eps[1] = -1;
  auto ind = induce_module(g6, delta, &eps);

  covertorus::testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Frac> f(ind.reps.size());
    for (auto& v : f) v = covertorus::testing::random_frac(rng, 5);
    for (int g = 0; g < g6->n; ++g) {
      Frac val = ind.value_at(f, g).mod1();
      TorusElement unit(ind.reps.size(), Frac(0));
      unit[0] = val;
      TorusElement lhs = ind.lat.apply(g6->invert(g), unit);
      auto [ci, h] = right_coset_decompose(*g6, delta, ind.reps, g);
      TorusElement rhs(ind.reps.size(), Frac(0));
      rhs[ci] = f[ci].mod1();
      CHECK(lhs == rhs);
    }
  }
}
