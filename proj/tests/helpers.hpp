// Shared test utilities: deterministic RNG and brute-force oracles.
#ifndef COVERTORUS_TEST_HELPERS_HPP
#define COVERTORUS_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "covertorus/cochain.hpp"

namespace covertorus::testing {

// mt19937_64 is the project-wide named generator (seeded per suite).
using Rng = std::mt19937_64;

// Exhaustive search for s with ds = c over all s whose entries have
// denominator dividing D.  Exponential; only for tiny shapes.
inline bool brute_force_coboundary(const Cochain& c, int D) {
  size_t cells = 1;
  for (int i = 0; i < c.degree - 1; ++i) cells *= (size_t)c.n();
  size_t slots = cells * c.rank();
  std::vector<int> digits(slots, 0);
  while (true) {
    Cochain s = Cochain::zero(c.coeff, c.degree - 1);
    for (size_t k = 0; k < cells; ++k)
      for (int i = 0; i < c.rank(); ++i)
        s.table[k][i] = Frac(digits[k * c.rank() + i], D).mod1();
    if (cochain_eq(differential(s), c)) return true;
    size_t i = 0;
    while (i < slots && ++digits[i] == D) digits[i++] = 0;
    if (i == slots) break;
  }
  return false;
}

inline Frac random_frac(Rng& rng, int max_den) {
  std::uniform_int_distribution<int> dd(1, max_den);
  int d = dd(rng);
  std::uniform_int_distribution<int> nd(0, d - 1);
  return Frac(nd(rng), d).mod1();
}

inline Cochain random_cochain(Rng& rng, const GaloisLattice& coeff, int degree, int max_den = 6) {
  Cochain c = Cochain::zero(coeff, degree);
  for (auto& cell : c.table)
    for (auto& v : cell) v = random_frac(rng, max_den);
  return c;
}

}  // namespace covertorus::testing

#endif
