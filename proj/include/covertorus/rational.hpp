// Small exact fraction type used for torsion dual-torus coordinates and
// character values.  Denominators stay tiny (lcm of a few character orders),
// so 64-bit components are ample.
#ifndef COVERTORUS_RATIONAL_HPP
#define COVERTORUS_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace covertorus {

struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num * b.num, a.den * b.den);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::domain_error("Frac: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
  }
  Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }
  Frac& operator+=(const Frac& b) { *this = *this + b; return *this; }
  Frac& operator-=(const Frac& b) { *this = *this - b; return *this; }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) {
    return a.num * b.den < b.num * a.den;
  }

  // Representative in [0,1); fractions mod 1 are the ambient group for all
  // torus coordinates and character values.
  Frac mod1() const {
    long long n = num % den;
    if (n < 0) n += den;
    Frac r; r.num = n; r.den = den; r.normalize();
    return r;
  }

  bool is_zero() const { return num == 0; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace covertorus

#endif
