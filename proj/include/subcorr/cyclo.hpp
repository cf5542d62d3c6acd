#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subcorr/errors.hpp"

namespace subcorr {

// Arbitrary-precision rational. GMP keeps den > 0 and gcd(num, den) = 1 for
// results of arithmetic; two-integer construction must canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Element of the cyclotomic field Q(zeta_n), stored exactly as a sparse
// rational combination of basis roots of unity.
//
// Invariants after construction:
//  - conductor() is 1, odd > 1, or divisible by 4, and is minimal: the
//    element lies in no proper cyclotomic subfield Q(zeta_d), d | n.
//  - exponents lie in the reduced (Zumbroich-style) basis of Q(zeta_n): per
//    prime power p^v || n the local exponent a satisfies a/p^(v-1) != 0 for
//    odd p, and a < 2^(v-1) for p = 2.
//  - no stored coefficient is zero; the zero element has conductor 1 and no
//    terms.
// Equality is therefore syntactic.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(long k) : Cyclotomic(Rational(k)) {}

  // zeta_n^k. n >= 1; k any integer (reduced mod n).
  static Cyclotomic root_of_unity(long n, long k);
  static Cyclotomic zeta(long n) { return root_of_unity(n, 1); }
  // Sum of coeff * zeta_n^exp terms.
  static Cyclotomic from_terms(long n,
                               const std::vector<std::pair<long, Rational>>& terms);

  long conductor() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  // Requires is_rational().
  Rational to_rational() const;
  bool is_integer() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic operator*(const Rational& r) const;
  Cyclotomic operator/(const Rational& r) const;
  // Multiplicative inverse via the product of Galois conjugates. Nonzero only.
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& o) const {
    return n_ == o.n_ && c_ == o.c_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // Canonical total order (conductor, then term list); used for deterministic
  // sorting, no numeric meaning.
  bool operator<(const Cyclotomic& o) const;

  // Image under zeta_n -> zeta_n^j, gcd(j, n) = 1.
  Cyclotomic galois(long j) const;
  Cyclotomic conj() const { return galois(-1); }
  bool is_real() const { return conj() == *this; }

  // True iff a and b generate the same field, decided by comparing Galois
  // stabilizers inside (Z/m)^* for m = lcm of the conductors.
  static bool same_field(const Cyclotomic& a, const Cyclotomic& b);

  // Canonical term list, sorted by exponent.
  std::vector<std::pair<long, Rational>> terms() const;

  std::string to_string() const;

 private:
  long n_;
  std::map<long, Rational> c_;

  void normalize();
  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& c);
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) {
  return c * r;
}

}  // namespace subcorr
