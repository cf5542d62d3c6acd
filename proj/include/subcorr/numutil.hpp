#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "subcorr/errors.hpp"

namespace subcorr {

// p-part of n: the largest power of p dividing n. n > 0, p prime (not checked
// beyond p >= 2).
inline std::uint64_t int_p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw Error("int_p_part: n > 0 and p >= 2 required");
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.push_back({d, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// Inverse of a mod m, gcd(a, m) = 1 required.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, nt = 1, r = m, nr = mod_norm(a, m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("mod_inverse: not coprime");
  return mod_norm(t, m);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Smallest primitive root mod prime ell.
inline std::uint64_t primitive_root(std::uint64_t ell) {
  auto fac = factorize(ell - 1);
  for (std::uint64_t g = 2; g < ell; ++g) {
    bool ok = true;
    for (auto& [q, e] : fac)
      if (pow_mod(g, (ell - 1) / q, ell) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("primitive_root: none found");
}

}  // namespace subcorr
