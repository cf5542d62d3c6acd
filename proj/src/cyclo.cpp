#include "subcorr/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "subcorr/numutil.hpp"

namespace subcorr {

namespace {

struct Factor {
  long q;  // p^v
  long p;
  int v;
  long m;  // n / q
  long u;  // m^{-1} mod q
};

std::vector<Factor> factors_of(long n) {
  std::vector<Factor> fs;
  for (auto& [p, e] : factorize(static_cast<std::uint64_t>(n))) {
    Factor f;
    f.p = static_cast<long>(p);
    f.v = e;
    f.q = 1;
    for (int i = 0; i < e; ++i) f.q *= f.p;
    f.m = n / f.q;
    f.u = mod_inverse(f.m, f.q);
    fs.push_back(f);
  }
  return fs;
}

// Local exponent of zeta_n^j at factor f: zeta_n^j = prod_f zeta_{f.q}^{a_f}.
long component(long j, const Factor& f) { return mod_norm(j * f.u, f.q); }

bool in_local_basis(long a, const Factor& f) {
  if (f.p == 2) return a < f.q / 2;
  long top = f.q / f.p;
  return a / top != 0;
}

// Rewrites every key into the reduced basis, one pass per prime factor.
// A rewrite at one factor leaves the other factors' local exponents alone.
void to_basis(long n, std::map<long, Rational>& c) {
  if (n == 1) return;
  for (const Factor& f : factors_of(n)) {
    std::vector<std::pair<long, Rational>> bad;
    for (auto it = c.begin(); it != c.end();) {
      if (!in_local_basis(component(it->first, f), f)) {
        bad.push_back(*it);
        it = c.erase(it);
      } else {
        ++it;
      }
    }
    long top = f.q / f.p;
    for (auto& [j, coeff] : bad) {
      if (f.p == 2) {
        // zeta^a = -zeta^(a - q/2) for a >= q/2
        long j2 = mod_norm(j - top * f.m, n);
        c[j2] -= coeff;
        if (c[j2] == 0) c.erase(j2);
      } else {
        // zeta^a = -(zeta^(a + top) + ... + zeta^(a + (p-1) top))
        for (long k = 1; k < f.p; ++k) {
          long j2 = mod_norm(j + k * top * f.m, n);
          c[j2] -= coeff;
          if (c[j2] == 0) c.erase(j2);
        }
      }
    }
  }
  for (auto it = c.begin(); it != c.end();)
    it = (it->second == 0) ? c.erase(it) : std::next(it);
}

// zeta_n^j with n = 2m, m odd equals (-1)^j zeta_m^(j * (m+1)/2 mod m).
void halve_even_conductor(long& n, std::map<long, Rational>& c) {
  long m = n / 2;
  long half = (m + 1) / 2;  // inverse of 2 mod m
  std::map<long, Rational> out;
  for (auto& [j, coeff] : c) {
    long j2 = mod_norm(j * half, m);
    if (j % 2 == 0)
      out[j2] += coeff;
    else
      out[j2] -= coeff;
    if (out[j2] == 0) out.erase(j2);
  }
  n = m;
  c = std::move(out);
}

long recompose(const std::vector<long>& comps, const std::vector<Factor>& fs,
               long n) {
  long j = 0;
  for (size_t i = 0; i < fs.size(); ++i)
    j = mod_norm(j + comps[i] * fs[i].m, n);
  return j;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) : n_(1) {
  if (r != 0) c_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw BadConductor("order must be positive");
  return from_terms(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(
    long n, const std::vector<std::pair<long, Rational>>& terms) {
  if (n < 1) throw BadConductor("conductor must be positive");
  Cyclotomic z;
  z.n_ = n;
  for (auto& [e, q] : terms) {
    if (q == 0) continue;
    long j = mod_norm(e, n);
    z.c_[j] += q;
    if (z.c_[j] == 0) z.c_.erase(j);
  }
  z.normalize();
  return z;
}

void Cyclotomic::normalize() {
  if (n_ % 4 == 2) halve_even_conductor(n_, c_);
  to_basis(n_, c_);
  if (c_.empty()) {
    n_ = 1;
    return;
  }
  // Conductor minimization. Each pass either removes a prime, divides one
  // prime's exponent, or stops; membership tests are syntactic because the
  // basis is a tensor product over the prime-power factors.
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    auto fs = factors_of(n_);
    for (size_t i = 0; i < fs.size() && !changed; ++i) {
      const Factor& f = fs[i];
      if (f.p == 2 && f.v == 2) {
        // Q(zeta_4) part: basis exponents {0, 1}; drop iff all are 0.
        bool all0 = true;
        for (auto& [j, q] : c_)
          if (component(j, f) != 0) {
            all0 = false;
            break;
          }
        if (!all0) continue;
        long n2 = n_ / 4;
        std::map<long, Rational> out;
        for (auto& [j, q] : c_) {
          std::vector<long> comps;
          for (size_t l = 0; l < fs.size(); ++l)
            if (l != i) comps.push_back(component(j, fs[l]));
          std::vector<Factor> rest;
          for (size_t l = 0; l < fs.size(); ++l)
            if (l != i) rest.push_back(fs[l]);
          for (auto& r : rest) {
            r.m = n2 / r.q;
            r.u = mod_inverse(r.m, r.q);
          }
          out[recompose(comps, rest, n2)] += q;
        }
        n_ = n2;
        c_ = std::move(out);
        changed = true;
      } else if (f.v >= 2) {
        // Reduce p^v -> p^(v-1) iff every local exponent is divisible by p.
        bool alldiv = true;
        for (auto& [j, q] : c_)
          if (component(j, f) % f.p != 0) {
            alldiv = false;
            break;
          }
        if (!alldiv) continue;
        long n2 = n_ / f.p;
        std::map<long, Rational> out;
        auto fs2 = fs;
        fs2[i].q /= f.p;
        fs2[i].v -= 1;
        for (auto& g : fs2) {
          g.m = n2 / g.q;
          g.u = mod_inverse(g.m, g.q);
        }
        for (auto& [j, q] : c_) {
          std::vector<long> comps;
          for (size_t l = 0; l < fs.size(); ++l) {
            long a = component(j, fs[l]);
            comps.push_back(l == i ? a / f.p : a);
          }
          out[recompose(comps, fs2, n2)] += q;
        }
        n_ = n2;
        c_ = std::move(out);
        changed = true;
      } else if (f.p != 2) {
        // v = 1, odd p: drop p iff for each fixed rest-exponent the
        // coefficients at local exponents 1..p-1 agree; then the common
        // block sums to -(coeff) * zeta^rest.
        std::map<long, std::map<long, Rational>> by_rest;
        for (auto& [j, q] : c_) {
          long a = component(j, f);
          long rest = mod_norm(j - a * f.m, n_);
          by_rest[rest][a] = q;
        }
        bool ok = true;
        for (auto& [rest, blocks] : by_rest) {
          if (static_cast<long>(blocks.size()) != f.p - 1) {
            ok = false;
            break;
          }
          const Rational& c0 = blocks.begin()->second;
          for (auto& [a, q] : blocks)
            if (q != c0) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) continue;
        long n2 = n_ / f.p;
        std::vector<Factor> rest_fs;
        for (size_t l = 0; l < fs.size(); ++l)
          if (l != i) rest_fs.push_back(fs[l]);
        for (auto& g : rest_fs) {
          g.m = n2 / g.q;
          g.u = mod_inverse(g.m, g.q);
        }
        std::map<long, Rational> out;
        for (auto& [rest, blocks] : by_rest) {
          std::vector<long> comps;
          for (size_t l = 0; l < fs.size(); ++l)
            if (l != i) comps.push_back(component(rest, fs[l]));
          long j2 = recompose(comps, rest_fs, n2);
          out[j2] -= blocks.begin()->second;
          if (out[j2] == 0) out.erase(j2);
        }
        n_ = n2;
        c_ = std::move(out);
        changed = true;
      }
    }
    if (c_.empty()) {
      n_ = 1;
      return;
    }
  }
}

Rational Cyclotomic::to_rational() const {
  if (n_ != 1) throw Error("to_rational: element is irrational");
  return c_.empty() ? Rational(0) : c_.begin()->second;
}

bool Cyclotomic::is_integer() const {
  return n_ == 1 && (c_.empty() || c_.begin()->second.get_den() == 1);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long n = std::lcm(n_, o.n_);
  Cyclotomic z;
  z.n_ = n;
  for (auto& [j, q] : c_) z.c_[j * (n / n_)] += q;
  for (auto& [j, q] : o.c_) {
    long k = j * (n / o.n_);
    z.c_[k] += q;
    if (z.c_[k] == 0) z.c_.erase(k);
  }
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& [j, q] : z.c_) q = -q;
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long n = std::lcm(n_, o.n_);
  Cyclotomic z;
  z.n_ = n;
  long sa = n / n_, sb = n / o.n_;
  for (auto& [ja, qa] : c_)
    for (auto& [jb, qb] : o.c_) {
      long j = mod_norm(ja * sa + jb * sb, n);
      Rational t = qa * qb;
      z.c_[j] += t;
      if (z.c_[j] == 0) z.c_.erase(j);
    }
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  if (r == 0) return Cyclotomic();
  Cyclotomic z = *this;
  for (auto& [j, q] : z.c_) q *= r;
  return z;
}

Cyclotomic Cyclotomic::operator/(const Rational& r) const {
  if (r == 0) throw Error("division by zero");
  return *this * Rational(r.get_den(), r.get_num());
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / to_rational());
  Cyclotomic prod(Rational(1));
  for (long j = 2; j <= n_; ++j)
    if (std::gcd(j, n_) == 1) prod *= galois(j);
  Cyclotomic norm = *this * prod;
  if (!norm.is_rational() || norm.is_zero())
    throw Error("inverse: norm computation failed");
  return prod / norm.to_rational();
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  auto a = c_.begin(), b = o.c_.begin();
  for (; a != c_.end() && b != o.c_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == c_.end() && b != o.c_.end();
}

Cyclotomic Cyclotomic::galois(long j) const {
  long jm = mod_norm(j, n_);
  if (std::gcd(jm, n_) != 1)
    throw NotCoprime("galois exponent must be a unit mod the conductor");
  if (n_ == 1) return *this;
  Cyclotomic z;
  z.n_ = n_;
  for (auto& [k, q] : c_) z.c_[mod_norm(k * jm, n_)] = q;
  z.normalize();
  return z;
}

bool Cyclotomic::same_field(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.n_, b.n_);
  for (long j = 1; j < m; ++j) {
    if (std::gcd(j, m) != 1) continue;
    bool fa = a.galois(j % a.n_ == 0 ? 1 : mod_norm(j, a.n_)) == a;
    bool fb = b.galois(j % b.n_ == 0 ? 1 : mod_norm(j, b.n_)) == b;
    if (fa != fb) return false;
  }
  return true;
}

std::vector<std::pair<long, Rational>> Cyclotomic::terms() const {
  return {c_.begin(), c_.end()};
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [j, q] : c_) {
    Rational aq = abs(q);
    if (!first)
      os << (q < 0 ? " - " : " + ");
    else if (q < 0)
      os << "-";
    first = false;
    bool unit_coeff = (aq == 1) && j != 0;
    if (!unit_coeff) os << aq.get_str();
    if (j != 0) {
      if (!unit_coeff) os << "*";
      os << "z(" << n_ << ")";
      if (j != 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace subcorr
