#include "table_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

using namespace subcorr;

namespace oracle {

namespace {

std::complex<double> to_complex(const Cyclotomic& c) {
  std::complex<double> acc;
  for (const auto& [j, q] : c.terms()) {
    double ang = 2.0 * M_PI * (double)j / (double)c.conductor();
    acc += q.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// Enumerates candidate characters of one degree. A candidate assigns each
// class a sum of d roots of unity of the element order, consistently across
// all power maps, with unit norm.
struct Search {
  const ConjClasses& cls;
  uint64_t n;
  long d;
  std::vector<int> proc_order;
  ClassFunction values;
  std::vector<char> assigned;
  double partial_norm = 0;
  std::vector<ClassFunction>* out;

  Search(const ConjClasses& c, long deg, std::vector<ClassFunction>* sink)
      : cls(c), n(c.group.order()), d(deg), out(sink) {
    for (int k = 1; k < cls.size(); ++k) proc_order.push_back(k);
    std::sort(proc_order.begin(), proc_order.end(), [&](int a, int b) {
      if (cls.orders[a] != cls.orders[b]) return cls.orders[a] > cls.orders[b];
      return a < b;
    });
    values.assign(cls.size(), Cyclotomic());
    assigned.assign(cls.size(), 0);
    values[0] = Cyclotomic(d);
    assigned[0] = 1;
    partial_norm = (double)(d * d) / (double)n;
  }

  // assign values[k^t] for all t from the exponent multiset; returns the
  // classes newly assigned, or nullopt-style failure via bool
  bool propagate(int k, const std::vector<int>& exps,
                 std::vector<int>* touched) {
    long o = (long)cls.orders[k];
    for (long t = 1; t < o; ++t) {
      int target = cls.power_class(k, t);
      std::vector<std::pair<long, Rational>> terms;
      for (int e : exps) terms.push_back({(t * e) % o, make_rational(1)});
      Cyclotomic val = Cyclotomic::from_terms(o, terms);
      if (assigned[target]) {
        if (values[target] != val) return false;
      } else {
        values[target] = val;
        assigned[target] = 1;
        touched->push_back(target);
        partial_norm +=
            (double)cls.sizes[target] * std::norm(to_complex(val)) / (double)n;
      }
    }
    return true;
  }

  void unwind(const std::vector<int>& touched) {
    for (int t : touched) {
      partial_norm -=
          (double)cls.sizes[t] * std::norm(to_complex(values[t])) / (double)n;
      assigned[t] = 0;
      values[t] = Cyclotomic();
    }
  }

  void run(size_t pos) {
    while (pos < proc_order.size() && assigned[proc_order[pos]]) ++pos;
    if (pos == proc_order.size()) {
      if (inner_product(cls, values, values) == Cyclotomic(1))
        out->push_back(values);
      return;
    }
    int k = proc_order[pos];
    long o = (long)cls.orders[k];
    std::vector<int> exps;
    enumerate_multisets(k, o, 0, &exps, pos);
  }

  void enumerate_multisets(int k, long o, int min_e, std::vector<int>* exps,
                           size_t pos) {
    if ((long)exps->size() == d) {
      std::vector<int> touched;
      if (propagate(k, *exps, &touched) && partial_norm < 1.0 + 1e-7)
        run(pos);
      unwind(touched);
      return;
    }
    for (int e = min_e; e < o; ++e) {
      exps->push_back(e);
      enumerate_multisets(k, o, e, exps, pos);
      exps->pop_back();
    }
  }
};

// P_f = (f(1)/|G|) sum_g conj(f(g)) rho_reg(g); f with [f,f]=1 comes from a
// single irreducible iff P_f is idempotent. Checked on the identity row of
// the convolution kernel, which determines the whole product.
bool projection_idempotent(const ConjClasses& cls, const ClassFunction& f) {
  auto elts = cls.group.elements();
  std::vector<int> class_idx(elts.size());
  std::map<Perm, int> pos;
  for (size_t i = 0; i < elts.size(); ++i) {
    class_idx[i] = cls.class_of(elts[i]);
    pos.emplace(elts[i], (int)i);
  }
  ClassFunction fc(cls.size());
  for (int k = 0; k < cls.size(); ++k) fc[k] = f[k].conj();
  Rational scale(f[0].to_rational());
  scale /= Rational((unsigned long)cls.group.order());
  scale.canonicalize();
  for (size_t ki = 0; ki < elts.size(); ++ki) {
    Cyclotomic lhs;
    for (size_t mi = 0; mi < elts.size(); ++mi) {
      Perm rest = elts[mi].inverse() * elts[ki];
      lhs += fc[class_idx[mi]] * fc[class_idx[pos.at(rest)]];
    }
    if (lhs * scale != fc[class_idx[ki]]) return false;
  }
  return true;
}

struct FamilySearch {
  const ConjClasses& cls;
  const std::vector<ClassFunction>& cands;
  uint64_t n;
  int r;
  std::vector<int> chosen;
  std::vector<ClassFunction> result;

  bool pick(int start, uint64_t sum_d2) {
    if ((int)chosen.size() == r) {
      if (sum_d2 != n) return false;
      ClassFunction reg(cls.size());
      for (int c : chosen) {
        if (!projection_idempotent(cls, cands[c])) return false;
        reg = cf_add(reg, cf_scale(cands[c], cands[c][0].to_rational()));
      }
      if (reg != regular_character(cls)) return false;
      for (int c : chosen) result.push_back(cands[c]);
      return true;
    }
    for (int c = start; c < (int)cands.size(); ++c) {
      uint64_t d = (uint64_t)cands[c][0].to_rational().get_num().get_ui();
      uint64_t left = (uint64_t)(r - (int)chosen.size());
      if (sum_d2 + left * d * d > n) break;  // candidates sorted by degree
      bool ok = true;
      for (int prev : chosen)
        ok = ok && inner_product(cls, cands[c], cands[prev]).is_zero();
      if (!ok) continue;
      chosen.push_back(c);
      if (pick(c + 1, sum_d2 + d * d)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<ClassFunction> brute_force_rows(const PermGroup& g) {
  ConjClasses cls = ConjClasses::of(g);
  uint64_t n = g.order();
  int r = cls.size();
  std::vector<ClassFunction> cands;
  for (long d = 1; (uint64_t)(d * d) <= n; ++d) {
    if (n % (uint64_t)d != 0) continue;  // degrees divide the order
    Search s(cls, d, &cands);
    s.run(0);
  }
  std::sort(cands.begin(), cands.end(),
            [](const ClassFunction& a, const ClassFunction& b) {
              if (a[0] != b[0]) return a[0] < b[0];
              return a < b;
            });
  // the trivial character belongs to every valid family; pin it first
  ClassFunction triv = trivial_character(r);
  auto it = std::find(cands.begin(), cands.end(), triv);
  if (it == cands.end()) throw Error("trivial character missed by enumeration");
  std::iter_swap(cands.begin(), it);

  FamilySearch fam{cls, cands, n, r, {0}, {}};
  if (!fam.pick(1, 1))
    throw Error("no orthonormal family of class functions found");
  std::sort(fam.result.begin(), fam.result.end(),
            [](const ClassFunction& a, const ClassFunction& b) {
              if (a[0] != b[0]) return a[0] < b[0];
              return a < b;
            });
  return fam.result;
}

}  // namespace oracle
