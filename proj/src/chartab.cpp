#include "subcorr/chartab.hpp"

#include <algorithm>

#include "subcorr/errors.hpp"
#include "subcorr/numutil.hpp"

namespace subcorr {

ConjClasses ConjClasses::of(const PermGroup& g, uint64_t bound) {
  ConjClasses out;
  out.group = g;
  auto classes = g.conjugacy_classes(bound);
  for (int k = 0; k < (int)classes.size(); ++k) {
    out.reps.push_back(classes[k].front());
    out.sizes.push_back(classes[k].size());
    out.orders.push_back(classes[k].front().order());
    for (const Perm& x : classes[k]) out.index_.emplace(x, k);
  }
  for (const Perm& rep : out.reps)
    out.inverse_class.push_back(out.class_of(rep.inverse()));
  return out;
}

int ConjClasses::class_of(const Perm& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw NotAMember("element is not in the group");
  return it->second;
}

int ConjClasses::power_class(int k, long long m) const {
  long long o = (long long)orders[k];
  long long e = ((m % o) + o) % o;
  return class_of(reps[k].pow(e));
}

uint64_t ConjClasses::exponent() const {
  uint64_t e = 1;
  for (uint64_t o : orders) e = std::lcm(e, o);
  return e;
}

// ---- class function helpers ----

Cyclotomic inner_product(const ConjClasses& cls, const ClassFunction& f,
                         const ClassFunction& h) {
  if ((int)f.size() != cls.size() || (int)h.size() != cls.size())
    throw GroupMismatch("class function length does not match class count");
  Cyclotomic acc;
  for (int k = 0; k < cls.size(); ++k)
    acc += f[k] * h[k].conj() * Rational((unsigned long)cls.sizes[k]);
  return acc / Rational((unsigned long)cls.group.order());
}

bool is_irreducible_character(const ConjClasses& cls, const ClassFunction& f) {
  if (cf_is_zero(f)) return false;
  Cyclotomic one(1);
  return inner_product(cls, f, f) == one && !f[0].is_zero() &&
         f[0].is_integer() && f[0].to_rational() > 0;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw GroupMismatch("class function length");
  ClassFunction r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw GroupMismatch("class function length");
  ClassFunction r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ClassFunction cf_scale(const ClassFunction& a, const Rational& q) {
  ClassFunction r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * q;
  return r;
}

ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw GroupMismatch("class function length");
  ClassFunction r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

bool cf_is_zero(const ClassFunction& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

ClassFunction trivial_character(int nclasses) {
  return ClassFunction(nclasses, Cyclotomic(1));
}

ClassFunction regular_character(const ConjClasses& cls) {
  ClassFunction r(cls.size());
  r[0] = Cyclotomic((long)cls.group.order());
  return r;
}

std::vector<int> class_fusion(const ConjClasses& sub, const ConjClasses& big) {
  std::vector<int> out;
  for (const Perm& rep : sub.reps) out.push_back(big.class_of(rep));
  return out;
}

ClassFunction restrict_class_function(const ClassFunction& f,
                                      const std::vector<int>& fusion) {
  ClassFunction r(fusion.size());
  for (size_t j = 0; j < fusion.size(); ++j) r[j] = f[fusion[j]];
  return r;
}

ClassFunction induce_class_function(const ConjClasses& sub,
                                    const ConjClasses& big,
                                    const ClassFunction& f) {
  auto fusion = class_fusion(sub, big);
  ClassFunction r(big.size());
  for (int j = 0; j < sub.size(); ++j)
    r[fusion[j]] += f[j] * Rational((unsigned long)sub.sizes[j]);
  Rational scale((unsigned long)big.group.order(),
                 (unsigned long)sub.group.order());
  scale.canonicalize();
  for (int k = 0; k < big.size(); ++k) {
    Rational s = scale / Rational((unsigned long)big.sizes[k]);
    s.canonicalize();
    r[k] = r[k] * s;
  }
  return r;
}

std::vector<uint64_t> decompose(const CharTable& t, const ClassFunction& f) {
  std::vector<uint64_t> out;
  for (int i = 0; i < t.size(); ++i) {
    Cyclotomic m = inner_product(t.classes(), f, t.irr(i));
    if (!m.is_integer())
      throw NotACharacter("multiplicity is not an integer");
    Rational q = m.to_rational();
    if (q < 0) throw NotACharacter("multiplicity is negative");
    out.push_back((uint64_t)q.get_num().get_ui());
  }
  return out;
}

std::vector<long long> decompose_virtual(const CharTable& t,
                                         const ClassFunction& f) {
  std::vector<long long> out;
  for (int i = 0; i < t.size(); ++i) {
    Cyclotomic m = inner_product(t.classes(), f, t.irr(i));
    if (!m.is_integer())
      throw NotACharacter("multiplicity is not an integer");
    out.push_back(m.to_rational().get_num().get_si());
  }
  return out;
}

ClassFunction conjugate_class_function(const ConjClasses& cls,
                                       const ClassFunction& f, const Perm& g) {
  ClassFunction r(cls.size());
  for (int k = 0; k < cls.size(); ++k)
    r[k] = f[cls.class_of(conjugate(cls.reps[k], g.inverse()))];
  return r;
}

ClassFunction galois_class_function(const ClassFunction& f, long j) {
  ClassFunction r(f.size());
  for (size_t k = 0; k < f.size(); ++k) {
    long n = f[k].conductor();
    long jj = mod_norm(j, n);
    r[k] = f[k].galois(jj == 0 ? 1 : jj);
  }
  return r;
}

ClassFunction determinant_character(const CharTable& t, int i) {
  const ConjClasses& cls = t.classes();
  uint64_t d = t.degree(i);
  ClassFunction out(cls.size());
  for (int k = 0; k < cls.size(); ++k) {
    // Newton's identities on the power sums p_t = chi(g^t)
    std::vector<Cyclotomic> e(d + 1);
    e[0] = Cyclotomic(1);
    for (uint64_t m = 1; m <= d; ++m) {
      Cyclotomic acc;
      for (uint64_t s = 1; s <= m; ++s) {
        Cyclotomic term = e[m - s] * t.irr(i)[cls.power_class(k, (long long)s)];
        acc = (s % 2 == 1) ? acc + term : acc - term;
      }
      e[m] = acc / Rational((unsigned long)m);
    }
    out[k] = e[d];
  }
  return out;
}

uint64_t linear_character_order(const ConjClasses& cls,
                                const ClassFunction& lam) {
  uint64_t ord = 1;
  for (int k = 0; k < cls.size(); ++k) {
    uint64_t o = cls.orders[k];
    uint64_t vo = 0;
    for (uint64_t s = 1; s <= o; ++s) {
      if (o % s != 0) continue;
      Cyclotomic pw(1);
      for (uint64_t t = 0; t < s; ++t) pw = pw * lam[k];
      if (pw == Cyclotomic(1)) {
        vo = s;
        break;
      }
    }
    if (vo == 0) throw NotACharacter("value is not a root of unity");
    ord = std::lcm(ord, vo);
  }
  return ord;
}

// ---- Dixon-Schneider ----

namespace {

using Row = std::vector<uint64_t>;
using Mat = std::vector<Row>;

struct ModCtx {
  uint64_t ell;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % ell; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + ell - b % ell) % ell; }
  uint64_t mul(uint64_t a, uint64_t b) const { return mul_mod(a, b, ell); }
  uint64_t inv(uint64_t a) const { return mod_inverse(a % ell, ell); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, const ModCtx& md) {
  std::vector<int> pivots;
  size_t row = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    uint64_t iv = md.inv(m[row][col]);
    for (size_t c = col; c < cols; ++c) m[row][c] = md.mul(m[row][c], iv);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      uint64_t f = m[r][col];
      for (size_t c = col; c < cols; ++c)
        m[r][c] = md.sub(m[r][c], md.mul(f, m[row][c]));
    }
    pivots.push_back((int)col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Coordinates of v in the span of an rref basis; throws if outside.
Row coords_in_basis(const Mat& basis, const std::vector<int>& pivots,
                    Row v, const ModCtx& md) {
  Row coord(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    uint64_t c = v[pivots[i]];
    coord[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = md.sub(v[j], md.mul(c, basis[i][j]));
  }
  for (uint64_t x : v)
    if (x != 0) throw Error("vector escapes an invariant subspace");
  return coord;
}

// Characteristic polynomial by Faddeev-LeVerrier; leading coeff first.
std::vector<uint64_t> charpoly(const Mat& a, const ModCtx& md) {
  size_t n = a.size();
  std::vector<uint64_t> coeffs = {1};
  Mat m(n, Row(n, 0));
  for (size_t k = 1; k <= n; ++k) {
    // m = a * (m + c_{k-1} I)
    Mat t = m;
    for (size_t i = 0; i < n; ++i) t[i][i] = md.add(t[i][i], coeffs.back());
    Mat prod(n, Row(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint64_t s = 0;
        for (size_t x = 0; x < n; ++x)
          s = md.add(s, md.mul(a[i][x], t[x][j]));
        prod[i][j] = s;
      }
    m = prod;
    uint64_t tr = 0;
    for (size_t i = 0; i < n; ++i) tr = md.add(tr, m[i][i]);
    coeffs.push_back(md.sub(0, md.mul(tr, md.inv(k % md.ell))));
  }
  return coeffs;
}

uint64_t eval_poly(const std::vector<uint64_t>& coeffs, uint64_t x,
                   const ModCtx& md) {
  uint64_t acc = 0;
  for (uint64_t c : coeffs) acc = md.add(md.mul(acc, x), c);
  return acc;
}

Mat kernel_basis(Mat m, const ModCtx& md) {
  size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m, md);
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  Mat out;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = md.sub(0, m[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CharTable CharTable::compute(const PermGroup& g) {
  if (g.order() > kOrderBound)
    throw GroupTooLarge("character table past order bound " +
                        std::to_string(kOrderBound));
  CharTable table;
  table.classes_ = ConjClasses::of(g);
  const ConjClasses& cls = table.classes_;
  int r = cls.size();
  uint64_t n = g.order();

  auto class_lists = g.conjugacy_classes();
  uint64_t e = cls.exponent();

  // prime with e | ell-1 (so F_ell holds all needed roots of unity),
  // large enough to pin degrees, past the class count (charpoly divides
  // by 1..dim), and coprime to |G|
  uint64_t ell = e + 1;
  uint64_t floor_rt = 1;
  while ((floor_rt + 1) * (floor_rt + 1) <= n) ++floor_rt;
  while (!(is_prime(ell) && ell > 2 * (floor_rt + 1) && ell > (uint64_t)r &&
           n % ell != 0))
    ell += e;
  ModCtx md{ell};

  // split the eigenspaces of the class-sum matrices
  std::vector<Mat> spaces;
  {
    Mat full(r, Row(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(full);
  }
  for (int i = 1; i < r; ++i) {
    bool all_split = true;
    for (const Mat& v : spaces) all_split = all_split && v.size() == 1;
    if (all_split) break;
    Mat a(r, Row(r, 0));
    for (const Perm& x : class_lists[i]) {
      Perm xi = x.inverse();
      for (int k = 0; k < r; ++k) {
        int j = cls.class_of(xi * cls.reps[k]);
        a[j][k] = md.add(a[j][k], 1);
      }
    }
    std::vector<Mat> next;
    for (Mat& v : spaces) {
      if (v.size() == 1) {
        next.push_back(std::move(v));
        continue;
      }
      auto basis = v;
      auto pivots = rref(basis, md);
      size_t dim = basis.size();
      // restricted matrix: a maps the subspace into itself
      Mat restr(dim, Row(dim, 0));
      for (size_t bj = 0; bj < dim; ++bj) {
        Row image(r, 0);
        for (int row = 0; row < r; ++row) {
          uint64_t s = 0;
          for (int col = 0; col < r; ++col)
            s = md.add(s, md.mul(a[row][col], basis[bj][col]));
          image[row] = s;
        }
        Row coord = coords_in_basis(basis, pivots, image, md);
        for (size_t bi = 0; bi < dim; ++bi) restr[bi][bj] = coord[bi];
      }
      auto cp = charpoly(restr, md);
      size_t found = 0;
      for (uint64_t lam = 0; lam < ell; ++lam) {
        if (eval_poly(cp, lam, md) != 0) continue;
        Mat shifted = restr;
        for (size_t i2 = 0; i2 < dim; ++i2)
          shifted[i2][i2] = md.sub(shifted[i2][i2], lam);
        Mat ker = kernel_basis(shifted, md);
        if (ker.empty()) continue;
        Mat lifted;
        for (const Row& kv : ker) {
          Row global(r, 0);
          for (size_t bi = 0; bi < dim; ++bi)
            for (int col = 0; col < r; ++col)
              global[col] =
                  md.add(global[col], md.mul(kv[bi], basis[bi][col]));
          lifted.push_back(std::move(global));
        }
        found += lifted.size();
        next.push_back(std::move(lifted));
      }
      if (found != dim)
        throw Error("class matrix failed to split an eigenspace");
    }
    spaces = std::move(next);
  }
  for (const Mat& v : spaces)
    if (v.size() != 1) throw Error("central characters were not separated");

  // recover degrees and values mod ell, then lift exactly
  uint64_t w = primitive_root(ell);
  for (const Mat& v : spaces) {
    Row omega = v[0];
    if (omega[0] == 0) throw Error("central character vanishes at identity");
    uint64_t norm = md.inv(omega[0]);
    for (auto& x : omega) x = md.mul(x, norm);

    uint64_t s = 0;
    for (int k = 0; k < r; ++k)
      s = md.add(s, md.mul(md.mul(omega[k], omega[cls.inverse_class[k]]),
                           md.inv(cls.sizes[k] % ell)));
    uint64_t d2 = md.mul(n % ell, md.inv(s));
    uint64_t d = 0;
    for (uint64_t c = 1; 2 * c < ell; ++c)
      if (md.mul(c, c) == d2) {
        d = c;
        break;
      }
    if (d == 0) throw Error("degree is not a small square root");

    Row chi_mod(r);
    for (int k = 0; k < r; ++k)
      chi_mod[k] = md.mul(md.mul(d, omega[k]), md.inv(cls.sizes[k] % ell));

    ClassFunction row(r);
    for (int k = 0; k < r; ++k) {
      uint64_t o = cls.orders[k];
      uint64_t z = pow_mod(w, (ell - 1) / o, ell);
      uint64_t zinv = md.inv(z);
      std::vector<std::pair<long, Rational>> terms;
      uint64_t total = 0;
      for (uint64_t m = 0; m < o; ++m) {
        uint64_t c = 0;
        for (uint64_t t = 0; t < o; ++t) {
          uint64_t root = pow_mod(zinv, (t * m) % o, ell);
          c = md.add(c, md.mul(chi_mod[cls.power_class(k, (long long)t)], root));
        }
        c = md.mul(c, md.inv(o % ell));
        if (c > d) throw Error("eigenvalue multiplicity escaped its range");
        total += c;
        if (c != 0) terms.push_back({(long)m, make_rational((long)c)});
      }
      if (total != d) throw Error("eigenvalue multiplicities do not sum to the degree");
      row[k] = Cyclotomic::from_terms((long)o, terms);
    }
    table.irr_.push_back(std::move(row));
  }

  std::sort(table.irr_.begin(), table.irr_.end(),
            [](const ClassFunction& a, const ClassFunction& b) {
              if (a[0] != b[0]) return a[0] < b[0];
              return a < b;
            });

  // exact verification: orthonormal rows, degree sum, degree positivity
  uint64_t dsum = 0;
  for (int i = 0; i < (int)table.irr_.size(); ++i) {
    uint64_t d = table.degree(i);
    dsum += d * d;
    for (int j = i; j < (int)table.irr_.size(); ++j) {
      Cyclotomic ip = inner_product(cls, table.irr_[i], table.irr_[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0))
        throw Error("character rows are not orthonormal");
    }
  }
  if (dsum != n) throw Error("degree squares do not sum to the group order");
  return table;
}

uint64_t CharTable::degree(int i) const {
  const Cyclotomic& d = irr_[i][0];
  if (!d.is_integer()) throw Error("degree entry is not an integer");
  return (uint64_t)d.to_rational().get_num().get_ui();
}

int CharTable::index_of(const ClassFunction& f) const {
  for (int i = 0; i < size(); ++i)
    if (irr_[i] == f) return i;
  return -1;
}

int CharTable::trivial_index() const {
  return index_of(trivial_character(size()));
}

}  // namespace subcorr
