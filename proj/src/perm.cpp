#include "subcorr/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "subcorr/numutil.hpp"

namespace subcorr {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      throw MalformedPermutation("image list is not a bijection");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree())
    throw GroupMismatch("composing permutations of different degree");
  std::vector<int> r(img_.size());
  for (int x = 0; x < degree(); ++x) r[x] = o.img_[img_[x]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int x = 0; x < degree(); ++x) r[img_[x]] = x;
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
  Perm acc(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

uint64_t Perm::order() const {
  uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, (uint64_t)c.size());
  return o;
}

int Perm::smallest_moved_point() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return x;
  return -1;
}

std::vector<int> Perm::moved_points() const {
  std::vector<int> r;
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) r.push_back(x);
  return r;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    std::vector<int> c;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      c.push_back(y);
      y = img_[y];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

Perm conjugate(const Perm& a, const Perm& g) { return g.inverse() * a * g; }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

bool commutes(const Perm& a, const Perm& b) { return a * b == b * a; }

bool is_p_element(const Perm& a, uint64_t p) {
  uint64_t o = a.order();
  return o == int_p_part(o, p);
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1, to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw MalformedPermutation("cycle point out of range");
      if (img[from] != from)
        throw MalformedPermutation("point repeated across cycles");
      img[from] = to;
    }
  }
  return Perm(img);
}

std::pair<Perm, Perm> p_part_decomposition(const Perm& g, uint64_t p) {
  uint64_t o = g.order();
  uint64_t q = int_p_part(o, p), m = o / q;
  if (q == 1) return {Perm(g.degree()), g};
  if (m == 1) return {g, Perm(g.degree())};
  // u*q + v*m = 1; g_p = g^(v*m), g_p' = g^(u*q)
  long long u = (long long)mod_inverse(q % m, m);  // u*q = 1 mod m
  long long vm = 1 - u * (long long)q;             // = v*m
  Perm gp = g.pow(((vm % (long long)o) + (long long)o) % (long long)o);
  Perm gq = g.pow((u * (long long)q) % (long long)o);
  return {gp, gq};
}

// ---- PermGroup ----

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw GroupMismatch("generator degree does not match group degree");
    if (!g.is_identity()) gens_.push_back(g);
  }
  for (const Perm& g : gens_) extend(0, g);
  order_ = 1;
  for (const Level& lv : levels_) {
    uint64_t sz = lv.transversal.size();
    if (order_ > UINT64_MAX / 4 / sz)
      throw GroupTooLarge("group order overflows the supported range");
    order_ *= sz;
  }
}

void PermGroup::rebuild_orbit(size_t level) {
  Level& lv = levels_[level];
  lv.transversal.clear();
  lv.transversal.emplace(lv.base, Perm(degree_));
  std::queue<int> q;
  q.push(lv.base);
  while (!q.empty()) {
    int p = q.front();
    q.pop();
    for (const Perm& s : lv.gens) {
      int t = s[p];
      if (!lv.transversal.count(t)) {
        lv.transversal.emplace(t, lv.transversal.at(p) * s);
        q.push(t);
      }
    }
  }
}

void PermGroup::extend(size_t level, const Perm& g) {
  if (g.is_identity()) return;
  if (level == levels_.size()) {
    Level lv;
    lv.base = g.smallest_moved_point();
    lv.transversal.emplace(lv.base, Perm(degree_));
    levels_.push_back(std::move(lv));
  }
  if (contains_from(level, g)) return;
  levels_[level].gens.push_back(g);
  rebuild_orbit(level);
  std::vector<int> pts;
  for (const auto& [p, u] : levels_[level].transversal) pts.push_back(p);
  for (int p : pts) {
    for (size_t si = 0; si < levels_[level].gens.size(); ++si) {
      Perm s = levels_[level].gens[si];
      Perm u = levels_[level].transversal.at(p);
      Perm schreier = u * s * levels_[level].transversal.at(s[p]).inverse();
      extend(level + 1, schreier);
    }
  }
}

bool PermGroup::contains_from(size_t level, Perm g) const {
  for (size_t i = level; i < levels_.size(); ++i) {
    if (g.is_identity()) return true;
    int p = g[levels_[i].base];
    auto it = levels_[i].transversal.find(p);
    if (it == levels_[i].transversal.end()) return false;
    g = g * it->second.inverse();
  }
  return g.is_identity();
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw GroupMismatch("membership test across different degrees");
  return contains_from(0, g);
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<Perm> PermGroup::elements(uint64_t bound) const {
  if (order_ > bound)
    throw GroupTooLarge("element enumeration past bound " +
                        std::to_string(bound));
  std::vector<Perm> result = {Perm(degree_)};
  for (size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(result.size() * levels_[i].transversal.size());
    for (const Perm& h : result)
      for (const auto& [p, u] : levels_[i].transversal) next.push_back(h * u);
    result = std::move(next);
  }
  return result;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (size_t i = levels_.size(); i-- > 0;) {
    const auto& tr = levels_[i].transversal;
    std::uniform_int_distribution<size_t> d(0, tr.size() - 1);
    auto it = tr.begin();
    std::advance(it, d(rng));
    g = g * it->second;
  }
  return g;
}

std::vector<std::vector<Perm>> PermGroup::conjugacy_classes(
    uint64_t bound) const {
  auto elts = elements(bound);
  std::set<Perm> remaining(elts.begin(), elts.end());
  std::vector<std::vector<Perm>> out;
  while (!remaining.empty()) {
    Perm rep = *remaining.begin();
    std::set<Perm> cls = {rep};
    std::queue<Perm> q;
    q.push(rep);
    while (!q.empty()) {
      Perm x = q.front();
      q.pop();
      for (const Perm& g : gens_) {
        Perm y = conjugate(x, g);
        if (cls.insert(y).second) q.push(y);
      }
    }
    std::vector<Perm> v(cls.begin(), cls.end());
    for (const Perm& x : v) remaining.erase(x);
    out.push_back(std::move(v));
  }
  return out;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!commutes(gens_[i], gens_[j])) return false;
  return true;
}

bool PermGroup::is_p_group(uint64_t p) const {
  return order_ == int_p_part(order_, p);
}

uint64_t PermGroup::exponent(uint64_t bound) const {
  uint64_t e = 1;
  for (const auto& cls : conjugacy_classes(bound))
    e = std::lcm(e, cls.front().order());
  return e;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> orb = {point};
  std::set<int> seen = {point};
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_)
      if (seen.insert(g[orb[i]]).second) orb.push_back(g[orb[i]]);
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int p = 0; p < degree_; ++p) {
    if (seen.count(p)) continue;
    auto orb = orbit(p);
    seen.insert(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

// ---- constructions ----

PermGroup trivial_group(int degree) { return PermGroup(degree, {}); }

PermGroup cyclic_group(int n) {
  if (n == 1) return trivial_group(1);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm(img)});
}

PermGroup symmetric_group(int n) {
  if (n <= 1) return trivial_group(std::max(n, 1));
  std::vector<Perm> gens = {perm_from_cycles(n, {{1, 2}})};
  if (n > 2) {
    std::vector<int> cyc(n);
    for (int i = 1; i <= n; ++i) cyc[i - 1] = i;
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  return PermGroup(n, gens);
}

PermGroup alternating_group(int n) {
  if (n <= 2) return trivial_group(std::max(n, 1));
  std::vector<Perm> gens = {perm_from_cycles(n, {{1, 2, 3}})};
  if (n > 3) {
    std::vector<int> tail;
    if (n % 2 == 1) {
      for (int i = 1; i <= n; ++i) tail.push_back(i);
      gens.push_back(perm_from_cycles(n, {tail}));
    } else {
      for (int i = 3; i <= n; ++i) tail.push_back(i);
      gens.push_back(perm_from_cycles(n, {{1, 2}, tail}));
    }
  }
  return PermGroup(n, gens);
}

PermGroup dihedral_group(int n) {
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(rot), Perm(refl)});
}

PermGroup quaternion_group() {
  // Regular representation of Q8; verified by order 8 + unique involution +
  // nonabelian in the test suite.
  Perm x({1, 2, 3, 0, 7, 4, 5, 6});
  Perm y({4, 5, 6, 7, 2, 3, 0, 1});
  return PermGroup(8, {x, y});
}

PermGroup group_from_elements(int degree, const std::vector<Perm>& elems) {
  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Perm> gens;
  PermGroup g(degree, {});
  for (const Perm& e : sorted) {
    if (!g.contains(e)) {
      gens.push_back(e);
      g = PermGroup(degree, gens);
    }
  }
  return g;
}

PermGroup conjugate_group(const PermGroup& g, const Perm& c) {
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) gens.push_back(conjugate(s, c));
  return PermGroup(g.degree(), gens);
}

bool equal_groups(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.contains_group(b);
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  return g.contains_group(h);
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g)) throw NotASubgroup("normality test needs h <= g");
  for (const Perm& s : h.generators())
    for (const Perm& c : g.generators())
      if (!h.contains(conjugate(s, c))) return false;
  return true;
}

PermGroup centralizer(const PermGroup& g, const Perm& x, uint64_t bound) {
  std::vector<Perm> keep;
  for (const Perm& e : g.elements(bound))
    if (commutes(e, x)) keep.push_back(e);
  return group_from_elements(g.degree(), keep);
}

PermGroup centralizer_of_group(const PermGroup& g, const PermGroup& h,
                               uint64_t bound) {
  std::vector<Perm> keep;
  for (const Perm& e : g.elements(bound)) {
    bool ok = true;
    for (const Perm& s : h.generators()) ok = ok && commutes(e, s);
    if (ok) keep.push_back(e);
  }
  return group_from_elements(g.degree(), keep);
}

PermGroup center(const PermGroup& g, uint64_t bound) {
  return centralizer_of_group(g, g, bound);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, uint64_t bound) {
  std::vector<Perm> keep;
  for (const Perm& e : g.elements(bound)) {
    bool ok = true;
    for (const Perm& s : h.generators()) ok = ok && h.contains(conjugate(s, e));
    if (ok) keep.push_back(e);
  }
  return group_from_elements(g.degree(), keep);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       uint64_t bound) {
  if (a.degree() != b.degree())
    throw GroupMismatch("intersecting groups of different degree");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Perm> keep;
  for (const Perm& e : small.elements(bound))
    if (large.contains(e)) keep.push_back(e);
  return group_from_elements(a.degree(), keep);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw GroupMismatch("joining groups of different degree");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), gens);
}

PermGroup join_with(const PermGroup& a, const Perm& x) {
  std::vector<Perm> gens = a.generators();
  gens.push_back(x);
  return PermGroup(a.degree(), gens);
}

namespace {

// Closure of seed under conjugation by the generators of g.
PermGroup closure_under(const PermGroup& g, std::vector<Perm> gens) {
  std::vector<Perm> clean;
  for (const Perm& s : gens)
    if (!s.is_identity()) clean.push_back(s);
  PermGroup k(g.degree(), clean);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> cur = clean;
    for (const Perm& c : cur) {
      for (const Perm& s : g.generators()) {
        Perm t = conjugate(c, s);
        if (!k.contains(t)) {
          clean.push_back(t);
          k = PermGroup(g.degree(), clean);
          changed = true;
        }
      }
    }
  }
  return k;
}

}  // namespace

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed) {
  return closure_under(g, seed);
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators()) comms.push_back(commutator(a, b));
  return closure_under(g, comms);
}

bool is_subnormal(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g))
    throw NotASubgroup("subnormality test needs h <= g");
  PermGroup k = g;
  for (int step = 0; step < 64; ++step) {
    if (k.order() == h.order()) return true;
    PermGroup next = normal_closure(k, h.generators());
    if (next.order() == k.order()) return false;
    k = next;
  }
  throw Error("subnormal chain failed to stabilize");
}

namespace {

PermGroup sylow_ascend(const PermGroup& g, uint64_t p, PermGroup part,
                       uint64_t bound) {
  uint64_t target = int_p_part(g.order(), p);
  while (part.order() < target) {
    PermGroup n = normalizer(g, part, bound);
    bool grew = false;
    for (const Perm& z : n.elements(bound)) {
      if (part.contains(z)) continue;
      Perm w = p_part_decomposition(z, p).first;
      if (w.is_identity() || part.contains(w)) continue;
      while (!part.contains(w.pow(p))) w = w.pow(p);
      part = join_with(part, w);
      grew = true;
      break;
    }
    if (!grew) throw Error("sylow ascent stalled below the p-part");
  }
  return part;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, uint64_t p, uint64_t bound) {
  if (int_p_part(g.order(), p) == 1) return trivial_group(g.degree());
  Perm seed(g.degree());
  for (const Perm& e : g.elements(bound)) {
    if (e.order() % p == 0) {
      seed = p_part_decomposition(e, p).first;
      break;
    }
  }
  return sylow_ascend(g, p, PermGroup(g.degree(), {seed}), bound);
}

PermGroup sylow_containing(const PermGroup& g, uint64_t p, const Perm& x,
                           uint64_t bound) {
  if (!is_p_element(x, p)) throw NotAPElement("element is not a p-element");
  if (!g.contains(x)) throw NotAMember("element is outside the group");
  return sylow_ascend(g, p, PermGroup(g.degree(), {x}), bound);
}

uint64_t sylow_count_containing(const PermGroup& g, uint64_t p, const Perm& x,
                                uint64_t bound) {
  if (!is_p_element(x, p)) throw NotAPElement("element is not a p-element");
  PermGroup part = sylow_subgroup(g, p, bound);
  uint64_t hits = 0;
  for (const Perm& e : g.elements(bound))
    if (part.contains(conjugate(x, e.inverse()))) ++hits;
  return hits / normalizer(g, part, bound).order();
}

namespace {

// g lies in O_pi(G) iff its normal closure is a pi-group; class
// representatives suffice since conjugates share a closure.
PermGroup core_by_closures(const PermGroup& g, uint64_t p, bool want_p_group) {
  std::vector<Perm> gens;
  for (const auto& cls : g.conjugacy_classes()) {
    const Perm& rep = cls.front();
    uint64_t o = rep.order();
    bool p_elt = o == int_p_part(o, p);
    if (want_p_group != p_elt) continue;
    PermGroup ncl = normal_closure(g, {rep});
    uint64_t part = int_p_part(ncl.order(), p);
    bool pi = want_p_group ? ncl.order() == part : part == 1;
    if (pi) gens.push_back(rep);
  }
  // close up: the qualifying classes together form the core
  return normal_closure(g, gens);
}

}  // namespace

PermGroup p_core(const PermGroup& g, uint64_t p) {
  return core_by_closures(g, p, true);
}

PermGroup p_prime_core(const PermGroup& g, uint64_t p) {
  return core_by_closures(g, p, false);
}

PermGroup p_prime_residual(const PermGroup& g, uint64_t p) {
  return normal_closure(g, sylow_subgroup(g, p).generators());
}

PermGroup p_residual(const PermGroup& g, uint64_t p) {
  std::vector<Perm> gens;
  for (const auto& cls : g.conjugacy_classes())
    if (cls.front().order() % p != 0) gens.push_back(cls.front());
  return normal_closure(g, gens);
}

CoreSeries p_core_series(const PermGroup& g, uint64_t p) {
  CoreSeries out;
  PermGroup cur = trivial_group(g.degree());
  bool take_p_prime = true;
  while (true) {
    PermGroup next;
    if (cur.is_trivial()) {
      next = take_p_prime ? p_prime_core(g, p) : p_core(g, p);
    } else {
      CosetAction ca = coset_action(g, cur);
      PermGroup qcore = take_p_prime ? p_prime_core(ca.quotient, p)
                                     : p_core(ca.quotient, p);
      next = ca.preimage(qcore);
    }
    if (next.order() == cur.order()) {
      // neither core grows further; alternate once more before giving up
      take_p_prime = !take_p_prime;
      PermGroup retry;
      if (cur.is_trivial()) {
        retry = take_p_prime ? p_prime_core(g, p) : p_core(g, p);
      } else {
        CosetAction ca = coset_action(g, cur);
        PermGroup qcore = take_p_prime ? p_prime_core(ca.quotient, p)
                                       : p_core(ca.quotient, p);
        retry = ca.preimage(qcore);
      }
      if (retry.order() == cur.order()) break;
      next = retry;
    }
    if (!take_p_prime) ++out.p_length;
    out.terms.push_back(next);
    cur = next;
    take_p_prime = !take_p_prime;
    if (cur.order() == g.order()) break;
  }
  out.reaches_group = !out.terms.empty() && out.terms.back().order() == g.order();
  if (g.is_trivial()) out.reaches_group = true;
  return out;
}

bool is_p_solvable(const PermGroup& g, uint64_t p) {
  return p_core_series(g, p).reaches_group;
}

// ---- coset action ----

namespace {

Perm coset_key(const Perm& g, const std::vector<Perm>& n_elements) {
  Perm best = n_elements.front() * g;
  for (size_t i = 1; i < n_elements.size(); ++i) {
    Perm cand = n_elements[i] * g;
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

CosetAction coset_action(const PermGroup& g, const PermGroup& n,
                         uint64_t bound) {
  if (!is_subgroup(n, g))
    throw NotASubgroup("coset action needs n <= g");
  auto nelts = n.elements(bound);
  std::sort(nelts.begin(), nelts.end());
  CosetAction out;
  out.group_degree = g.degree();
  out.kernel_gens = n.generators();
  std::map<Perm, int> index;
  out.reps.push_back(nelts.front());  // identity coset, key = id
  index.emplace(out.reps[0], 0);
  for (size_t i = 0; i < out.reps.size(); ++i) {
    for (const Perm& s : g.generators()) {
      Perm key = coset_key(out.reps[i] * s, nelts);
      if (!index.count(key)) {
        index.emplace(key, (int)out.reps.size());
        out.reps.push_back(key);
      }
    }
  }
  int m = (int)out.reps.size();
  std::vector<Perm> qgens;
  for (const Perm& s : g.generators()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i)
      img[i] = index.at(coset_key(out.reps[i] * s, nelts));
    qgens.push_back(Perm(img));
  }
  out.quotient = PermGroup(m, qgens);
  return out;
}

Perm CosetAction::image(const Perm& g) const {
  // reps are lex-least coset keys, so key comparison identifies the coset
  std::map<Perm, int> index;
  for (size_t i = 0; i < reps.size(); ++i) index.emplace(reps[i], (int)i);
  PermGroup n(group_degree, kernel_gens);
  auto nelts = n.elements();
  std::sort(nelts.begin(), nelts.end());
  std::vector<int> img(reps.size());
  for (size_t i = 0; i < reps.size(); ++i)
    img[i] = index.at(coset_key(reps[i] * g, nelts));
  return Perm(img);
}

Perm CosetAction::lift(const Perm& q) const { return reps[q[0]]; }

PermGroup CosetAction::preimage(const PermGroup& s) const {
  std::vector<Perm> gens = kernel_gens;
  for (const Perm& q : s.generators()) gens.push_back(lift(q));
  return PermGroup(group_degree, gens);
}

// ---- products ----

Perm embed_left(const Perm& a, int right_degree) {
  std::vector<int> img(a.degree() + right_degree);
  for (int i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (int i = 0; i < right_degree; ++i) img[a.degree() + i] = a.degree() + i;
  return Perm(img);
}

Perm embed_right(const Perm& b, int left_degree) {
  std::vector<int> img(left_degree + b.degree());
  for (int i = 0; i < left_degree; ++i) img[i] = i;
  for (int i = 0; i < b.degree(); ++i) img[left_degree + i] = left_degree + b[i];
  return Perm(img);
}

Perm restrict_block(const Perm& g, int lo, int hi) {
  std::vector<int> img(hi - lo);
  for (int i = lo; i < hi; ++i) {
    if (g[i] < lo || g[i] >= hi)
      throw GroupMismatch("permutation does not preserve the block");
    img[i - lo] = g[i] - lo;
  }
  return Perm(img);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens;
  for (const Perm& s : a.generators()) gens.push_back(embed_left(s, b.degree()));
  for (const Perm& s : b.generators()) gens.push_back(embed_right(s, a.degree()));
  return PermGroup(a.degree() + b.degree(), gens);
}

PermGroup wreath_product(const PermGroup& base, const PermGroup& top) {
  int d = base.degree(), q = top.degree();
  std::vector<Perm> gens;
  for (int b = 0; b < q; ++b) {
    for (const Perm& s : base.generators()) {
      std::vector<int> img(d * q);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < d; ++i) img[b * d + i] = b * d + s[i];
      gens.push_back(Perm(img));
    }
  }
  for (const Perm& t : top.generators()) {
    std::vector<int> img(d * q);
    for (int b = 0; b < q; ++b)
      for (int i = 0; i < d; ++i) img[b * d + i] = t[b] * d + i;
    gens.push_back(Perm(img));
  }
  return PermGroup(d * q, gens);
}

// ---- subgroup enumeration ----

namespace {

std::vector<Perm> subgroup_key(const PermGroup& s) {
  auto e = s.elements();
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

std::vector<PermGroup> all_cyclic_subgroups(const PermGroup& g) {
  std::map<std::vector<Perm>, PermGroup> seen;
  for (const Perm& e : g.elements()) {
    PermGroup c(g.degree(), {e});
    seen.emplace(subgroup_key(c), c);
  }
  std::vector<PermGroup> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, uint64_t order_bound) {
  if (g.order() > order_bound)
    throw GroupTooLarge("subgroup lattice enumeration past bound");
  auto elts = g.elements();
  std::sort(elts.begin(), elts.end());
  std::map<std::vector<Perm>, PermGroup> seen;
  std::vector<PermGroup> queue = {trivial_group(g.degree())};
  seen.emplace(subgroup_key(queue[0]), queue[0]);
  for (size_t i = 0; i < queue.size(); ++i) {
    PermGroup s = queue[i];
    for (const Perm& e : elts) {
      if (s.contains(e)) continue;
      PermGroup t = join_with(s, e);
      auto key = subgroup_key(t);
      if (!seen.count(key)) {
        seen.emplace(key, t);
        queue.push_back(t);
      }
    }
  }
  std::vector<PermGroup> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  // Every normal subgroup is a join of normal closures of single classes,
  // so closing the class closures under join enumerates them all.
  std::map<std::vector<Perm>, PermGroup> seen;
  std::vector<PermGroup> queue = {trivial_group(g.degree())};
  seen.emplace(subgroup_key(queue[0]), queue[0]);
  std::vector<PermGroup> atoms;
  for (const auto& cls : g.conjugacy_classes()) {
    PermGroup cl = normal_closure(g, {cls.front()});
    auto key = subgroup_key(cl);
    if (!seen.count(key)) {
      seen.emplace(key, cl);
      queue.push_back(cl);
    }
    atoms.push_back(std::move(cl));
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    PermGroup s = queue[i];
    for (const PermGroup& a : atoms) {
      if (s.contains_group(a)) continue;
      PermGroup t = join(s, a);
      auto key = subgroup_key(t);
      if (!seen.count(key)) {
        seen.emplace(key, t);
        queue.push_back(t);
      }
    }
  }
  std::vector<PermGroup> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

}  // namespace subcorr
