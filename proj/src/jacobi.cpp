#include "singmod/jacobi.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "singmod/forms.hpp"

namespace singmod {

namespace {

// Laurent polynomial in zeta with integer coefficients.
struct LP {
  long lo = 0;
  std::vector<Integer> c;

  bool empty() const { return c.empty(); }
  long hi() const { return lo + static_cast<long>(c.size()); }
  void trim() {
    size_t a = 0;
    while (a < c.size() && sgn(c[a]) == 0) ++a;
    size_t b = c.size();
    while (b > a && sgn(c[b - 1]) == 0) --b;
    if (a == b) {
      c.clear();
      lo = 0;
      return;
    }
    c = std::vector<Integer>(c.begin() + static_cast<long>(a), c.begin() + static_cast<long>(b));
    lo += static_cast<long>(a);
  }
  void widen(long l, long h) {
    if (c.empty()) {
      lo = l;
      c.assign(static_cast<size_t>(h - l), 0);
      return;
    }
    long nl = std::min(lo, l), nh = std::max(hi(), h);
    if (nl == lo && nh == hi()) return;
    std::vector<Integer> n(static_cast<size_t>(nh - nl), 0);
    for (size_t i = 0; i < c.size(); ++i) n[static_cast<size_t>(lo - nl) + i] = c[i];
    c.swap(n);
    lo = nl;
  }
};

void addMul(LP& acc, const LP& x, const LP& y) {
  if (x.empty() || y.empty()) return;
  acc.widen(x.lo + y.lo, x.hi() + y.hi() - 1);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (sgn(x.c[i]) == 0) continue;
    size_t off = static_cast<size_t>(x.lo + y.lo - acc.lo) + i;
    for (size_t j = 0; j < y.c.size(); ++j) acc.c[off + j] += x.c[i] * y.c[j];
  }
}

void addScaled(LP& acc, const LP& x, const Integer& k) {
  if (x.empty() || sgn(k) == 0) return;
  acc.widen(x.lo, x.hi());
  size_t off = static_cast<size_t>(x.lo - acc.lo);
  for (size_t j = 0; j < x.c.size(); ++j) acc.c[off + j] += k * x.c[j];
}

LP laurent(std::initializer_list<std::pair<long, long>> terms) {
  LP p;
  for (auto [e, v] : terms) {
    p.widen(e, e + 1);
    p.c[static_cast<size_t>(e - p.lo)] += v;
  }
  return p;
}

// Integer Jacobi expansion, slices n = nmin .. precN-1.
struct IJ {
  long nmin = 0;
  long precN = 0;
  std::vector<LP> s;

  LP& at(long n) { return s[static_cast<size_t>(n - nmin)]; }
  const LP& at(long n) const { return s[static_cast<size_t>(n - nmin)]; }
  static IJ zero(long nmin, long precN) {
    IJ r;
    r.nmin = nmin;
    r.precN = std::max(precN, nmin);
    r.s.resize(static_cast<size_t>(r.precN - nmin));
    return r;
  }
  void trim() {
    for (auto& l : s) l.trim();
  }
};

IJ mul(const IJ& x, const IJ& y) {
  IJ r = IJ::zero(x.nmin + y.nmin, std::min(x.precN + y.nmin, y.precN + x.nmin));
  for (long n = r.nmin; n < r.precN; ++n)
    for (long i = x.nmin; i < x.precN && n - i >= y.nmin; ++i)
      if (n - i < y.precN) addMul(r.at(n), x.at(i), y.at(n - i));
  r.trim();
  return r;
}

// Multiply by an integral q-series (integral exponents).
IJ scaleBy(const IJ& x, const QSeries& f) {
  QSeries g = f.simplified();
  if (g.denom() != 1) throw std::domain_error("Jacobi scaling needs integral exponents");
  auto v = g.valuationNum();
  if (!v) return IJ::zero(x.nmin, std::min(x.precN, g.precNum() + x.nmin));
  long fv = *v;
  long prec = g.isExact() ? QSeries::kExact : g.precNum();
  IJ r = IJ::zero(x.nmin + fv, std::min(x.precN + fv, prec + x.nmin));
  for (long n = r.nmin; n < r.precN; ++n)
    for (long k = fv; n - k >= x.nmin && k < prec; ++k) {
      if (n - k >= x.precN) continue;
      Rational c = g.coeff(k);
      if (sgn(c) == 0) continue;
      if (c.get_den() != 1) throw std::domain_error("Jacobi scaling needs integral coefficients");
      addScaled(r.at(n), x.at(n - k), c.get_num());
    }
  r.trim();
  return r;
}

IJ truncate(const IJ& x, long precN) {
  if (precN >= x.precN) return x;
  IJ r = x;
  r.precN = std::max(precN, x.nmin);
  r.s.resize(static_cast<size_t>(r.precN - r.nmin));
  return r;
}

struct Gens {
  IJ a, b;
};

Gens rawGenerators(long precN) {
  // P = prod (1 - q^n zeta)^2 (1 - q^n zeta^-1)^2 / (1 - q^n)^4
  IJ P = IJ::zero(0, precN);
  P.at(0) = laurent({{0, 1}});
  LP zz = laurent({{-1, -1}, {1, -1}});
  for (long n = 1; n < precN; ++n)
    for (int rep = 0; rep < 2; ++rep)
      for (long k = precN - 1; k >= n; --k) {
        LP add;
        addMul(add, zz, P.at(k - n));
        if (k >= 2 * n) addScaled(add, P.at(k - 2 * n), 1);
        addScaled(P.at(k), add, 1);
      }
  P.trim();
  P = scaleBy(P, eulerProduct(precN).pow(4).inverse());

  LP base = laurent({{-1, 1}, {0, -2}, {1, 1}});
  IJ a = IJ::zero(0, P.precN);
  for (long n = 0; n < P.precN; ++n) addMul(a.at(n), base, P.at(n));
  a.trim();

  // S = sum_n sum_{d | n} d (zeta^d - 2 + zeta^-d) q^n
  IJ S = IJ::zero(0, precN);
  for (long n = 1; n < precN; ++n)
    for (long d : divisors(n)) addScaled(S.at(n), laurent({{-d, 1}, {0, -2}, {d, 1}}), d);
  S.trim();

  IJ b = a;
  IJ Sa = mul(S, a);
  for (long n = 0; n < b.precN; ++n) {
    addScaled(b.at(n), P.at(n), 12);
    addScaled(b.at(n), Sa.at(n), 12);
  }
  b.trim();
  return {a, b};
}

const Gens& cachedGenerators(long precN) {
  static std::mutex mu;
  static std::map<long, Gens> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.lower_bound(precN);
  if (it != cache.end()) return it->second;
  return cache.emplace(precN, rawGenerators(precN)).first->second;
}

IJ genA(long precN) { return truncate(cachedGenerators(precN).a, precN); }
IJ genB(long precN) { return truncate(cachedGenerators(precN).b, precN); }

JacobiSeries fromIJ(const IJ& x, const Integer& den, int weight, long index) {
  JacobiSeries r;
  r.weight = weight;
  r.index = index;
  r.precN = x.precN;
  for (long n = x.nmin; n < x.precN; ++n) {
    const LP& l = x.at(n);
    for (size_t i = 0; i < l.c.size(); ++i)
      if (sgn(l.c[i]) != 0) r.slices[n][l.lo + static_cast<long>(i)] = Rational(l.c[i], den);
  }
  for (auto& [n, sl] : r.slices)
    for (auto& [k, v] : sl) v.canonicalize();
  return r;
}

std::pair<IJ, Integer> toIJ(const JacobiSeries& x) {
  Integer den = 1;
  long nmin = x.precN;
  for (const auto& [n, sl] : x.slices) {
    if (!sl.empty()) nmin = std::min(nmin, n);
    for (const auto& [r, v] : sl) den = lcm(den, Integer(v.get_den()));
  }
  IJ r = IJ::zero(nmin, x.precN);
  for (const auto& [n, sl] : x.slices) {
    if (n >= x.precN) continue;
    for (const auto& [k, v] : sl) {
      Integer c = v.get_num() * (den / v.get_den());
      r.at(n).widen(k, k + 1);
      r.at(n).c[static_cast<size_t>(k - r.at(n).lo)] += c;
    }
  }
  return {r, den};
}

std::vector<std::pair<long, long>> eisensteinExponents(long k) {
  std::vector<std::pair<long, long>> out;
  for (long j = 0; 6 * j <= k; ++j)
    if ((k - 6 * j) % 4 == 0) out.emplace_back((k - 6 * j) / 4, j);
  return out;
}

std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> m, size_t cols, std::vector<size_t>& pivots) {
  size_t row = 0;
  pivots.clear();
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pick = row;
    while (pick < m.size() && sgn(m[pick][col]) == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return m;
}

long ansatzPrec(long precN) { return std::max(precN, 2L); }

}  // namespace

Rational JacobiSeries::coeff(long n, long r) const {
  if (n >= precN) throw std::out_of_range("coefficient beyond series precision");
  auto it = slices.find(n);
  if (it == slices.end()) return 0;
  auto jt = it->second.find(r);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

long JacobiSeries::minDisc() const {
  long best = 0;
  bool any = false;
  for (const auto& [n, sl] : slices)
    for (const auto& [r, v] : sl) {
      long d = 4 * index * n - r * r;
      if (!any || d < best) best = d;
      any = true;
    }
  return best;
}

bool JacobiSeries::singleValued() const {
  long m2 = 2 * index;
  std::map<std::pair<long, long>, Rational> seen;
  auto check = [&](long disc, long cls, const Rational& v) {
    auto [it, fresh] = seen.emplace(std::make_pair(disc, cls), v);
    return fresh || it->second == v;
  };
  // Every (disc, class) pair reachable with n < precN is either stored or zero.
  for (long n = slices.empty() ? 0 : std::min(0L, slices.begin()->first); n < precN; ++n) {
    auto it = slices.find(n);
    long rmax = 0;
    if (it != slices.end() && !it->second.empty())
      rmax = std::max(std::abs(it->second.begin()->first), std::abs(it->second.rbegin()->first));
    for (long r = -rmax; r <= rmax; ++r) {
      Rational v = coeff(n, r);
      if (v != coeff(n, -r)) return false;
      if (!check(4 * index * n - r * r, positiveMod(r, m2), v)) return false;
    }
  }
  // Zero cells outside the stored r-range must agree too.
  for (const auto& [key, v] : seen) {
    if (sgn(v) == 0) continue;
    long disc = key.first;
    for (long r = key.second; ; r += m2) {
      long num = disc + r * r;
      if (num % (4 * index) != 0) break;
      long n = num / (4 * index);
      if (n >= precN) break;
      if (coeff(n, r) != v) return false;
    }
  }
  return true;
}

bool JacobiSeries::operator==(const JacobiSeries& o) const {
  if (weight != o.weight || index != o.index || precN != o.precN) return false;
  auto strip = [](const JacobiSeries& x) {
    std::map<std::pair<long, long>, Rational> m;
    for (const auto& [n, sl] : x.slices)
      for (const auto& [r, v] : sl)
        if (sgn(v) != 0) m.emplace(std::make_pair(n, r), v);
    return m;
  };
  return strip(*this) == strip(o);
}

std::pair<JacobiSeries, JacobiSeries> generators(long precN) {
  if (precN < 2) throw std::domain_error("generators need precN >= 2");
  return {fromIJ(genA(precN), 1, -2, 1), fromIJ(genB(precN), 1, 0, 1)};
}

JacobiSeries jacobiMul(const JacobiSeries& x, const JacobiSeries& y) {
  auto [a, da] = toIJ(x);
  auto [b, db] = toIJ(y);
  return fromIJ(mul(a, b), da * db, x.weight + y.weight, x.index + y.index);
}

JacobiSeries jacobiScale(const JacobiSeries& x, const QSeries& s, int sWeight) {
  auto [a, da] = toIJ(x);
  QSeries g = s.simplified();
  Integer ds = 1;
  for (const auto& [e, v] : g.terms()) ds = lcm(ds, Integer(v.get_den()));
  return fromIJ(scaleBy(a, g * Rational(ds)), da * ds, x.weight + sWeight, x.index);
}

JacobiSeries jacobiAdd(const JacobiSeries& x, const JacobiSeries& y, const Rational& cy) {
  if (x.index != y.index || x.weight != y.weight) throw std::domain_error("incompatible Jacobi forms");
  JacobiSeries r = x;
  r.precN = std::min(x.precN, y.precN);
  for (auto it = r.slices.begin(); it != r.slices.end();)
    it = it->first >= r.precN ? r.slices.erase(it) : std::next(it);
  for (const auto& [n, sl] : y.slices) {
    if (n >= r.precN) continue;
    for (const auto& [k, v] : sl) {
      Rational& t = r.slices[n][k];
      t += cy * v;
      if (sgn(t) == 0) r.slices[n].erase(k);
    }
  }
  return r;
}

Rational ansatzConstant(long p, long nu) {
  if (nu < 1 || nu > p) return 0;
  Rational v(binomial(Integer(p - 1), nu - 1));
  for (long i = 1; i < p; ++i) v /= 12;
  return (nu - 1) % 2 == 0 ? v : Rational(-v);
}

PhiSolution solvePhiDetailed(long D, long p, long precN) {
  if (p != 1 && p != 2 && p != 3 && p != 5) throw std::domain_error("level parameter must be 1, 2, 3 or 5");
  if (!admissibleG(D, p)) throw std::domain_error("admissibility/ansatz error");
  long P = ansatzPrec(precN);
  long nMax = D / (4 * p) + 4;
  for (long N = 0; N <= nMax; ++N) {
    long W = P + N;
    IJ A = genA(W), B = genB(W);
    QSeries e4 = eisenstein(4, W + 1), e6 = eisenstein(6, W + 1);
    QSeries dinv = standardForm(StandardForm::Delta, W + N + 2).inverse().pow(N).truncated(P);

    struct Col {
      long nu;
      IJ cell;
      Rational c0;
    };
    std::vector<Col> cols;
    for (long nu = 0; nu <= p; ++nu) {
      IJ mono = IJ::zero(0, W);
      mono.at(0) = laurent({{0, 1}});
      for (long i = 0; i < nu; ++i) mono = mul(mono, A);
      for (long i = nu; i < p; ++i) mono = mul(mono, B);
      for (auto [i, j] : eisensteinExponents(2 * nu + 2 + 12 * N)) {
        QSeries f = (e4.pow(i) * e6.pow(j)).truncated(W + 1) * dinv;
        f = f.truncated(P);
        cols.push_back({nu, scaleBy(mono, f), f.coeff(0)});
      }
    }
    if (cols.empty()) continue;

    // Constraint cells: n <= 1 with negative discriminant.
    std::set<std::pair<long, long>> cells;
    for (const auto& c : cols)
      for (long n = c.cell.nmin; n <= 1 && n < c.cell.precN; ++n) {
        const LP& l = c.cell.at(n);
        for (long r = l.lo; r < l.hi(); ++r)
          if (4 * p * n - r * r < 0) cells.emplace(n, r);
      }
    bool targetSeen = false;
    std::vector<std::vector<Rational>> rows;
    for (auto [n, r] : cells) {
      std::vector<Rational> row(cols.size() + 1);
      for (size_t k = 0; k < cols.size(); ++k) {
        const IJ& x = cols[k].cell;
        if (n < x.nmin) continue;
        const LP& l = x.at(n);
        if (r >= l.lo && r < l.hi()) row[k] = l.c[static_cast<size_t>(r - l.lo)];
      }
      bool target = 4 * p * n - r * r == -D;
      targetSeen |= target;
      row.back() = target ? 1 : 0;
      rows.push_back(std::move(row));
    }
    if (!targetSeen) continue;
    std::vector<size_t> piv;
    auto red = rref(rows, cols.size() + 1, piv);
    if (!piv.empty() && piv.back() == cols.size()) continue;
    if (piv.size() != cols.size()) throw std::runtime_error("admissibility/ansatz error");

    PhiSolution sol;
    sol.deltaPower = N;
    sol.fConst.assign(static_cast<size_t>(p + 1), Rational(0));
    std::vector<Rational> x(cols.size());
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red[i].back();
    Integer den = 1;
    for (const auto& v : x) den = lcm(den, Integer(v.get_den()));
    IJ acc = IJ::zero(-N, precN);
    for (size_t k = 0; k < cols.size(); ++k) {
      sol.fConst[static_cast<size_t>(cols[k].nu)] += x[k] * cols[k].c0;
      if (sgn(x[k]) == 0) continue;
      Integer w = x[k].get_num() * (den / x[k].get_den());
      for (long n = std::max(-N, cols[k].cell.nmin); n < precN; ++n) addScaled(acc.at(n), cols[k].cell.at(n), w);
    }
    acc.trim();
    sol.phi = fromIJ(acc, den, 2, p);
    return sol;
  }
  throw std::runtime_error("admissibility/ansatz error");
}

JacobiSeries solvePhi(long D, long p, long precN) { return solvePhiDetailed(D, p, precN).phi; }

JacobiSeries vOperator(const JacobiSeries& phi, long p) {
  if (phi.index != 1) throw std::domain_error("V_p defined here only from index 1");
  if (!isPrime(p)) throw std::domain_error("level parameter must be prime");
  JacobiSeries r;
  r.weight = phi.weight;
  r.index = p;
  r.precN = -floorDiv(-phi.precN, p);
  long nmin = phi.slices.empty() ? 0 : phi.slices.begin()->first;
  for (long n = std::min(0L, floorDiv(nmin, p)); n < r.precN; ++n) {
    long rmax = -1;
    auto widen = [&](long nn, long factor) {
      auto it = phi.slices.find(nn);
      if (it == phi.slices.end() || it->second.empty()) return;
      rmax = std::max({rmax, factor * std::abs(it->second.begin()->first), factor * std::abs(it->second.rbegin()->first)});
    };
    widen(n * p, 1);
    if (n % p == 0) widen(n / p, p);
    for (long k = -rmax; k <= rmax; ++k) {
      Rational v = phi.coeff(n * p, k);
      if (n % p == 0 && k % p == 0) v += p * phi.coeff(n / p, k / p);
      if (sgn(v) != 0) r.slices[n][k] = v;
    }
  }
  return r;
}

HalfIntForm toPlusspace(const JacobiSeries& phi) {
  if (!phi.singleValued()) throw std::domain_error("not a Jacobi form of this index");
  long m = phi.index;
  std::map<long, Rational> t;
  for (const auto& [n, sl] : phi.slices)
    for (const auto& [r, v] : sl)
      if (sgn(v) != 0) t[4 * m * n - r * r] = v;
  long prec = 4 * m * phi.precN - m * m;
  for (auto it = t.begin(); it != t.end();)
    it = it->first >= prec ? t.erase(it) : std::next(it);
  long index = t.empty() ? 0 : -t.begin()->first;
  return HalfIntForm::fromSeries(QSeries::fromTerms(t, prec), FormKind::G, index, m, 3);
}

JacobiSeries fromPlusspace(const HalfIntForm& g, long precN) {
  long m = g.p;
  JacobiSeries r;
  r.weight = 2;
  r.index = m;
  r.precN = precN;
  long lo = g.coeffs.empty() ? 0 : g.coeffs.begin()->first;
  for (long n = floorDiv(lo, 4 * m); n < precN; ++n) {
    long rmax = isqrt(std::max(0L, 4 * m * n - lo));
    for (long k = -rmax; k <= rmax; ++k) {
      long d = 4 * m * n - k * k;
      if (d >= g.prec) throw std::domain_error("plus-space form too short for requested precision");
      Integer v = g.coeff(d);
      if (sgn(v) != 0) r.slices[n][k] = Rational(v);
    }
  }
  return r;
}

JacobiSeries heckeJacobi(const JacobiSeries& phi, long m) {
  HalfIntForm g = heckeTm2(toPlusspace(phi), m);
  long precN = (g.prec + phi.index * phi.index) / (4 * phi.index);
  while (precN > 0 && 4 * phi.index * precN - phi.index * phi.index > g.prec) --precN;
  return fromPlusspace(g, precN);
}

HalfIntForm basisGLevelP(long p, long D, long prec) {
  if (p == 1) return basisG(D, prec);
  static std::mutex mu;
  static std::map<std::pair<long, long>, HalfIntForm> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, D});
    if (it != cache.end() && it->second.prec >= prec) {
      HalfIntForm f = it->second;
      for (auto jt = f.coeffs.begin(); jt != f.coeffs.end();)
        jt = jt->first >= prec ? f.coeffs.erase(jt) : std::next(jt);
      f.prec = prec;
      return f;
    }
  }
  long precN = (prec + p * p) / (4 * p) + 1;
  HalfIntForm g = toPlusspace(solvePhi(D, p, precN));
  g.index = D;
  {
    std::lock_guard<std::mutex> lock(mu);
    cache[{p, D}] = g;
  }
  return basisGLevelP(p, D, prec);
}

Integer coeffBLevelP(long p, long D, long d) { return basisGLevelP(p, D, std::max(d + 1, 1L)).coeff(d); }

}  // namespace singmod
