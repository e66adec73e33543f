#include "singmod/plusspace.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "singmod/forms.hpp"

namespace singmod {

namespace {

bool isSquareMod(long x, long m) {
  x = positiveMod(x, m);
  for (long y = 0; y < m; ++y)
    if ((y * y) % m == x) return true;
  return false;
}

// Reduced row echelon form over the given columns; the same operations are
// applied to the full series. Returns pivot column -> row.
std::map<long, QSeries> echelon(std::vector<QSeries> rows, const std::vector<long>& cols) {
  std::map<long, QSeries> pivots;
  for (long col : cols) {
    size_t pick = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
      if (sgn(rows[i].coeff(col)) != 0) {
        pick = i;
        break;
      }
    if (pick == rows.size()) continue;
    QSeries piv = rows[pick] / rows[pick].coeff(col);
    rows.erase(rows.begin() + static_cast<long>(pick));
    for (auto& r : rows) {
      Rational c = r.coeff(col);
      if (sgn(c) != 0) r -= piv * c;
    }
    for (auto& [pc, r] : pivots) {
      Rational c = r.coeff(col);
      if (sgn(c) != 0) r -= piv * c;
    }
    pivots.emplace(col, std::move(piv));
  }
  return pivots;
}

bool cleanRow(const QSeries& row, long pivotCol, const std::vector<long>& cols) {
  for (long c : cols)
    if (c != pivotCol && sgn(row.coeff(c)) != 0) return false;
  return true;
}

void requireIntegral(const QSeries& s, const char* what) {
  if (!s.hasIntegerCoefficients()) throw std::runtime_error(std::string("non-integral basis element ") + what);
}

// Brackets [f, E_{12-2n}(4p tau)]_n / Delta(4p tau) for n = 1..4.
std::vector<QSeries> bracketForms(const QSeries& f, const Rational& weight, long p, long W) {
  long m = 4 * p;
  QSeries invDelta = deltaScaled(m, W + 2 * m).inverse();
  std::vector<QSeries> out;
  for (int n = 1; n <= 4; ++n) {
    int k = 12 - 2 * n;
    QSeries br = rankinCohen(f.truncated(W + m), weight, eisensteinScaled(k, m, W + m), k, n);
    out.push_back((br * invDelta).truncated(W));
  }
  return out;
}

struct Basis {
  long p = 0;
  long dmax = -1;
  long prec = 0;
  std::map<long, QSeries> forms;
};

std::vector<long> supportColumns(long lo, long hi, long p, int weight2) {
  std::vector<long> cols;
  for (long e = lo; e <= hi; ++e)
    if (inPlusSupport(e, p, weight2)) cols.push_back(e);
  return cols;
}

Basis buildF(long p, long dmax, long P) {
  long m = 4 * p;
  // Each enlargement round of the seed pool can lose m terms of precision.
  long W = P + dmax + 5 * m + 8;
  QSeries theta = standardForm(StandardForm::Theta, W);
  std::vector<long> targets;
  for (long d = 0; d < m && d <= std::max(dmax, m - 1); ++d)
    if (admissibleF(d, p)) targets.push_back(d);
  std::vector<QSeries> pool{theta};
  for (auto& b : bracketForms(theta, Rational(1, 2), p, W)) pool.push_back(b);
  std::map<long, QSeries> seeds;
  for (int round = 0; round < 4; ++round) {
    long lo = 0;
    for (const auto& r : pool)
      if (r.valuationNum()) lo = std::min(lo, *r.valuationNum());
    std::vector<long> cols = supportColumns(lo, 0, p, 1);
    auto piv = echelon(pool, cols);
    seeds.clear();
    for (long d : targets) {
      auto it = piv.find(-d);
      if (it != piv.end() && cleanRow(it->second, -d, cols)) seeds.emplace(d, it->second);
    }
    if (seeds.size() == targets.size()) break;
    // Enlarge the pool with brackets and j(4p tau)-multiples of the forms found so far.
    QSeries jm = jScaled(m, W + m);
    std::vector<QSeries> extra;
    for (const auto& [col, r] : piv) {
      if (col == 0) continue;
      for (auto& b : bracketForms(r, Rational(1, 2), p, W)) extra.push_back(b);
      extra.push_back((r * jm).truncated(W));
    }
    for (auto& e : extra) pool.push_back(std::move(e));
    for (const auto& [col, r] : piv) pool.push_back(r);
  }
  if (seeds.size() != targets.size()) throw std::runtime_error("seed construction failed");
  Basis B;
  B.p = p;
  B.dmax = dmax;
  for (auto& [d, s] : seeds) {
    requireIntegral(s, "f");
    B.forms.emplace(d, s);
  }
  QSeries jm = jScaled(m, W + m);
  for (long d = m; d <= dmax; ++d) {
    if (!admissibleF(d, p)) continue;
    QSeries f = B.forms.at(d - m) * jm;
    for (long dp = d - 1; dp >= 0; --dp) {
      if (!admissibleF(dp, p)) continue;
      Rational c = f.coeff(-dp);
      if (sgn(c) != 0) f -= B.forms.at(dp) * c;
    }
    requireIntegral(f, "f");
    B.forms.emplace(d, std::move(f));
  }
  B.prec = W;
  for (const auto& [d, f] : B.forms) B.prec = std::min(B.prec, f.precNum());
  if (B.prec < P) throw std::logic_error("basis precision shortfall");
  return B;
}

Basis buildG(long Dmax, long P) {
  const long m = 4;
  long W = P + Dmax + m + 8;
  QSeries th1 = standardForm(StandardForm::Theta1, 4 * W + 8);
  QSeries g1 = th1 * eisensteinScaled(4, m, 4 * W + 8) * etaQuotient({{4, -6}}, 4 * W + 8);
  g1 = g1.truncated(4 * W);
  HalfIntForm g1f = HalfIntForm::fromSeries(g1, FormKind::G, 1, 1, 3);
  QSeries t4 = heckeTm2(g1f, 2).toSeries();
  g1 = g1.truncated(W);
  std::vector<long> cols = supportColumns(-4, -1, 1, 3);
  auto piv = echelon({g1, t4.truncated(W)}, cols);
  Basis B;
  B.p = 1;
  B.dmax = Dmax;
  for (long D : {1L, 4L}) {
    auto it = piv.find(-D);
    if (it == piv.end() || !cleanRow(it->second, -D, cols)) throw std::runtime_error("seed construction failed");
    requireIntegral(it->second, "g");
    B.forms.emplace(D, it->second);
  }
  QSeries jm = jScaled(m, W + m);
  for (long D = 5; D <= Dmax; ++D) {
    if (!admissibleG(D, 1)) continue;
    QSeries g = B.forms.at(D - m) * jm;
    for (long Dp = D - 1; Dp >= 1; --Dp) {
      if (!admissibleG(Dp, 1)) continue;
      Rational c = g.coeff(-Dp);
      if (sgn(c) != 0) g -= B.forms.at(Dp) * c;
    }
    requireIntegral(g, "g");
    B.forms.emplace(D, std::move(g));
  }
  B.prec = W;
  for (const auto& [D, g] : B.forms) B.prec = std::min(B.prec, g.precNum());
  if (B.prec < P) throw std::logic_error("basis precision shortfall");
  return B;
}

std::mutex& cacheMutex() {
  static std::mutex mu;
  return mu;
}

QSeries cachedForm(FormKind kind, long p, long index, long prec) {
  static std::map<std::pair<int, long>, Basis> cache;
  std::lock_guard<std::mutex> lock(cacheMutex());
  auto key = std::make_pair(static_cast<int>(kind), p);
  auto it = cache.find(key);
  if (it == cache.end() || it->second.dmax < index || it->second.prec < prec) {
    long dmax = index, P = prec;
    if (it != cache.end()) {
      dmax = std::max(dmax, it->second.dmax);
      P = std::max(P, it->second.prec);
    }
    Basis b = kind == FormKind::F ? buildF(p, dmax, P) : buildG(dmax, P);
    cache[key] = std::move(b);
    it = cache.find(key);
  }
  return it->second.forms.at(index);
}

}  // namespace

std::string kindName(FormKind k) { return k == FormKind::F ? "f" : "g"; }

bool inPlusSupport(long exponent, long p, int weight2) {
  return weight2 == 1 ? isSquareMod(exponent, 4 * p) : isSquareMod(-exponent, 4 * p);
}

bool admissibleF(long d, long p) { return d >= 0 && isSquareMod(-d, 4 * p); }
bool admissibleG(long D, long p) { return D >= 1 && isSquareMod(D, 4 * p); }

Integer HalfIntForm::coeff(long n) const {
  if (n >= prec) throw std::out_of_range("coefficient beyond series precision");
  auto it = coeffs.find(n);
  return it == coeffs.end() ? Integer(0) : it->second;
}

QSeries HalfIntForm::toSeries() const {
  std::map<long, Rational> t;
  for (const auto& [e, v] : coeffs) t.emplace(e, Rational(v));
  return QSeries::fromTerms(t, prec);
}

HalfIntForm HalfIntForm::fromSeries(const QSeries& s, FormKind kind, long index, long p, int weight2) {
  QSeries q = s.simplified();
  if (q.denom() != 1) throw std::domain_error("plus-space forms have integral exponents");
  HalfIntForm f;
  f.kind = kind;
  f.index = index;
  f.p = p;
  f.weight2 = weight2;
  f.prec = q.precNum();
  for (const auto& [e, v] : q.terms()) {
    if (v.get_den() != 1) throw std::domain_error("non-integral coefficient");
    f.coeffs.emplace(e, v.get_num());
  }
  return f;
}

bool HalfIntForm::supportOk() const {
  for (const auto& [e, v] : coeffs)
    if (!inPlusSupport(e, p, weight2)) return false;
  return true;
}

HalfIntForm basisF(long d, long prec) {
  if (!admissibleF(d, 1)) throw std::domain_error("index not in plus-space support");
  return HalfIntForm::fromSeries(cachedForm(FormKind::F, 1, d, prec).truncated(prec), FormKind::F, d, 1, 1);
}

HalfIntForm basisFLevelP(long p, long d, long prec) {
  if (p == 1) return basisF(d, prec);
  if (!isPrime(p)) throw std::domain_error("level parameter must be prime");
  if (!admissibleF(d, p)) throw std::domain_error("index not in plus-space support");
  return HalfIntForm::fromSeries(cachedForm(FormKind::F, p, d, prec).truncated(prec), FormKind::F, d, p, 1);
}

HalfIntForm basisG(long D, long prec) {
  if (!admissibleG(D, 1)) throw std::domain_error("index not in plus-space support");
  return HalfIntForm::fromSeries(cachedForm(FormKind::G, 1, D, prec).truncated(prec), FormKind::G, D, 1, 3);
}

Integer coeffA(long p, long D, long d) { return basisFLevelP(p, d, D + 1).coeff(D); }

Integer coeffB(long D, long d) { return basisG(D, std::max(d + 1, 1L)).coeff(d); }

namespace {

// One application of T(l^2) for a prime l.
HalfIntForm heckePrime(const HalfIntForm& f, long l) {
  long l2 = l * l;
  HalfIntForm g = f;
  g.coeffs.clear();
  g.prec = -floorDiv(-f.prec, l2);
  long lo = f.coeffs.empty() ? 0 : f.coeffs.begin()->first;
  long start = std::min(floorDiv(lo, l2), lo * l2);
  if (f.coeffs.empty()) return g;
  int k = (f.weight2 - 1) / 2;
  for (long n = std::min(start, lo); n < g.prec; ++n) {
    if (!inPlusSupport(n, f.p, f.weight2)) continue;
    Integer v = 0;
    long sgnK = k % 2 == 0 ? 1 : -1;
    int chi = kronecker(sgnK * n, l);
    auto a = [&](long e) -> Integer {
      auto it = f.coeffs.find(e);
      return it == f.coeffs.end() ? Integer(0) : it->second;
    };
    if (k == 0) {
      v = l * a(l2 * n) + chi * a(n);
      if (n % l2 == 0) v += a(n / l2);
    } else {
      v = a(l2 * n) + chi * a(n);
      if (n % l2 == 0) v += l * a(n / l2);
    }
    if (sgn(v) != 0) g.coeffs.emplace(n, v);
  }
  return g;
}

HalfIntForm linear(const HalfIntForm& a, const HalfIntForm& b, long cb) {
  HalfIntForm r = a;
  r.prec = std::min(a.prec, b.prec);
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
    it = it->first >= r.prec ? r.coeffs.erase(it) : std::next(it);
  for (const auto& [e, v] : b.coeffs) {
    if (e >= r.prec) continue;
    r.coeffs[e] += cb * v;
    if (sgn(r.coeffs[e]) == 0) r.coeffs.erase(e);
  }
  return r;
}

}  // namespace

HalfIntForm heckeTm2(const HalfIntForm& f, long m) {
  if (m < 1) throw std::domain_error("m must be positive");
  HalfIntForm cur = f;
  for (auto [l, s] : factorize(m)) {
    // T(l^{2j}) = T(l^{2(j-1)}) T(l^2) - l T(l^{2(j-2)})
    HalfIntForm prev2 = cur;
    HalfIntForm prev1 = heckePrime(cur, l);
    for (int j = 2; j <= s; ++j) {
      HalfIntForm next = linear(heckePrime(prev1, l), prev2, -l);
      prev2 = prev1;
      prev1 = next;
    }
    cur = prev1;
  }
  return cur;
}

RecurrenceResult recurrenceCheckB(long n) {
  HalfIntForm g1 = basisG(1, 4 * n + 1);
  auto B = [&](long e) -> Integer {
    if (e < -1) return 0;
    return g1.coeff(e);
  };
  RecurrenceResult r;
  r.b4nm1 = B(4 * n - 1);
  r.b4n = B(4 * n);
  r.rhs4nm1 = 240 * divisorSigma(n, 3);
  r.rhs4n = 0;
  long rmax = isqrt(4 * n + 1);
  for (long x = 2; x <= rmax; ++x) r.rhs4nm1 -= x * x * B(4 * n - x * x);
  for (long x = 1; x <= rmax; ++x) r.rhs4n += B(4 * n - x * x);
  r.rhs4n *= -2;
  r.ok = r.b4nm1 == r.rhs4nm1 && r.b4n == r.rhs4n;
  return r;
}

}  // namespace singmod
