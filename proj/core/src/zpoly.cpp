#include "realeig/detail/zpoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace realeig::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = content(p);
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_primitive(const UniPoly& p) {
  const auto& cs = p.coefficients();
  Integer l = 1;
  for (const auto& c : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Integer t = l / cs[i].get_den();
    out[i] = cs[i].get_num() * t;
  }
  make_primitive(out);
  return out;
}

UniPoly to_unipoly(const ZPoly& p) {
  std::vector<Rational> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rational(p[i]);
  return UniPoly(std::move(v));
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  return d;
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo remainder by zero");
  trim(a);
  int db = degree(b);
  if (degree(a) < db) return a;
  int delta = degree(a) - db + 1;
  const Integer& lc = b.back();
  while (!a.empty() && degree(a) >= db) {
    Integer t = a.back();
    int shift = degree(a) - db;
    for (auto& c : a) c *= lc;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= t * b[static_cast<std::size_t>(j)];
    trim(a);
    --delta;
  }
  if (delta > 0 && !a.empty()) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta));
    for (auto& c : a) c *= f;
  }
  return a;
}

int sign_at(const ZPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer pw = 1;
  for (int i = degree(p) - 1; i >= 0; --i) {
    pw *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), p[static_cast<std::size_t>(i)].get_mpz_t(), pw.get_mpz_t());
  }
  return sgn(acc);
}

int sign_at(const ZPoly& p, const Rational& x) { return sign_at(p, x.get_num(), x.get_den()); }

int sign_at_infinity(const ZPoly& p, bool at_plus) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (!at_plus && degree(p) % 2 == 1) s = -s;
  return s;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::vector<u64> reduce_mod(const ZPoly& a, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  std::vector<u64> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  return out;
}

void trim_mod(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd(a, b) over Z/p, assuming both are nonzero mod p.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), inv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when a and b are certainly coprime: some prime keeps both leading
// coefficients and the gcd modulo it is constant.
bool coprime_by_reduction(const ZPoly& a, const ZPoly& b) {
  for (u64 p : {2305843009213693951ULL, 4611686018427387847ULL, 1000000007ULL}) {
    auto am = reduce_mod(a, p);
    auto bm = reduce_mod(b, p);
    if (am.back() == 0 || bm.back() == 0) continue;
    return gcd_degree_mod(std::move(am), std::move(bm), p) == 0;
  }
  return false;
}

}  // namespace

ZPoly gcd(ZPoly a, ZPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.empty() && b.empty()) throw std::domain_error("gcd of two zero polynomials");
  if (!a.empty() && !b.empty() && degree(a) > 0 && degree(b) > 0 && coprime_by_reduction(a, b)) return ZPoly{1};
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) {
      a = ZPoly{Integer(1)};
      break;
    }
    ZPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  int sign_flip = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k];
        mpz_submul(v.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  return sign_flip < 0 ? Integer(-d) : d;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& c : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) z[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    scale *= l;
  }
  Rational d(determinant(std::move(z)));
  d /= scale;
  return d;
}

UniPoly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys) {
  std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - k]);
      if (i == k) break;
    }
  // Horner on the Newton basis: p = dd[n-1]; p = p*(x - xs[k]) + dd[k].
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t kk = n - 1; kk-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * xs[kk];
    }
    next[0] += dd[kk];
    acc = std::move(next);
  }
  return UniPoly(std::move(acc));
}

}  // namespace realeig::detail
