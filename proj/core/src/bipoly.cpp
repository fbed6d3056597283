#include "realeig/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "realeig/detail/zpoly.hpp"

namespace realeig {

BiPoly::BiPoly(std::map<Key, Rational> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.first < 0 || it->first.second < 0) throw std::invalid_argument("BiPoly: negative exponent");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

BiPoly BiPoly::from_coefficients(const std::vector<UniPoly>& coeffs, int var) {
  std::map<Key, Rational> t;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& cs = coeffs[k].coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == 0) continue;
      Key key = var == 0 ? Key{static_cast<int>(k), static_cast<int>(i)} : Key{static_cast<int>(i), static_cast<int>(k)};
      t[key] = cs[i];
    }
  }
  return BiPoly(std::move(t));
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, var == 0 ? k.first : k.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const {
  auto cs = coefficients_in(1);
  Rational acc = 0;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc *= y;
    acc += it->evaluate(x);
  }
  return acc;
}

double BiPoly::evaluate(double x, double y) const {
  double acc = 0;
  for (const auto& [k, c] : terms_) acc += c.get_d() * std::pow(x, k.first) * std::pow(y, k.second);
  return acc;
}

UniPoly BiPoly::specialize(int var, const Rational& value) const {
  int other_deg = degree_in(1 - var);
  if (other_deg < 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(other_deg) + 1);
  int var_deg = degree_in(var);
  std::vector<Rational> pw(static_cast<std::size_t>(var_deg) + 1);
  pw[0] = 1;
  for (int i = 1; i <= var_deg; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * value;
  for (const auto& [k, c] : terms_) {
    int e_var = var == 0 ? k.first : k.second;
    int e_other = var == 0 ? k.second : k.first;
    out[static_cast<std::size_t>(e_other)] += c * pw[static_cast<std::size_t>(e_var)];
  }
  return UniPoly(std::move(out));
}

std::vector<UniPoly> BiPoly::coefficients_in(int var) const {
  int d = degree_in(var);
  if (d < 0) return {};
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(d) + 1);
  for (const auto& [k, c] : terms_) {
    int e_var = var == 0 ? k.first : k.second;
    int e_other = var == 0 ? k.second : k.first;
    auto& v = raw[static_cast<std::size_t>(e_var)];
    if (v.size() <= static_cast<std::size_t>(e_other)) v.resize(static_cast<std::size_t>(e_other) + 1);
    v[static_cast<std::size_t>(e_other)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

BiPoly BiPoly::partial(int var) const {
  std::map<Key, Rational> t;
  for (const auto& [k, c] : terms_) {
    int e = var == 0 ? k.first : k.second;
    if (e == 0) continue;
    Key nk = var == 0 ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
    t[nk] = c * e;
  }
  return BiPoly(std::move(t));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot -= c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool mono = k.first > 0 || k.second > 0;
    if (a != 1 || !mono) {
      os << (a.get_den() != 1 && mono ? "(" + a.get_str() + ")" : a.get_str());
      if (mono) os << "*";
    }
    bool need_star = false;
    if (k.first > 0) {
      os << "x";
      if (k.first > 1) os << "^" << k.first;
      need_star = true;
    }
    if (k.second > 0) {
      if (need_star) os << "*";
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  std::map<BiPoly::Key, Rational> t;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  return BiPoly(std::move(t));
}

namespace {

// Integer coefficient lists (in var) of a positive multiple of p.
struct IntCoeffs {
  std::vector<detail::ZPoly> coeffs;  // coeffs[k] multiplies var^k
  Integer scale;                      // integer version = scale * p
  int total_degree;
  int max_other_degree;
};

IntCoeffs integer_coefficients(const BiPoly& p, int var) {
  Integer l = 1;
  for (const auto& [k, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntCoeffs out;
  out.scale = l;
  out.total_degree = p.total_degree();
  out.max_other_degree = p.degree_in(1 - var);
  int d = p.degree_in(var);
  out.coeffs.assign(static_cast<std::size_t>(d) + 1, {});
  for (const auto& [k, c] : p.terms()) {
    int e_var = var == 0 ? k.first : k.second;
    int e_other = var == 0 ? k.second : k.first;
    auto& z = out.coeffs[static_cast<std::size_t>(e_var)];
    if (z.size() <= static_cast<std::size_t>(e_other)) z.resize(static_cast<std::size_t>(e_other) + 1);
    z[static_cast<std::size_t>(e_other)] = c.get_num() * (l / c.get_den());
  }
  return out;
}

Integer eval_int(const detail::ZPoly& p, const Integer& s) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

std::vector<Integer> sample_points(int count) {
  std::vector<Integer> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; static_cast<int>(xs.size()) < count; ++i) {
    xs.emplace_back(i);
    if (i > 0 && static_cast<int>(xs.size()) < count) xs.emplace_back(-i);
  }
  return xs;
}

// Determinants det(M_j), j = 0..k, of the Sylvester-Habicht minors at one
// specialization.  For k = 0 this is the Sylvester determinant.
std::vector<Integer> habicht_minors(const std::vector<Integer>& pv, const std::vector<Integer>& qv, int k) {
  int m = static_cast<int>(pv.size()) - 1;
  int n = static_cast<int>(qv.size()) - 1;
  int rows = m + n - 2 * k;
  int cols = m + n - k;
  std::vector<std::vector<Integer>> full(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
  auto fill = [&](int row, int shift, const std::vector<Integer>& v, int deg) {
    for (int c = 0; c < cols; ++c) {
      int pw = cols - 1 - c;
      int idx = pw - shift;
      if (idx >= 0 && idx <= deg) full[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(idx)];
    }
  };
  int r = 0;
  for (int s = n - k - 1; s >= 0; --s) fill(r++, s, pv, m);
  for (int s = m - k - 1; s >= 0; --s) fill(r++, s, qv, n);
  std::vector<Integer> out(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    std::vector<std::vector<Integer>> mj(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(rows)));
    int jcol = cols - 1 - j;
    for (int i = 0; i < rows; ++i) {
      for (int c = 0; c < rows - 1; ++c) mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = full[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(rows - 1)] = full[static_cast<std::size_t>(i)][static_cast<std::size_t>(jcol)];
    }
    out[static_cast<std::size_t>(j)] = detail::determinant(std::move(mj));
  }
  return out;
}

std::vector<UniPoly> habicht_interpolated(const BiPoly& p, const BiPoly& q, int var, int k) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant with a zero polynomial");
  IntCoeffs a = integer_coefficients(p, var);
  IntCoeffs b = integer_coefficients(q, var);
  int m = static_cast<int>(a.coeffs.size()) - 1;
  int n = static_cast<int>(b.coeffs.size()) - 1;
  // Degree bound in the other variable: entries of P-rows have degree
  // <= tdeg(p) - (power index), which gives a weighted bound per minor.
  long sum_shift = 0;
  for (int s = 0; s < n - k; ++s) sum_shift += s;
  for (int s = 0; s < m - k; ++s) sum_shift += s;
  long sum_pw = 0;
  for (int pw = k + 1; pw <= m + n - k - 1; ++pw) sum_pw += pw;
  long weighted = static_cast<long>(n - k) * a.total_degree + static_cast<long>(m - k) * b.total_degree - (sum_pw - sum_shift);
  long naive = static_cast<long>(n - k) * a.max_other_degree + static_cast<long>(m - k) * b.max_other_degree;
  long bound = std::max(0L, std::min(weighted, naive));
  int count = static_cast<int>(bound) + 1;
  auto xs = sample_points(count);
  std::vector<std::vector<Rational>> ys(static_cast<std::size_t>(k) + 1, std::vector<Rational>(xs.size()));
  std::vector<Integer> pv(static_cast<std::size_t>(m) + 1), qv(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (int j = 0; j <= m; ++j) pv[static_cast<std::size_t>(j)] = eval_int(a.coeffs[static_cast<std::size_t>(j)], xs[i]);
    for (int j = 0; j <= n; ++j) qv[static_cast<std::size_t>(j)] = eval_int(b.coeffs[static_cast<std::size_t>(j)], xs[i]);
    auto dets = habicht_minors(pv, qv, k);
    for (int j = 0; j <= k; ++j) ys[static_cast<std::size_t>(j)][i] = Rational(dets[static_cast<std::size_t>(j)]);
  }
  // integer version = scale_a^(n-k) * scale_b^(m-k) * true minors
  Integer sa, sb;
  mpz_pow_ui(sa.get_mpz_t(), a.scale.get_mpz_t(), static_cast<unsigned long>(n - k));
  mpz_pow_ui(sb.get_mpz_t(), b.scale.get_mpz_t(), static_cast<unsigned long>(m - k));
  Rational inv = Rational(1) / Rational(sa * sb);
  std::vector<UniPoly> out;
  for (int j = 0; j <= k; ++j) out.push_back(detail::interpolate(xs, ys[static_cast<std::size_t>(j)]) * inv);
  return out;
}

}  // namespace

UniPoly resultant_wrt(const BiPoly& p, const BiPoly& q, int var) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant with a zero polynomial");
  int m = p.degree_in(var);
  int n = q.degree_in(var);
  if (m == 0 && n == 0) return UniPoly::constant(1);
  if (m == 0) {
    UniPoly c = p.coefficients_in(var)[0];
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < n; ++i) r *= c;
    return r;
  }
  if (n == 0) {
    UniPoly c = q.coefficients_in(var)[0];
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < m; ++i) r *= c;
    return r;
  }
  return habicht_interpolated(p, q, var, 0)[0];
}

std::vector<UniPoly> subresultant_wrt(const BiPoly& p, const BiPoly& q, int var, int k) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("subresultant with a zero polynomial");
  int m = p.degree_in(var);
  int n = q.degree_in(var);
  if (k < 0 || k >= std::min(m, n)) throw std::invalid_argument("subresultant_wrt: index out of range");
  return habicht_interpolated(p, q, var, k);
}

}  // namespace realeig
