#include "realeig/system.hpp"

#include <cmath>

#include "realeig/errors.hpp"
#include "realeig/random.hpp"

namespace realeig {

using detail::SolutionChart;
using detail::ZPoly;

RealSolution::RealSolution(std::shared_ptr<const SolutionChart> chart, Kind kind, IsolatingInterval x,
                           int multiplicity)
    : chart_(std::move(chart)), kind_(kind), x_(std::move(x)), multiplicity_(multiplicity) {}

namespace {

std::array<Rational, 3> chart_point(const SolutionChart& c, RealSolution::Kind kind, const Rational& x) {
  std::array<Rational, 3> p;
  switch (kind) {
    case RealSolution::Kind::Affine:
      p = {x, -c.c0(x) / c.c1(x), Rational(1)};
      break;
    case RealSolution::Kind::InfinityLine:
      p = {x, Rational(1), Rational(0)};
      break;
    case RealSolution::Kind::InfinityPoint:
      p = {Rational(1), Rational(0), Rational(0)};
      break;
  }
  return transform_point(c.transform, p);
}

}  // namespace

std::array<Rational, 3> RealSolution::representative(int bits) const {
  if (kind_ == Kind::InfinityPoint || x_.is_exact()) return chart_point(*chart_, kind_, x_.midpoint());
  const ZPoly& poly = kind_ == Kind::Affine ? chart_->affine : chart_->infinity;
  IsolatingInterval iv = detail::refine_z(poly, x_, pow2(-bits));
  return chart_point(*chart_, kind_, iv.midpoint());
}

std::optional<std::array<Rational, 3>> RealSolution::exact() const {
  if (kind_ == Kind::InfinityPoint || x_.is_exact()) return chart_point(*chart_, kind_, x_.midpoint());
  return std::nullopt;
}

std::array<double, 3> RealSolution::unit(int bits) const {
  auto r = representative(bits);
  // Scale by the largest entry in rational arithmetic before converting.
  Rational m = 0;
  for (const auto& v : r)
    if (abs(v) > m) m = abs(v);
  std::array<double, 3> u;
  double norm = 0;
  for (int i = 0; i < 3; ++i) {
    u[i] = to_double(r[i] / m);
    norm += u[i] * u[i];
  }
  norm = std::sqrt(norm);
  for (auto& v : u) v /= norm;
  return u;
}

Matrix3 random_unimodular(std::uint64_t seed, int range) {
  SplitMix64 rng(seed);
  Matrix3 l = identity3();
  Matrix3 u = identity3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) {
      l[i][j] = rng.uniform_int(-range, range);
      u[j][i] = rng.uniform_int(-range, range);
    }
  Matrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t[i][j] = 0;
      for (int k = 0; k < 3; ++k) t[i][j] += l[i][k] * u[k][j];
    }
  return t;
}

namespace {

// Integer polynomials proportional to ps, all scaled by one common factor.
std::vector<ZPoly> common_scale(const std::vector<UniPoly>& ps) {
  Integer l = 1;
  for (const auto& p : ps)
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<ZPoly> out;
  Integer g = 0;
  for (const auto& p : ps) {
    ZPoly z;
    for (const auto& c : p.coefficients()) z.push_back(c.get_num() * (l / c.get_den()));
    detail::trim(z);
    g = gcd(g, detail::content(z));
    out.push_back(std::move(z));
  }
  if (g > 1)
    for (auto& z : out)
      for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// A nonzero scalar multiple of a mod b, keeping coefficients primitive.
ZPoly reduce_primitive(ZPoly a, const ZPoly& b) {
  const int db = detail::degree(b);
  const Integer& lc = b.back();
  int steps = 0;
  while (!a.empty() && detail::degree(a) >= db) {
    Integer g = gcd(a.back(), lc);
    Integer ua = lc / g;
    Integer ub = a.back() / g;
    std::size_t shift = a.size() - 1 - static_cast<std::size_t>(db);
    for (auto& c : a) c *= ua;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(a[shift + j].get_mpz_t(), ub.get_mpz_t(), b[j].get_mpz_t());
    detail::trim(a);
    if (++steps % 8 == 0) detail::make_primitive(a);
  }
  detail::make_primitive(a);
  return a;
}

// A scalar multiple of sum_j a_j(x) (-c0)^j c1^(m-j) reduced modulo s,
// computed over the integers.
UniPoly substitute_y(const std::vector<UniPoly>& a, const UniPoly& c0, const UniPoly& c1, int m,
                     const UniPoly& s) {
  auto za = common_scale(a);
  auto zc = common_scale({-c0, c1});
  std::vector<ZPoly> p0{ZPoly{1}};
  std::vector<ZPoly> p1{ZPoly{1}};
  for (int j = 1; j <= m; ++j) {
    p0.push_back(zmul(p0.back(), zc[0]));
    p1.push_back(zmul(p1.back(), zc[1]));
  }
  ZPoly acc;
  for (int j = 0; j < static_cast<int>(za.size()); ++j) {
    if (za[j].empty()) continue;
    ZPoly term = zmul(za[j], zmul(p0[j], p1[m - j]));
    if (acc.size() < term.size()) acc.resize(term.size());
    for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
  }
  detail::trim(acc);
  if (acc.empty()) return {};
  return detail::to_unipoly(reduce_primitive(std::move(acc), detail::to_primitive(s)));
}

int rank(const std::vector<std::array<long, 3>>& rows) {
  std::vector<std::array<Rational, 3>> m;
  for (const auto& r : rows) m.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2])});
  int rk = 0;
  for (int col = 0; col < 3 && rk < static_cast<int>(m.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(rk);
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rk)]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(rk) || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[static_cast<std::size_t>(rk)][col];
      for (int j = 0; j < 3; ++j) m[i][j] -= f * m[static_cast<std::size_t>(rk)][j];
    }
    ++rk;
  }
  return rk;
}

UniPoly gcd_with(const UniPoly& acc, const UniPoly& p) { return p.is_zero() ? acc : gcd(acc, p); }

struct Attempt {
  enum class Status { Ok, Retry, Degenerate } status = Status::Retry;
  SystemSolution solution;
};

Attempt attempt(const std::array<Form, 3>& g, std::uint64_t seed) {
  Attempt out;
  const int m = g[0].degree();
  Matrix3 t = random_unimodular(seed);
  std::array<Form, 3> h;
  for (int i = 0; i < 3; ++i) h[i] = g[i].substitute(t);

  // Line at infinity z' = 0.
  std::array<Form, 3> r;
  bool all_zero = true;
  for (int i = 0; i < 3; ++i) {
    std::map<Exponent, Rational> terms;
    for (const auto& [e, c] : h[i].terms())
      if (e[2] == 0) terms[{e[0], e[1], 0}] = c;
    r[i] = Form(2, m, terms);
    all_zero = all_zero && r[i].is_zero();
  }
  if (all_zero) {
    out.status = Attempt::Status::Degenerate;
    return out;
  }
  UniPoly inf_gcd;
  bool corner = true;  // [1:0:0] in chart coordinates
  for (const auto& ri : r) {
    if (ri.is_zero()) continue;
    inf_gcd = gcd_with(inf_gcd, dehomogenize_binary(ri, 1).poly);
    if (ri.coeff({m, 0, 0}) != 0) corner = false;
  }

  SplitMix64 rng(seed ^ 0x5bd1e995ULL);
  BiPoly p;
  BiPoly q;
  bool found = false;
  UniPoly res;
  std::array<long, 3> cp{};
  std::array<long, 3> cq{};
  for (int tries = 0; tries < 3 && !found; ++tries) {
    Form fp(3, m);
    Form fq(3, m);
    for (int i = 0; i < 3; ++i) {
      cp[i] = rng.uniform_int(-4, 4);
      cq[i] = rng.uniform_int(-4, 4);
      fp += Rational(cp[i]) * h[i];
      fq += Rational(cq[i]) * h[i];
    }
    if (fp.coeff({0, m, 0}) == 0 || fq.coeff({0, m, 0}) == 0) continue;
    p = dehomogenize_ternary(fp, 2).poly;
    q = dehomogenize_ternary(fq, 2).poly;
    res = resultant_wrt(p, q, 1);
    if (!res.is_zero()) found = true;
  }
  if (!found) {
    // Either every combination lost its y^m term or they all share a factor.
    bool lc_failure = true;
    for (const auto& hi : h)
      if (hi.coeff({0, m, 0}) != 0) lc_failure = false;
    out.status = (lc_failure || p.is_zero()) ? Attempt::Status::Retry : Attempt::Status::Degenerate;
    return out;
  }

  auto chart = std::make_shared<SolutionChart>();
  chart->transform = t;
  std::vector<UniPoly> yun = res.is_constant() ? std::vector<UniPoly>{} : squarefree_factorization(res);
  UniPoly sq = res.is_constant() ? UniPoly::constant(1) : squarefree_part(res);

  UniPoly e = sq;
  if (!sq.is_constant()) {
    if (p.degree_in(1) == 1) {
      auto cs = p.coefficients_in(1);
      chart->c0 = cs[0];
      chart->c1 = cs[1];
    } else {
      auto s1 = subresultant_wrt(p, q, 1, 1);
      chart->c0 = s1[0];
      chart->c1 = s1.size() > 1 ? s1[1] : UniPoly();
    }
    if (chart->c1.is_zero() || gcd(sq, chart->c1).degree() > 0) return out;  // retry
    // Only the h_k completing P, Q to a basis of the span are needed.
    std::vector<std::array<long, 3>> rows;
    for (const auto& c : {cp, cq}) {
      rows.push_back(c);
      if (rank(rows) < static_cast<int>(rows.size())) rows.pop_back();
    }
    for (int k = 0; k < 3 && rows.size() < 3; ++k) {
      rows.push_back({k == 0 ? 1L : 0L, k == 1 ? 1L : 0L, k == 2 ? 1L : 0L});
      if (rank(rows) < static_cast<int>(rows.size())) {
        rows.pop_back();
        continue;
      }
      auto a = dehomogenize_ternary(h[k], 2).poly.coefficients_in(1);
      e = gcd(e, substitute_y(a, chart->c0, chart->c1, m, sq));
      if (e.is_constant()) break;
    }
  }

  SystemSolution& sol = out.solution;
  int inf_deg = inf_gcd.is_zero() ? 0 : std::max(0, inf_gcd.degree());
  sol.complex_count = std::max(0, e.degree()) + inf_deg + (corner ? 1 : 0);
  chart->affine = e.is_constant() ? ZPoly{1} : detail::to_primitive(e);
  chart->infinity = inf_deg > 0 ? detail::to_primitive(inf_gcd) : ZPoly{1};

  if (!e.is_constant()) {
    for (const auto& iv : isolate_real_roots(e)) {
      int mult = 1;
      if (yun.size() <= 1) {
        sol.real.emplace_back(chart, RealSolution::Kind::Affine, iv, mult);
        continue;
      }
      for (size_t k = 0; k < yun.size(); ++k)
        if (!yun[k].is_constant() && detail::sign_at(detail::to_primitive(yun[k]), iv.midpoint()) == 0 &&
            iv.is_exact())
          mult = static_cast<int>(k) + 1;
      if (!iv.is_exact()) {
        for (size_t k = 0; k < yun.size(); ++k) {
          if (yun[k].is_constant()) continue;
          if (sturm_count(gcd(yun[k], e), iv.lo, iv.hi) > 0) mult = static_cast<int>(k) + 1;
        }
      }
      sol.real.emplace_back(chart, RealSolution::Kind::Affine, iv, mult);
    }
  }
  if (inf_deg > 0)
    for (const auto& iv : isolate_real_roots(inf_gcd))
      sol.real.emplace_back(chart, RealSolution::Kind::InfinityLine, iv, 1);
  if (corner)
    sol.real.emplace_back(chart, RealSolution::Kind::InfinityPoint, IsolatingInterval{1, 1, Rational(1)}, 1);
  out.status = Attempt::Status::Ok;
  return out;
}

}  // namespace

SystemSolution solve_ternary_system(const std::array<Form, 3>& g, std::uint64_t seed, int max_attempts) {
  const int m = g[0].degree();
  for (const auto& gi : g)
    if (gi.num_vars() != 3 || gi.degree() != m)
      throw std::invalid_argument("solve_ternary_system: need three ternary forms of one degree");
  SystemSolution none;
  if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) {
    none.degenerate = true;
    return none;
  }
  if (m == 0) return none;

  int degenerate_votes = 0;
  for (int k = 0; k < max_attempts; ++k) {
    Attempt a = attempt(g, seed + 0x632BE59BD9B4E019ULL * static_cast<std::uint64_t>(k + 1));
    if (a.status == Attempt::Status::Ok) return std::move(a.solution);
    if (a.status == Attempt::Status::Degenerate && ++degenerate_votes >= 2) {
      none.degenerate = true;
      return none;
    }
  }
  throw GenericityError("genericity exhausted after " + std::to_string(max_attempts) + " coordinate changes");
}

}  // namespace realeig
