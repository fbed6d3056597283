#include "realeig/eigen.hpp"

#include <cmath>
#include <stdexcept>

#include "realeig/realroots.hpp"
#include "realeig/topology.hpp"

namespace realeig {

EigenSystem eigen_minors(const Form& f) {
  const int n = f.num_vars();
  if (n != 2 && n != 3) throw std::invalid_argument("eigen_minors: need a binary or ternary form");
  EigenSystem s;
  if (n == 2) {
    Form x = Form::variable(2, 0);
    Form y = Form::variable(2, 1);
    Form g = y * f.partial(0) - x * f.partial(1);
    s.minors.push_back(f.degree() == 0 ? Form(2, 0) : g);
    return s;
  }
  Form x = Form::variable(3, 0);
  Form y = Form::variable(3, 1);
  Form z = Form::variable(3, 2);
  Form fx = f.partial(0);
  Form fy = f.partial(1);
  Form fz = f.partial(2);
  if (f.degree() == 0) {
    s.minors.assign(3, Form(3, 0));
    return s;
  }
  s.minors = {y * fx - x * fy, z * fy - y * fz, z * fx - x * fz};
  return s;
}

long long expected_complex_count(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("expected_complex_count: need n >= 1 and d >= 1");
  if (d == 1) return 1;
  if (d == 2) return n;
  long long p = 1;
  for (int i = 0; i < n; ++i) p *= d - 1;
  return (p - 1) / (d - 2);
}

namespace {

double eigenvalue_at(const Form& f, const std::array<double, 3>& u) {
  std::vector<double> p(u.begin(), u.begin() + f.num_vars());
  return f.degree() * f.evaluate(p);
}

EigenPoint make_point(const Form& f, RealSolution s) {
  EigenPoint e{std::move(s), {}, 0.0, std::nullopt, std::nullopt};
  e.unit = e.solution.unit();
  e.eigenvalue = eigenvalue_at(f, e.unit);
  return e;
}

}  // namespace

EigenReport real_eigen_count_binary(const Form& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("real_eigen_count_binary: need a binary form");
  if (f.is_zero()) throw std::domain_error("real_eigen_count_binary: zero form");
  EigenReport r;
  r.n = 2;
  r.d = f.degree();
  r.expected_complex = expected_complex_count(2, r.d);
  Form g = eigen_minors(f).minors[0];
  if (g.is_zero()) {
    r.degenerate = true;
    return r;
  }
  BinaryChart ch = dehomogenize_binary(g, 1);
  // Projective points [x : 1] and [1 : 0] sit on the line z = 0 of a ternary chart.
  auto chart = std::make_shared<detail::SolutionChart>();
  chart->transform = identity3();
  chart->affine = detail::ZPoly{1};
  UniPoly sq = ch.poly.is_constant() ? UniPoly::constant(1) : squarefree_part(ch.poly);
  chart->infinity = detail::to_primitive(sq);
  r.complex_count = std::max(0, sq.degree()) + (ch.drop > 0 ? 1 : 0);
  if (!sq.is_constant())
    for (const auto& iv : isolate_real_roots(sq))
      r.real_points.push_back(make_point(f, RealSolution(chart, RealSolution::Kind::InfinityLine, iv, 1)));
  if (ch.drop > 0)
    r.real_points.push_back(make_point(
        f, RealSolution(chart, RealSolution::Kind::InfinityPoint, IsolatingInterval{1, 1, Rational(1)}, 1)));
  return r;
}

EigenReport real_eigen_count_ternary(const Form& f, const EigenOptions& options) {
  if (f.num_vars() != 3) throw std::invalid_argument("real_eigen_count_ternary: need a ternary form");
  if (f.is_zero()) throw std::domain_error("real_eigen_count_ternary: zero form");
  EigenReport r;
  r.n = 3;
  r.d = f.degree();
  r.expected_complex = expected_complex_count(3, r.d);
  auto m = eigen_minors(f).minors;
  SystemSolution sol = solve_ternary_system({m[0], m[1], m[2]}, options.seed, options.max_attempts);
  if (sol.degenerate) {
    r.degenerate = true;
    return r;
  }
  r.complex_count = sol.complex_count;
  for (auto& s : sol.real) r.real_points.push_back(make_point(f, std::move(s)));
  return r;
}

EigenReport real_eigen_count(const Form& f, const EigenOptions& options) {
  return f.num_vars() == 2 ? real_eigen_count_binary(f) : real_eigen_count_ternary(f, options);
}

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(Vec3 a) {
  double n = std::sqrt(dot(a, a));
  for (auto& v : a) v /= n;
  return a;
}

struct Hessian {
  std::array<std::array<Form, 3>, 3> second;

  explicit Hessian(const Form& f) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) second[i][j] = f.partial(i).partial(j);
  }

  std::array<Vec3, 3> at(const Vec3& v) const {
    std::array<Vec3, 3> h;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h[i][j] = second[i][j].evaluate(std::span<const double>(v));
    return h;
  }
};

// Index = number of positive eigenvalues of the tangent Hessian of the
// Lagrangian (0 max, 1 saddle, 2 min).
std::optional<int> index_at(const Hessian& hess, const Form& f, const Vec3& v, double tol) {
  double lambda = eigenvalue_at(f, v);
  auto h = hess.at(v);
  for (int i = 0; i < 3; ++i) h[i][i] -= lambda;
  // Orthonormal basis of the tangent plane.
  Vec3 seed = std::abs(v[0]) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 e1 = normalized(cross(v, seed));
  Vec3 e2 = cross(v, e1);
  auto quad = [&](const Vec3& a, const Vec3& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += a[i] * h[i][j] * b[j];
    return s;
  };
  double b11 = quad(e1, e1);
  double b12 = quad(e1, e2);
  double b22 = quad(e2, e2);
  double det = b11 * b22 - b12 * b12;
  double scale = 0;
  for (const auto& row : h)
    for (double x : row) scale = std::max(scale, std::abs(x));
  if (std::abs(det) <= tol * std::max(1.0, scale * scale)) return std::nullopt;
  if (det < 0) return 1;
  return (b11 + b22) < 0 ? 0 : 2;
}

}  // namespace

MorseCounts classify_critical_points(const Form& f, EigenReport& report, const MorseOptions& options) {
  if (f.num_vars() != 3 || report.n != 3) throw std::invalid_argument("classify_critical_points: need a ternary form");
  if (report.degenerate) throw std::domain_error("classify_critical_points: degenerate report");
  Hessian hess(f);
  MorseCounts mc;
  auto tally = [&](std::optional<int> idx) {
    if (!idx) {
      ++mc.non_morse;
      return;
    }
    (*idx == 0 ? mc.c0 : *idx == 1 ? mc.c1 : mc.c2) += 1;
  };
  for (auto& p : report.real_points) {
    Vec3 v = p.unit;
    Vec3 w{-v[0], -v[1], -v[2]};
    p.morse_index = index_at(hess, f, v, options.tolerance);
    p.antipode_morse_index = index_at(hess, f, w, options.tolerance);
    tally(p.morse_index);
    tally(p.antipode_morse_index);
  }
  report.morse = mc;
  return mc;
}

BoundVerdict verify_bounds(const Form& f, const EigenReport& report, const CurveTopology* topo) {
  BoundVerdict v;
  if (report.degenerate) {
    v.skipped = true;
    return v;
  }
  const int t = report.t();
  const int d = report.d;
  auto fail = [&](std::string what) {
    v.pass = false;
    v.violations.push_back(std::move(what));
  };
  if (report.n == 2) {
    if (f.num_vars() != 2) throw std::invalid_argument("verify_bounds: report and form differ in arity");
    int q = count_projective_real_roots(f);
    v.q = q;
    if (t < std::max(q, 1)) fail("t >= max(q,1)");
    if (t > d) fail("t <= d");
    if ((t - d) % 2 != 0) fail("t = d mod 2");
    return v;
  }
  if (f.num_vars() != 3) throw std::invalid_argument("verify_bounds: report and form differ in arity");
  if (topo) {
    int c = topo->ovals;
    v.c = c;
    if (d % 2 == 1) {
      if (t < 2 * c + 1) fail("t >= 2c+1");
    } else if (t < std::max(3, 2 * c + 1)) {
      fail("t >= max(3,2c+1)");
    }
  }
  if (t > d * d - d + 1) fail("t <= d^2-d+1");
  if (t % 2 == 0) fail("t odd");
  return v;
}

}  // namespace realeig
