#include "realeig/form.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace realeig {

namespace {

void check_arity(int num_vars) {
  if (num_vars != 2 && num_vars != 3) throw std::invalid_argument("Form: num_vars must be 2 or 3");
}

}  // namespace

Form::Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  check_arity(num_vars);
  if (degree < 0) throw std::invalid_argument("Form: negative degree");
}

Form::Form(int num_vars, int degree, std::map<Exponent, Rational> terms) : Form(num_vars, degree) {
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("Form: negative exponent");
    if (num_vars == 2 && e[2] != 0) throw std::invalid_argument("Form: binary form with a z exponent");
    if (e[0] + e[1] + e[2] != degree) throw std::invalid_argument("Form: term degree differs from form degree");
    terms_.emplace(e, c);
  }
}

Form Form::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::invalid_argument("Form::variable: bad index");
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return Form(num_vars, 1, {{e, Rational(1)}});
}

Form Form::constant(int num_vars, const Rational& c) { return Form(num_vars, 0, {{Exponent{0, 0, 0}, c}}); }

Form Form::linear(int num_vars, const std::array<Rational, 3>& a) {
  std::map<Exponent, Rational> t;
  for (int i = 0; i < num_vars; ++i) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    t[e] = a[static_cast<std::size_t>(i)];
  }
  return Form(num_vars, 1, std::move(t));
}

Rational Form::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Form::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw std::invalid_argument("Form::evaluate: arity mismatch");
  std::array<std::vector<Rational>, 3> pw;
  for (int v = 0; v < num_vars_; ++v) {
    auto& p = pw[static_cast<std::size_t>(v)];
    p.resize(static_cast<std::size_t>(degree_) + 1);
    p[0] = 1;
    for (int i = 1; i <= degree_; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * point[static_cast<std::size_t>(v)];
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < num_vars_; ++v) t *= pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(e[static_cast<std::size_t>(v)])];
    acc += t;
  }
  return acc;
}

double Form::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw std::invalid_argument("Form::evaluate: arity mismatch");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int v = 0; v < num_vars_; ++v) t *= std::pow(point[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
    acc += t;
  }
  return acc;
}

Form Form::partial(int var) const {
  if (var < 0 || var >= num_vars_) throw std::invalid_argument("Form::partial: bad variable index");
  Form out(num_vars_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent ne = e;
    ne[static_cast<std::size_t>(var)] -= 1;
    out.add_term(ne, c * k);
  }
  return out;
}

Form Form::substitute(const Matrix3& t) const {
  std::array<Form, 3> lin;
  for (int i = 0; i < num_vars_; ++i) {
    std::array<Rational, 3> row{t[static_cast<std::size_t>(i)][0], t[static_cast<std::size_t>(i)][1], t[static_cast<std::size_t>(i)][2]};
    lin[static_cast<std::size_t>(i)] = Form::linear(num_vars_, row);
  }
  std::array<std::vector<Form>, 3> pw;
  for (int i = 0; i < num_vars_; ++i) {
    auto& p = pw[static_cast<std::size_t>(i)];
    p.push_back(Form::constant(num_vars_, 1));
    for (int k = 1; k <= degree_; ++k) p.push_back(p.back() * lin[static_cast<std::size_t>(i)]);
  }
  Form out(num_vars_, degree_);
  for (const auto& [e, c] : terms_) {
    Form term = pw[0][static_cast<std::size_t>(e[0])] * pw[1][static_cast<std::size_t>(e[1])];
    if (num_vars_ == 3) term = term * pw[2][static_cast<std::size_t>(e[2])];
    term *= c;
    out += term;
  }
  return out;
}

Form Form::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1;
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(l);
  s /= g;
  return *this * s;
}

Form Form::with_num_vars(int num_vars) const {
  if (num_vars < num_vars_) throw std::invalid_argument("Form::with_num_vars: cannot drop variables");
  return Form(num_vars, degree_, terms_);
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("Form: arity mismatch in addition");
  if (o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    throw std::invalid_argument("Form: degree mismatch in addition");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool mono = degree_ > 0;
    if (a != 1 || !mono) {
      os << (a.get_den() != 1 && mono ? "(" + a.get_str() + ")" : a.get_str());
      if (mono) os << "*";
    }
    bool need_star = false;
    for (int v = 0; v < num_vars_; ++v) {
      int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (need_star) os << "*";
      os << names[v];
      if (k > 1) os << "^" << k;
      need_star = true;
    }
  }
  return os.str();
}

Form operator+(Form a, const Form& b) { return a += b; }
Form operator-(Form a, const Form& b) { return a -= b; }
Form operator*(Form a, const Rational& c) { return a *= c; }
Form operator*(const Rational& c, Form a) { return a *= c; }

Form operator*(const Form& a, const Form& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("Form: arity mismatch in product");
  std::map<Exponent, Rational> t;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) t[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
  return Form(a.num_vars(), a.degree() + b.degree(), std::move(t));
}

Form power(const Form& f, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  Form r = Form::constant(f.num_vars(), 1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

Form euler_operator(const Form& f) {
  Form out(f.num_vars(), f.degree());
  for (int i = 0; i < f.num_vars(); ++i) out += Form::variable(f.num_vars(), i) * f.partial(i);
  return out;
}

BinaryChart dehomogenize_binary(const Form& f, int var) {
  if (f.num_vars() != 2) throw std::invalid_argument("dehomogenize_binary: need a binary form");
  if (var < 0 || var > 1) throw std::invalid_argument("dehomogenize_binary: bad variable index");
  if (f.is_zero()) throw std::domain_error("dehomogenize: zero form");
  int other = 1 - var;
  std::vector<Rational> c(static_cast<std::size_t>(f.degree()) + 1);
  for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e[static_cast<std::size_t>(other)])] += v;
  UniPoly p(std::move(c));
  return {p, f.degree() - p.degree()};
}

TernaryChart dehomogenize_ternary(const Form& f, int var) {
  if (f.num_vars() != 3) throw std::invalid_argument("dehomogenize_ternary: need a ternary form");
  if (var < 0 || var > 2) throw std::invalid_argument("dehomogenize_ternary: bad variable index");
  if (f.is_zero()) throw std::domain_error("dehomogenize: zero form");
  std::array<int, 2> keep{};
  int n = 0;
  for (int v = 0; v < 3; ++v)
    if (v != var) keep[static_cast<std::size_t>(n++)] = v;
  std::map<BiPoly::Key, Rational> t;
  for (const auto& [e, c] : f.terms()) t[{e[static_cast<std::size_t>(keep[0])], e[static_cast<std::size_t>(keep[1])]}] += c;
  BiPoly p(std::move(t));
  return {p, f.degree() - p.total_degree()};
}

std::variant<BinaryChart, TernaryChart> dehomogenize(const Form& f, int var) {
  if (f.num_vars() == 2) return dehomogenize_binary(f, var);
  return dehomogenize_ternary(f, var);
}

Form homogenize(const UniPoly& p, int degree, int var) {
  if (p.degree() > degree) throw std::invalid_argument("homogenize: degree too small");
  std::map<Exponent, Rational> t;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(1 - var)] = static_cast<int>(i);
    e[static_cast<std::size_t>(var)] = degree - static_cast<int>(i);
    t[e] = cs[i];
  }
  return Form(2, degree, std::move(t));
}

Form homogenize(const BiPoly& p, int degree, int var) {
  if (p.total_degree() > degree) throw std::invalid_argument("homogenize: degree too small");
  std::array<int, 2> keep{};
  int n = 0;
  for (int v = 0; v < 3; ++v)
    if (v != var) keep[static_cast<std::size_t>(n++)] = v;
  std::map<Exponent, Rational> t;
  for (const auto& [k, c] : p.terms()) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(keep[0])] = k.first;
    e[static_cast<std::size_t>(keep[1])] = k.second;
    e[static_cast<std::size_t>(var)] = degree - k.first - k.second;
    t[e] = c;
  }
  return Form(3, degree, std::move(t));
}

Rational evaluate(const Form& f, std::span<const Rational> point) { return f.evaluate(point); }

Rational evaluate(const UniPoly& p, std::span<const Rational> point) {
  if (point.size() != 1) throw std::invalid_argument("evaluate: arity mismatch");
  return p.evaluate(point[0]);
}

Rational evaluate(const BiPoly& p, std::span<const Rational> point) {
  if (point.size() != 2) throw std::invalid_argument("evaluate: arity mismatch");
  return p.evaluate(point[0], point[1]);
}

Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? 1 : 0;
  return m;
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  Rational det = determinant(m);
  if (det == 0) throw std::domain_error("inverse: singular matrix");
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j1)] * m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)] -
           m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j2)] * m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j1)]) /
          det;
    }
  return r;
}

std::array<Rational, 3> transform_point(const Matrix3& m, const std::array<Rational, 3>& v) {
  std::array<Rational, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[static_cast<std::size_t>(i)] = 0;
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
  }
  return r;
}

}  // namespace realeig
