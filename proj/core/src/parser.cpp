#include "realeig/parser.hpp"

#include <cctype>
#include <map>

namespace realeig {

namespace {

// Possibly inhomogeneous polynomial in x, y, z.
using Poly = std::map<Exponent, Rational>;

void add_into(Poly& a, const Poly& b, int sign) {
  for (const auto& [e, c] : b) {
    Rational& slot = a[e];
    if (sign > 0) slot += c;
    else slot -= c;
    if (slot == 0) a.erase(e);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      Rational& slot = r[e];
      slot += ca * cb;
      if (slot == 0) r.erase(e);
    }
  return r;
}

Poly constant(const Rational& c) {
  Poly p;
  if (c != 0) p[{0, 0, 0}] = c;
  return p;
}

std::optional<Rational> as_constant(const Poly& p) {
  if (p.empty()) return Rational(0);
  if (p.size() == 1 && p.begin()->first == Exponent{0, 0, 0}) return p.begin()->second;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int peek() {
    skip();
    return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
  }

  bool starts_primary(int c) {
    return c == '(' || c == '.' || std::isdigit(c) || c == 'x' || c == 'y' || c == 'z';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      int c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      add_into(acc, term(), c == '+' ? 1 : -1);
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      int c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, unary());
      } else if (c == '/') {
        std::size_t at = ++pos_;
        Poly den = unary();
        auto k = as_constant(den);
        if (!k) throw ParseError(at, "division by a non-constant");
        if (*k == 0) throw ParseError(at, "division by zero");
        acc = multiply(acc, constant(1 / *k));
      } else if (starts_primary(c)) {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    int c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      Poly p = unary();
      if (c == '-') {
        Poly neg;
        add_into(neg, p, -1);
        return neg;
      }
      return p;
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t at = pos_;
    if (at >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[at])))
      throw ParseError(at, "exponent must be a non-negative integer");
    int e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 1000) throw ParseError(at, "exponent too large");
    }
    Poly r = constant(1);
    for (int i = 0; i < e; ++i) r = multiply(r, base);
    return r;
  }

  Poly primary() {
    int c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Exponent e{0, 0, 0};
      e[static_cast<std::size_t>(c - 'x')] = 1;
      return Poly{{e, Rational(1)}};
    }
    if (c == '.' || (c >= 0 && std::isdigit(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t save = pos_;
        ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        } else {
          pos_ = save;
        }
      }
      try {
        return constant(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument&) {
        throw ParseError(start, "malformed number");
      }
    }
    if (c < 0) throw ParseError(at, "unexpected end of input");
    throw ParseError(at, std::string("unexpected '") + static_cast<char>(c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, const ParseOptions& options) {
  Poly p = Parser(text).parse();
  bool has[3] = {false, false, false};
  int maxdeg = 0;
  int mindeg = 1 << 30;
  for (const auto& [e, c] : p) {
    for (int v = 0; v < 3; ++v) has[v] = has[v] || e[v] > 0;
    int deg = e[0] + e[1] + e[2];
    maxdeg = std::max(maxdeg, deg);
    mindeg = std::min(mindeg, deg);
  }
  int n = options.num_vars;
  if (options.homogenize) {
    char h = *options.homogenize;
    if (h != 'y' && h != 'z') throw ParseError(0, "homogenizing variable must be y or z");
    int hv = h - 'x';
    if (has[hv]) throw ParseError(0, std::string("input already contains the homogenizing variable ") + h);
    if (n == 0) n = hv + 1;
    if (n != hv + 1) throw ParseError(0, "homogenizing variable does not match the number of variables");
    Poly hp;
    for (const auto& [e, c] : p) {
      Exponent f = e;
      f[hv] += maxdeg - (e[0] + e[1] + e[2]);
      hp[f] = c;
    }
    p = std::move(hp);
    mindeg = maxdeg;
  }
  if (n == 0) n = has[2] ? 3 : 2;
  if (n != 2 && n != 3) throw ParseError(0, "number of variables must be 2 or 3");
  if (n == 2 && has[2]) throw ParseError(0, "binary form contains z");
  if (!p.empty() && mindeg != maxdeg)
    throw ParseError(0, "inhomogeneous input (degrees " + std::to_string(mindeg) + " and " + std::to_string(maxdeg) +
                            "); use homogenization");
  return Form(n, maxdeg, p);
}

std::string print_form(const Form& f) { return f.to_string(); }

}  // namespace realeig
