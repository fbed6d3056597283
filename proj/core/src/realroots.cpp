#include "realeig/realroots.hpp"

#include <stdexcept>

namespace realeig {

using detail::ZPoly;

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  ZPoly a = detail::to_primitive(squarefree_part(p));
  ZPoly b = detail::derivative(a);
  detail::make_primitive(b);
  seq_.push_back(a);
  if (b.empty()) return;
  seq_.push_back(b);
  // Subresultant PRS r_i (exact divisions, no content computations).  The
  // Sturm remainder -rem(S_{i-1}, S_i) is a multiple of r_{i+1} of sign
  // -sign(S_{i-1}/r_{i-1}) sign(beta_i) sign(lc r_i)^(d_i+1).
  std::vector<ZPoly> r{a, b};
  std::vector<int> sign{1, 1};
  Integer psi = -1;
  Integer beta;
  for (std::size_t i = 1;; ++i) {
    const ZPoly& prev = r[i - 1];
    const ZPoly& cur = r[i];
    if (detail::degree(cur) <= 0) break;
    const int d = detail::degree(prev) - detail::degree(cur);
    const Integer& gamma = cur.back();
    if (i == 1) {
      beta = d % 2 == 0 ? -1 : 1;
    } else {
      const Integer& gprev = r[i - 1].back();
      const int dprev = detail::degree(r[i - 2]) - detail::degree(r[i - 1]);
      Integer num;
      Integer den;
      Integer neg = -gprev;
      mpz_pow_ui(num.get_mpz_t(), neg.get_mpz_t(), static_cast<unsigned long>(dprev));
      mpz_pow_ui(den.get_mpz_t(), psi.get_mpz_t(), static_cast<unsigned long>(dprev - 1));
      mpz_divexact(psi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), psi.get_mpz_t(), static_cast<unsigned long>(d));
      beta = -gprev * pw;
    }
    ZPoly next = detail::pseudo_remainder(prev, cur);
    if (next.empty()) break;
    for (auto& c : next) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), beta.get_mpz_t());
    int s_next = -sign[i - 1] * sgn(beta) * ((d + 1) % 2 == 1 ? sgn(gamma) : 1);
    r.push_back(std::move(next));
    sign.push_back(s_next);
  }
  for (std::size_t i = 2; i < r.size(); ++i) {
    ZPoly t = std::move(r[i]);
    detail::make_primitive(t);
    if (sign[i] < 0)
      for (auto& c : t) c = -c;
    seq_.push_back(std::move(t));
  }
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(detail::sign_at(p, x));
  return variations(s);
}

int SturmSequence::variations_at_infinity(bool plus) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(detail::sign_at_infinity(p, plus));
  return variations(s);
}

int SturmSequence::count(const Bound& a, const Bound& b) const {
  if (a && b && *a >= *b) return 0;
  int va = a ? variations_at(*a) : variations_at_infinity(false);
  int vb = b ? variations_at(*b) : variations_at_infinity(true);
  return va - vb;
}

std::vector<UniPoly> SturmSequence::polys() const {
  std::vector<UniPoly> out;
  for (const auto& p : seq_) out.push_back(detail::to_unipoly(p));
  return out;
}

int sturm_count(const UniPoly& p, const Bound& a, const Bound& b) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  return SturmSequence(p).count(a, b);
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("cauchy_bound: zero polynomial");
  Rational m = 0;
  Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i)) / lc;
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational pw = 1;
  while (pw < bound) pw *= 2;
  return pw;
}


namespace {

void taylor_shift_one(ZPoly& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
}

// Sign variations of (x+1)^n q(1/(x+1)): bounds the roots of q in (0, 1).
int descartes_01(const ZPoly& q) {
  ZPoly t(q.rbegin(), q.rend());
  taylor_shift_one(t);
  int v = 0;
  int last = 0;
  for (const auto& c : t) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// 2^n q(x/2), whose roots in (0, 1) are those of q in (0, 1/2).
ZPoly halve(const ZPoly& q) {
  const std::size_t n = q.size() - 1;
  ZPoly h(q.size());
  for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(h[i].get_mpz_t(), q[i].get_mpz_t(), n - i);
  return h;
}

// Roots of q in (0, 1), where (0, 1) stands for (scale * c / 2^k, scale * (c+1) / 2^k).
void descartes_rec(const ZPoly& q, const Rational& scale, const Integer& c, unsigned k,
                   std::vector<IsolatingInterval>& out) {
  int v = descartes_01(q);
  if (v == 0) return;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  auto at = [&](const Integer& num, const Integer& d) {
    Rational r(num, d);
    r.canonicalize();
    return Rational(scale * r);
  };
  ZPoly left = halve(q);
  ZPoly right = left;
  taylor_shift_one(right);
  const bool mid_root = right.front() == 0;
  if (v == 1) {
    Integer at_one = 0;
    for (const auto& x : q) at_one += x;
    if (mid_root) {
      Rational mid = at(2 * c + 1, 2 * den);
      out.push_back({mid, mid, mid});
      return;
    }
    // Endpoints must not be roots; otherwise keep splitting.
    if (q.front() != 0 && at_one != 0) {
      out.push_back({at(c, den), at(c + 1, den), std::nullopt});
      return;
    }
  }
  descartes_rec(left, scale, 2 * c, k + 1, out);
  if (mid_root) {
    Rational mid = at(2 * c + 1, 2 * den);
    out.push_back({mid, mid, mid});
  }
  descartes_rec(right, scale, 2 * c + 1, k + 1, out);
}

// Positive roots of the squarefree p, all below b.
std::vector<IsolatingInterval> positive_roots(const ZPoly& p, const Rational& b) {
  ZPoly q(p.size());
  Integer pw = 1;
  const Integer bn = b.get_num();
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = p[i] * pw;
    pw *= bn;
  }
  std::vector<IsolatingInterval> out;
  descartes_rec(q, b, 0, 0, out);
  return out;
}

}  // namespace

namespace detail {

std::vector<IsolatingInterval> isolate_squarefree(ZPoly p) {
  std::vector<IsolatingInterval> out;
  if (degree(p) <= 0) return out;
  // A root at 0 stays in p so that neighbouring intervals avoid it.
  bool zero_root = p.front() == 0;
  Rational b = cauchy_bound(to_unipoly(p));
  ZPoly neg = p;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  auto negatives = positive_roots(neg, b);
  for (auto it = negatives.rbegin(); it != negatives.rend(); ++it) {
    if (it->exact_hit) out.push_back({-it->hi, -it->lo, -*it->exact_hit});
    else out.push_back({-it->hi, -it->lo, std::nullopt});
  }
  if (zero_root) out.push_back({0, 0, Rational(0)});
  for (auto& iv : positive_roots(p, b)) out.push_back(std::move(iv));
  return out;
}

}  // namespace detail

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  if (p.is_constant()) return {};
  return detail::isolate_squarefree(detail::to_primitive(squarefree_part(p)));
}

namespace detail {

IsolatingInterval refine_z(const ZPoly& p, IsolatingInterval iv, const Rational& width) {
  if (iv.exact_hit) return iv;
  int slo = sign_at(p, iv.lo);
  int shi = sign_at(p, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi) throw std::domain_error("refine: interval does not bracket a simple root");
  while (iv.hi - iv.lo > width) {
    Rational mid = realeig::midpoint(iv.lo, iv.hi);
    int s = sign_at(p, mid);
    if (s == 0) return {mid, mid, mid};
    if (s == slo) iv.lo = mid;
    else iv.hi = mid;
  }
  return iv;
}

}  // namespace detail

IsolatingInterval refine(const UniPoly& p, IsolatingInterval iv, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("refine: zero polynomial");
  if (iv.lo > iv.hi) throw std::domain_error("refine: empty interval");
  return detail::refine_z(detail::to_primitive(p), std::move(iv), width);
}

int count_projective_real_roots(const Form& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("count_projective_real_roots: need a binary form");
  if (f.is_zero()) throw std::domain_error("count_projective_real_roots: zero form");
  BinaryChart c = dehomogenize_binary(f, 1);
  int n = c.poly.is_constant() ? 0 : sturm_count(c.poly);
  return n + (c.drop > 0 ? 1 : 0);
}

RootIsolator::RootIsolator(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("RootIsolator: zero polynomial");
  if (p.is_constant()) return;
  base_ = detail::to_primitive(squarefree_part(p));
  roots_ = detail::isolate_squarefree(base_);
}

IsolatingInterval RootIsolator::refine(const IsolatingInterval& iv, const Rational& width) const {
  return detail::refine_z(base_, iv, width);
}

}  // namespace realeig
