#include "realeig/experiments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "realeig/errors.hpp"
#include "realeig/realroots.hpp"

namespace realeig {

namespace {

double multinomial(int d, const Exponent& e) {
  double r = std::tgamma(d + 1.0);
  for (int k : e) r /= std::tgamma(k + 1.0);
  return r;
}

std::vector<Exponent> monomials(int n, int d) {
  std::vector<Exponent> out;
  for (int i = d; i >= 0; --i) {
    if (n == 2) {
      out.push_back({i, d - i, 0});
      continue;
    }
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  }
  return out;
}

Form bombieri(SplitMix64& rng, int n, int d, int bits) {
  std::map<Exponent, Rational> terms;
  for (const auto& e : monomials(n, d)) {
    double c = std::sqrt(multinomial(d, e)) * rng.normal();
    terms[e] = round_to_rational(c, bits);
  }
  return Form(n, d, terms);
}

}  // namespace

Form sample_bombieri(const SampleSpec& spec, std::uint64_t index) {
  if (spec.n != 2 && spec.n != 3) throw std::invalid_argument("sample_bombieri: n must be 2 or 3");
  if (spec.d < 1) throw std::invalid_argument("sample_bombieri: d must be positive");
  SplitMix64 rng = stream_for(spec.seed, index);
  return bombieri(rng, spec.n, spec.d, spec.rational_precision_bits);
}

std::vector<Form> sample_bombieri(const SampleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("sample_bombieri: count must be positive");
  std::vector<Form> out;
  out.reserve(spec.count);
  for (long i = 0; i < spec.count; ++i) out.push_back(sample_bombieri(spec, i));
  return out;
}

SampleOutcome evaluate_sample(const Form& f, Conditioner cond, const PipelineOptions& options) {
  SampleOutcome out;
  auto reject = [&](std::string why) {
    out.rejected = true;
    out.reject_reason = std::move(why);
    return out;
  };
  try {
    if (f.num_vars() == 2) {
      if (cond != Conditioner::RealRoots) throw std::invalid_argument("binary forms are conditioned on q");
      EigenReport r = real_eigen_count_binary(f);
      if (r.degenerate) return reject("degenerate");
      out.t = r.t();
      out.verdict = verify_bounds(f, r);
      out.row = *out.verdict.q;
      return out;
    }
    if (cond != Conditioner::Ovals) throw std::invalid_argument("ternary forms are conditioned on c");
    CurveTopology topo = count_components(f, {.seed = options.seed});
    EigenReport r = real_eigen_count_ternary(f, {.seed = options.seed});
    if (r.degenerate) return reject("degenerate");
    out.row = topo.ovals;
    out.nested = topo.nested();
    out.t = r.t();
    out.verdict = verify_bounds(f, r, &topo);
    if (options.morse) out.morse = classify_critical_points(f, r);
    return out;
  } catch (const InputError&) {
    return reject("singular");
  } catch (const GenericityError&) {
    return reject("genericity exhausted");
  }
}

Interval wilson_interval(long k, long n, double z) {
  if (n <= 0) return {0.0, 1.0};
  double p = static_cast<double>(k) / n;
  double z2 = z * z;
  double denom = 1 + z2 / n;
  double centre = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

long TableResult::accepted() const {
  long s = 0;
  for (const auto& [row, cols] : counts)
    for (const auto& [t, n] : cols) s += n;
  return s;
}

long TableResult::row_total(int row) const {
  auto it = counts.find(row);
  if (it == counts.end()) return 0;
  long s = 0;
  for (const auto& [t, n] : it->second) s += n;
  return s;
}

long TableResult::column_total(int t) const {
  long s = 0;
  for (const auto& [row, cols] : counts) {
    auto it = cols.find(t);
    if (it != cols.end()) s += it->second;
  }
  return s;
}

long TableResult::count(int row, int t) const {
  auto it = counts.find(row);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(t);
  return jt == it->second.end() ? 0 : jt->second;
}

double TableResult::probability(int row, int t) const {
  long n = row_total(row);
  return n == 0 ? 0.0 : static_cast<double>(count(row, t)) / n;
}

double TableResult::marginal(int t) const {
  long n = accepted();
  return n == 0 ? 0.0 : static_cast<double>(column_total(t)) / n;
}

double TableResult::mean_t() const {
  long n = accepted();
  if (n == 0) return 0.0;
  double s = 0;
  for (const auto& [row, cols] : counts)
    for (const auto& [t, k] : cols) s += static_cast<double>(t) * k;
  return s / n;
}

namespace {

std::vector<int> t_values(const TableResult& r) {
  std::vector<int> ts;
  int d = r.spec.d;
  if (r.spec.n == 2) {
    for (int t = d % 2; t <= d; t += 2) ts.push_back(t);
  } else {
    for (int t = 1; t <= d * d - d + 1; t += 2) ts.push_back(t);
  }
  for (const auto& [row, cols] : r.counts)
    for (const auto& [t, n] : cols)
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  return ts;
}

}  // namespace

std::string TableResult::to_csv() const {
  std::ostringstream os;
  os << "row_label,col_label,count,probability,ci_low,ci_high\n";
  os.precision(6);
  os << std::fixed;
  for (const auto& [row, cols] : counts) {
    long n = row_total(row);
    for (int t : t_values(*this)) {
      long k = count(row, t);
      Interval ci = wilson_interval(k, n);
      os << row_label() << "=" << row << ",t=" << t << "," << k << "," << probability(row, t) << "," << ci.lo << ","
         << ci.hi << "\n";
    }
  }
  long n = accepted();
  for (int t : t_values(*this)) {
    long k = column_total(t);
    Interval ci = wilson_interval(k, n);
    os << "all,t=" << t << "," << k << "," << marginal(t) << "," << ci.lo << "," << ci.hi << "\n";
  }
  os << "rejected,," << rejected << ",,,\n";
  return os.str();
}

std::string TableResult::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["config"] = {{"n", spec.n},
                 {"d", spec.d},
                 {"count", spec.count},
                 {"seed", spec.seed},
                 {"rational_precision_bits", spec.rational_precision_bits},
                 {"condition", row_label()}};
  ordered_json rows = ordered_json::array();
  for (const auto& [row, cols] : counts) {
    long n = row_total(row);
    for (int t : t_values(*this)) {
      long k = count(row, t);
      Interval ci = wilson_interval(k, n);
      rows.push_back({{"row_label", row_label() + "=" + std::to_string(row)},
                      {"col_label", "t=" + std::to_string(t)},
                      {"count", k},
                      {"probability", probability(row, t)},
                      {"ci_low", ci.lo},
                      {"ci_high", ci.hi}});
    }
  }
  j["rows"] = rows;
  ordered_json marg = ordered_json::array();
  for (int t : t_values(*this)) {
    Interval ci = wilson_interval(column_total(t), accepted());
    marg.push_back({{"row_label", "all"},
                    {"col_label", "t=" + std::to_string(t)},
                    {"count", column_total(t)},
                    {"probability", marginal(t)},
                    {"ci_low", ci.lo},
                    {"ci_high", ci.hi}});
  }
  j["marginal"] = marg;
  j["accepted"] = accepted();
  j["rejected"] = rejected;
  j["reject_reasons"] = reject_reasons;
  j["violations"] = violations;
  j["mean_t"] = mean_t();
  return j.dump(2);
}

TableResult run_table(const SampleSpec& spec, Conditioner cond, const TableOptions& options) {
  if (spec.count < 1) throw std::invalid_argument("run_table: count must be positive");
  if (cond == Conditioner::Ovals && spec.n != 3) throw std::invalid_argument("run_table: c needs n = 3");
  if (cond == Conditioner::RealRoots && spec.n != 2) throw std::invalid_argument("run_table: q needs n = 2");
  TableResult result;
  result.spec = spec;
  result.conditioner = cond;
  std::mutex mu;
  std::atomic<long> next{0};
  std::atomic<long> done{0};
  auto worker = [&] {
    TableResult local;
    for (long i = next++; i < spec.count; i = next++) {
      Form f = sample_bombieri(spec, i);
      SampleOutcome o = evaluate_sample(f, cond, {.seed = spec.seed + static_cast<std::uint64_t>(i)});
      if (o.rejected) {
        ++local.rejected;
        ++local.reject_reasons[o.reject_reason];
      } else {
        ++local.counts[o.row][o.t];
        if (!o.verdict.pass) ++local.violations;
      }
      long k = ++done;
      if (options.progress) {
        std::lock_guard lock(mu);
        options.progress(k);
      }
    }
    std::lock_guard lock(mu);
    for (const auto& [row, cols] : local.counts)
      for (const auto& [t, n] : cols) result.counts[row][t] += n;
    result.rejected += local.rejected;
    result.violations += local.violations;
    for (const auto& [why, n] : local.reject_reasons) result.reject_reasons[why] += n;
  };
  int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return result;
}

namespace {

// Real and imaginary parts of (x + i y)^k.
std::pair<Form, Form> complex_power(int k) {
  Form re = Form::constant(2, 1);
  Form im(2, 0);
  Form x = Form::variable(2, 0);
  Form y = Form::variable(2, 1);
  for (int i = 0; i < k; ++i) {
    Form nre = re * x - im * y;
    Form nim = re * y + im * x;
    re = nre;
    im = nim;
  }
  return {re, im};
}

// (1 + cos 2θ / 2) + s (cos kθ + sin kθ) as a form of even degree k.
Form even_fourier(int k, const Rational& s) {
  Form x = Form::variable(2, 0);
  Form y = Form::variable(2, 1);
  Form r2 = x * x + y * y;
  Form g = power(r2, k / 2);
  if (k >= 2) g += Rational(1, 2) * (x * x - y * y) * power(r2, (k - 2) / 2);
  auto [re, im] = complex_power(k);
  g += s * (re + im);
  return g;
}

}  // namespace

Form fourier_binary(const FourierSpec& spec) {
  if (spec.t < 1 || spec.t > spec.d) throw std::invalid_argument("fourier_binary: need 1 <= t <= d");
  if ((spec.d - spec.t) % 2 != 0) throw std::invalid_argument("fourier_binary: t and d differ in parity");
  bool odd = spec.t % 2 == 1;
  if (odd != (spec.parity == Parity::Odd)) throw std::invalid_argument("fourier_binary: parity does not match t");
  if (!odd && spec.t < 2) throw std::invalid_argument("fourier_binary: even t must be at least 2");
  Form x = Form::variable(2, 0);
  Form y = Form::variable(2, 1);
  Form g = odd ? x * even_fourier(spec.t - 1, spec.s) : even_fourier(spec.t, spec.s);
  return g * power(x * x + y * y, (spec.d - spec.t) / 2);
}

Form perturb(const PerturbationSpec& spec) {
  if (spec.base.num_vars() != spec.g.num_vars() || spec.base.degree() != spec.g.degree())
    throw std::invalid_argument("perturb: base and g must have the same arity and degree");
  return spec.base + spec.epsilon * spec.g;
}

Form determinant(const FormMatrix& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return Form::constant(3, 1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("determinant: matrix is not square");
  const int nv = m[0][0].num_vars();
  // det over rows r.. and column set `mask`, expanded along row r.
  std::map<unsigned, Form> memo;
  std::function<Form(int, unsigned)> rec = [&](int r, unsigned mask) -> Form {
    if (r == k) return Form::constant(nv, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Form acc;
    bool started = false;
    int sign = 1;
    for (int c = 0; c < k; ++c) {
      if (!(mask & (1u << c))) continue;
      Form term = m[r][c] * rec(r + 1, mask & ~(1u << c));
      if (sign < 0) term = -term;
      if (!started) {
        acc = term;
        started = true;
      } else {
        acc += term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(0, (1u << k) - 1);
}

Form pencil_determinant(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c) {
  const size_t k = a.size();
  if (b.size() != k || c.size() != k) throw std::invalid_argument("pencil_determinant: size mismatch");
  FormMatrix m(k, std::vector<Form>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) m[i][j] = Form::linear(3, {a[i][j], b[i][j], c[i][j]});
  return determinant(m);
}

RationalMatrix identity_matrix(int k) {
  RationalMatrix m(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix random_symmetric(SplitMix64& rng, int k, int bits) {
  RationalMatrix m(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) m[i][j] = m[j][i] = round_to_rational(rng.normal(), bits);
  return m;
}

Form random_hyperbolic(SplitMix64& rng, int k, int bits) {
  RationalMatrix m2 = random_symmetric(rng, k, bits);
  RationalMatrix m3 = random_symmetric(rng, k, bits);
  return pencil_determinant(identity_matrix(k), m2, m3);
}

Form random_sos(SplitMix64& rng, int squares, int half, int bits) {
  Form acc(3, 2 * half);
  for (int i = 0; i < squares; ++i) {
    Form q = bombieri(rng, 3, half, bits);
    acc += q * q;
  }
  return acc;
}

Form random_real_linear_product(SplitMix64& rng, int d) {
  // Distinct roots [a : b] with small integer entries.
  std::vector<Rational> slopes;
  Form x = Form::variable(2, 0);
  Form y = Form::variable(2, 1);
  Form f = Form::constant(2, 1);
  bool vertical = false;
  while (static_cast<int>(slopes.size()) + (vertical ? 1 : 0) < d) {
    long a = rng.uniform_int(-9, 9);
    long b = rng.uniform_int(-9, 9);
    if (a == 0 && b == 0) continue;
    if (b == 0) {
      if (vertical) continue;
      vertical = true;
      f = f * y;
      continue;
    }
    Rational s(a, b);
    s.canonicalize();
    if (std::find(slopes.begin(), slopes.end(), s) != slopes.end()) continue;
    slopes.push_back(s);
    f = f * Form::linear(2, {Rational(b), Rational(-a), Rational(0)});
  }
  return f;
}

namespace {

Form parse_monomials(const std::vector<std::pair<Exponent, Rational>>& terms, int n, int d) {
  std::map<Exponent, Rational> m;
  for (const auto& [e, c] : terms) m[e] += c;
  return Form(n, d, m);
}

}  // namespace

Form motzkin() {
  return parse_monomials({{{4, 2, 0}, 1}, {{2, 4, 0}, 1}, {{0, 0, 6}, 1}, {{2, 2, 2}, -3}}, 3, 6);
}

Form robinson() {
  return parse_monomials({{{6, 0, 0}, 1},
                          {{0, 6, 0}, 1},
                          {{0, 0, 6}, 1},
                          {{4, 2, 0}, -1},
                          {{2, 4, 0}, -1},
                          {{4, 0, 2}, -1},
                          {{0, 4, 2}, -1},
                          {{2, 0, 4}, -1},
                          {{0, 2, 4}, -1},
                          {{2, 2, 2}, 3}},
                         3, 6);
}

Form choi_liu() {
  return parse_monomials({{{4, 2, 0}, 1}, {{0, 4, 2}, 1}, {{2, 0, 4}, 1}, {{2, 2, 2}, -3}}, 3, 6);
}

Form perturbed_sextic(const Form& base, SplitMix64& rng, const Rational& epsilon, int bits) {
  return perturb({base, random_sos(rng, 4, 3, bits), epsilon});
}

std::vector<std::array<double, 3>> numeric_eigenvectors(const Form& f, const NumericOracleOptions& options) {
  if (f.num_vars() != 3) throw std::invalid_argument("numeric_eigenvectors: need a ternary form");
  std::array<Form, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
  std::array<std::array<Form, 3>, 3> hess;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) hess[i][j] = grad[i].partial(j);
  const double d = f.degree();

  SplitMix64 rng(options.seed);
  std::vector<std::array<double, 3>> found;
  for (int s = 0; s < options.starts; ++s) {
    Eigen::Vector3d x(rng.normal(), rng.normal(), rng.normal());
    x.normalize();
    double lambda = d * f.evaluate(std::span<const double>(x.data(), 3));
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      std::span<const double> p(x.data(), 3);
      Eigen::Vector4d r;
      Eigen::Matrix4d jac = Eigen::Matrix4d::Zero();
      for (int i = 0; i < 3; ++i) {
        r[i] = grad[i].evaluate(p) - lambda * x[i];
        for (int j = 0; j < 3; ++j) jac(i, j) = hess[i][j].evaluate(p);
        jac(i, i) -= lambda;
        jac(i, 3) = -x[i];
        jac(3, i) = x[i];
      }
      r[3] = 0.5 * (x.squaredNorm() - 1.0);
      if (r.norm() < 1e-13) {
        converged = true;
        break;
      }
      Eigen::Vector4d step = jac.fullPivLu().solve(-r);
      if (!step.allFinite()) break;
      double scale = std::min(1.0, 0.5 / std::max(1e-300, step.head<3>().norm()));
      x += scale * step.head<3>();
      lambda += scale * step[3];
    }
    if (!converged) continue;
    x.normalize();
    int big = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(x[i]) > std::abs(x[big])) big = i;
    if (x[big] < 0) x = -x;
    std::array<double, 3> v{x[0], x[1], x[2]};
    bool dup = false;
    for (const auto& w : found) {
      double dist = std::hypot(v[0] - w[0], v[1] - w[1], v[2] - w[2]);
      double anti = std::hypot(v[0] + w[0], v[1] + w[1], v[2] + w[2]);
      if (std::min(dist, anti) < options.cluster_tolerance) dup = true;
    }
    if (!dup) found.push_back(v);
  }
  return found;
}

}  // namespace realeig
