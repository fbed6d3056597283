#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "realeig/eigen.hpp"
#include "realeig/errors.hpp"
#include "realeig/experiments.hpp"
#include "realeig/parser.hpp"
#include "realeig/realroots.hpp"
#include "realeig/topology.hpp"

using namespace realeig;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kDegenerate = 3, kGenericity = 4, kInternal = 5 };

struct Common {
  std::string homogenize;
  std::uint64_t seed = 0;
};

std::uint64_t default_seed() {
  const char* s = std::getenv("REALEIG_SEED");
  if (!s || !*s) return 0;
  return std::stoull(s);
}

Form read_form(const std::string& expr, const Common& c) {
  ParseOptions po;
  if (!c.homogenize.empty()) po.homogenize = c.homogenize[0];
  return parse_form(expr, po);
}

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json topology_json(const CurveTopology& t) {
  json j;
  j["components"] = t.components;
  j["ovals"] = t.ovals;
  j["pseudoline"] = t.has_pseudoline;
  j["nested"] = t.nested();
  j["max_depth"] = t.ovals ? t.max_depth() : 0;
  j["parent"] = t.parent;
  j["smooth_certified"] = t.smooth_certified;
  return j;
}

json morse_json(const MorseCounts& m) {
  return {{"c0", m.c0}, {"c1", m.c1}, {"c2", m.c2}, {"non_morse", m.non_morse}, {"euler", m.euler()}};
}

json verdict_json(const BoundVerdict& v) {
  json j;
  j["pass"] = v.pass;
  j["skipped"] = v.skipped;
  if (v.q) j["q"] = *v.q;
  if (v.c) j["c"] = *v.c;
  j["violations"] = v.violations;
  return j;
}

json point_json(const EigenPoint& p) {
  json j;
  j["unit"] = p.unit;
  j["eigenvalue"] = p.eigenvalue;
  j["multiplicity"] = p.solution.multiplicity();
  if (p.morse_index) j["morse_index"] = *p.morse_index;
  if (p.antipode_morse_index) j["antipode_morse_index"] = *p.antipode_morse_index;
  return j;
}

struct Analysis {
  Form form;
  EigenReport report;
  std::optional<int> q;
  std::optional<CurveTopology> topo;
  bool singular = false;
  BoundVerdict verdict;
  json timings = json::object();
};

// Full pipeline shared by eigencount and verify.
Analysis analyze(const std::string& expr, const Common& c, bool morse) {
  Stopwatch sw;
  Analysis a{read_form(expr, c), {}, {}, {}, false, {}, json::object()};
  a.timings["parse"] = sw.lap_ms();
  const Form& f = a.form;
  if (f.num_vars() == 2) {
    a.report = real_eigen_count_binary(f);
    a.timings["eigen"] = sw.lap_ms();
    a.q = count_projective_real_roots(f);
    a.timings["roots"] = sw.lap_ms();
    a.verdict = verify_bounds(f, a.report);
  } else {
    a.report = real_eigen_count_ternary(f, {.seed = c.seed});
    a.timings["eigen"] = sw.lap_ms();
    a.singular = !assert_smooth(f, c.seed);
    if (!a.singular) {
      a.topo = count_components(f, {.seed = c.seed, .check_smooth = false});
      a.topo->smooth_certified = true;
    }
    a.timings["topology"] = sw.lap_ms();
    if (morse && !a.report.degenerate) {
      a.report.morse = classify_critical_points(f, a.report);
      a.timings["morse"] = sw.lap_ms();
    }
    a.verdict = verify_bounds(f, a.report, a.topo ? &*a.topo : nullptr);
  }
  return a;
}

int cmd_eigencount(const std::string& expr, const Common& c, bool morse, bool points, const std::string& name) {
  Analysis a = analyze(expr, c, morse);
  const EigenReport& r = a.report;
  json j;
  j["command"] = name;
  j["input"] = expr;
  j["homogenize"] = c.homogenize.empty() ? json(nullptr) : json(c.homogenize);
  j["seed"] = c.seed;
  j["form"] = print_form(a.form);
  j["n"] = r.n;
  j["d"] = r.d;
  j["t"] = r.degenerate ? json(nullptr) : json(r.t());
  j["expected_complex"] = r.expected_complex;
  j["complex_count"] = r.complex_count;
  j["degenerate"] = r.degenerate;
  if (a.q) j["q"] = *a.q;
  if (a.form.num_vars() == 3) {
    j["singular"] = a.singular;
    j["topology"] = a.topo ? topology_json(*a.topo) : json(nullptr);
  }
  j["morse"] = r.morse ? morse_json(*r.morse) : json(nullptr);
  j["verdict"] = verdict_json(a.verdict);
  if (points) {
    json pts = json::array();
    for (const auto& p : r.real_points) pts.push_back(point_json(p));
    j["eigenpoints"] = pts;
  }
  j["timings_ms"] = a.timings;
  std::cout << j.dump(2) << "\n";
  if (r.degenerate) return kDegenerate;
  if (name == "verify" && !a.verdict.pass) return kDegenerate;
  return kOk;
}

int cmd_roots(const std::string& expr, const Common& c) {
  Form f = read_form(expr, c);
  if (f.num_vars() != 2) throw CLI::ValidationError("roots", "needs a binary form");
  if (f.is_zero()) throw InputError("zero form");
  BinaryChart chart = dehomogenize_binary(f, 1);
  json roots = json::array();
  if (!chart.poly.is_constant()) {
    RootIsolator iso(chart.poly);
    for (const auto& iv : iso.roots()) {
      IsolatingInterval r = iso.refine(iv, Rational(1, 1 << 30));
      json e;
      e["x_over_y"] = to_double(r.exact_hit ? *r.exact_hit : midpoint(r.lo, r.hi));
      e["lo"] = r.lo.get_str();
      e["hi"] = r.hi.get_str();
      e["exact"] = r.exact_hit.has_value();
      roots.push_back(e);
    }
  }
  json j;
  j["command"] = "roots";
  j["input"] = expr;
  j["form"] = print_form(f);
  j["q"] = static_cast<int>(roots.size()) + (chart.drop > 0 ? 1 : 0);
  j["root_at_infinity"] = chart.drop > 0;
  j["roots"] = roots;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_topology(const std::string& expr, const Common& c) {
  Form f = read_form(expr, c);
  if (f.num_vars() != 3) throw CLI::ValidationError("topology", "needs a ternary form");
  Stopwatch sw;
  CurveTopology t = count_components(f, {.seed = c.seed});
  json j;
  j["command"] = "topology";
  j["input"] = expr;
  j["seed"] = c.seed;
  j["form"] = print_form(f);
  j["d"] = f.degree();
  j["topology"] = topology_json(t);
  j["harnack"] = harnack_check(f.degree(), t);
  j["timings_ms"] = {{"topology", sw.lap_ms()}};
  std::cout << j.dump(2) << "\n";
  return kOk;
}

struct TableArgs {
  int n = 2;
  int d = 4;
  long count = 1000;
  int bits = 53;
  std::string condition = "q";
  std::string format = "csv";
  int threads = 1;
  std::string out;
};

int cmd_table(const TableArgs& t, const Common& c) {
  SampleSpec spec{t.n, t.d, t.count, c.seed, t.bits};
  Conditioner cond = t.condition == "c" ? Conditioner::Ovals : Conditioner::RealRoots;
  if ((cond == Conditioner::Ovals) != (t.n == 3))
    throw CLI::ValidationError("--condition", "q needs --n 2 and c needs --n 3");
  TableOptions options;
  options.threads = t.threads;
  TableResult r = run_table(spec, cond, options);
  std::string text = t.format == "json" ? r.to_json() + "\n" : r.to_csv();
  if (t.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(t.out);
    if (!os) throw std::runtime_error("cannot write " + t.out);
    os << text;
  }
  return kOk;
}

int cmd_gallery(bool run, const std::string& only) {
  json list = json::array();
  bool all_ok = true;
  for (const auto& e : gallery()) {
    if (!only.empty() && e.name != only) continue;
    json j;
    j["name"] = e.name;
    j["form"] = print_form(e.form);
    j["source"] = e.source;
    j["expected_c"] = e.expected_c ? json(*e.expected_c) : json(nullptr);
    j["expected_nested"] = e.expected_nested ? json(*e.expected_nested) : json(nullptr);
    j["expected_t"] = e.expected_t ? json(*e.expected_t) : json(nullptr);
    j["singular"] = e.singular;
    if (run && !e.base_only) {
      EigenReport r = real_eigen_count_ternary(e.form);
      j["t"] = r.degenerate ? json(nullptr) : json(r.t());
      bool ok = r.degenerate ? e.singular : r.t() == *e.expected_t;
      if (!e.singular) {
        CurveTopology topo = count_components(e.form);
        j["c"] = topo.ovals;
        j["nested"] = topo.nested();
        ok = ok && topo.ovals == *e.expected_c;
        if (e.expected_nested) ok = ok && topo.nested() == *e.expected_nested;
      }
      j["match"] = ok;
      all_ok = all_ok && ok;
    }
    list.push_back(j);
  }
  if (!only.empty() && list.empty()) throw CLI::ValidationError("--name", "no gallery entry " + only);
  std::cout << list.dump(2) << "\n";
  return all_ok ? kOk : kDegenerate;
}

int cmd_fourier(int t, const std::string& s, int d, const std::string& parity) {
  FourierSpec spec;
  spec.t = t;
  spec.s = parse_rational(s);
  spec.d = d;
  spec.parity = parity == "odd" ? Parity::Odd : Parity::Even;
  Form f = fourier_binary(spec);
  EigenReport r = real_eigen_count_binary(f);
  json j;
  j["command"] = "fourier";
  j["spec"] = {{"t", t}, {"s", s}, {"d", d}, {"parity", parity}};
  j["form"] = print_form(f);
  j["q"] = count_projective_real_roots(f);
  j["t"] = r.t();
  std::cout << j.dump(2) << "\n";
  return kOk;
}

struct PlotArgs {
  std::string out;
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  int resolution = 400;
  int size = 600;
};

class Svg {
 public:
  Svg(const PlotArgs& p) : p_(p) {
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << p.size << "\" height=\"" << p.size
        << "\" viewBox=\"0 0 " << p.size << " " << p.size << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  double sx(double x) const { return (x - p_.xmin) / (p_.xmax - p_.xmin) * p_.size; }
  double sy(double y) const { return (p_.ymax - y) / (p_.ymax - p_.ymin) * p_.size; }
  void line(double x0, double y0, double x1, double y1, const char* color, double w = 1.5) {
    os_ << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(x1) << "\" y2=\"" << sy(y1)
        << "\" stroke=\"" << color << "\" stroke-width=\"" << w << "\"/>\n";
  }
  void dot(double x, double y, const char* color) {
    os_ << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
  }
  void path(const std::vector<std::pair<double, double>>& pts, const char* color) {
    os_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : pts) os_ << sx(x) << "," << sy(y) << " ";
    os_ << "\"/>\n";
  }
  void text(const std::string& s) {
    os_ << "<text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"13\">" << s << "</text>\n";
  }
  std::string str() { return os_.str() + "</svg>\n"; }

 private:
  PlotArgs p_;
  std::ostringstream os_;
};

std::string escape(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '<') r += "&lt;";
    else if (ch == '>') r += "&gt;";
    else if (ch == '&') r += "&amp;";
    else r += ch;
  }
  return r;
}

// Marching squares on the affine chart z = 1.
void plot_curve(Svg& svg, const Form& f, const PlotArgs& p) {
  const int n = p.resolution;
  const double hx = (p.xmax - p.xmin) / n;
  const double hy = (p.ymax - p.ymin) / n;
  std::vector<double> v((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      double pt[3] = {p.xmin + i * hx, p.ymin + k * hy, 1.0};
      v[i * (n + 1) + k] = f.evaluate(std::span<const double>(pt, 3));
    }
  auto at = [&](int i, int k) { return v[i * (n + 1) + k]; };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double x[4] = {p.xmin + i * hx, p.xmin + (i + 1) * hx, p.xmin + (i + 1) * hx, p.xmin + i * hx};
      const double y[4] = {p.ymin + k * hy, p.ymin + k * hy, p.ymin + (k + 1) * hy, p.ymin + (k + 1) * hy};
      const double w[4] = {at(i, k), at(i + 1, k), at(i + 1, k + 1), at(i, k + 1)};
      std::vector<std::pair<double, double>> cut;
      for (int e = 0; e < 4; ++e) {
        int e2 = (e + 1) % 4;
        if ((w[e] < 0) != (w[e2] < 0)) {
          double s = w[e] / (w[e] - w[e2]);
          cut.emplace_back(x[e] + s * (x[e2] - x[e]), y[e] + s * (y[e2] - y[e]));
        }
      }
      if (cut.size() >= 2) svg.line(cut[0].first, cut[0].second, cut[1].first, cut[1].second, "black");
      if (cut.size() == 4) svg.line(cut[2].first, cut[2].second, cut[3].first, cut[3].second, "black");
    }
}

int cmd_plot(const std::string& expr, const Common& c, const PlotArgs& p) {
  if (p.xmin >= p.xmax || p.ymin >= p.ymax) throw CLI::ValidationError("viewport", "empty viewport");
  if (p.resolution < 2) throw CLI::ValidationError("--resolution", "must be at least 2");
  Form f = read_form(expr, c);
  EigenReport r = real_eigen_count(f, {.seed = c.seed});
  if (r.degenerate) throw InputError("eigen system is degenerate");
  Svg svg(p);
  svg.line(p.xmin, 0, p.xmax, 0, "#ccc", 1);
  svg.line(0, p.ymin, 0, p.ymax, "#ccc", 1);
  if (f.num_vars() == 3) {
    plot_curve(svg, f, p);
    for (const auto& e : r.real_points) {
      const auto& u = e.unit;
      if (std::abs(u[2]) < 1e-12) continue;
      double x = u[0] / u[2], y = u[1] / u[2];
      if (x >= p.xmin && x <= p.xmax && y >= p.ymin && y <= p.ymax) svg.dot(x, y, "red");
    }
  } else {
    // Polar plot of 1 + f/(2 max|f|) on the unit circle, with eigenvector lines.
    const int n = std::max(p.resolution, 64);
    std::vector<double> vals(n + 1);
    double m = 0;
    for (int i = 0; i <= n; ++i) {
      double a = 2 * M_PI * i / n;
      double pt[2] = {std::cos(a), std::sin(a)};
      vals[i] = f.evaluate(std::span<const double>(pt, 2));
      m = std::max(m, std::abs(vals[i]));
    }
    std::vector<std::pair<double, double>> circle, polar;
    for (int i = 0; i <= n; ++i) {
      double a = 2 * M_PI * i / n;
      double rad = 1 + (m > 0 ? vals[i] / (2 * m) : 0);
      circle.emplace_back(std::cos(a), std::sin(a));
      polar.emplace_back(rad * std::cos(a), rad * std::sin(a));
    }
    svg.path(circle, "#999");
    svg.path(polar, "black");
    const double len = 2 * std::max({std::abs(p.xmin), p.xmax, std::abs(p.ymin), p.ymax});
    for (const auto& e : r.real_points) svg.line(-len * e.unit[0], -len * e.unit[1], len * e.unit[0], len * e.unit[1], "red", 1);
  }
  svg.text(escape(print_form(f)) + "  t=" + std::to_string(r.t()));
  std::ofstream os(p.out);
  if (!os) throw std::runtime_error("cannot write " + p.out);
  os << svg.str();
  json j;
  j["command"] = "plot";
  j["input"] = expr;
  j["form"] = print_form(f);
  j["t"] = r.t();
  j["out"] = p.out;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real eigenvectors of binary and ternary forms"};
  app.require_subcommand(1);
  Common common;
  try {
    common.seed = default_seed();
  } catch (const std::exception&) {
    std::cerr << "error: REALEIG_SEED must be an unsigned integer\n";
    return kUsage;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--homogenize", common.homogenize, "Homogenize affine input with this variable (y or z)")
        ->check(CLI::IsMember({"y", "z"}));
    sub->add_option("--seed", common.seed, "Seed for random charts (default $REALEIG_SEED or 0)");
  };

  std::string expr;
  bool morse = false;
  bool points = false;
  auto* eig = app.add_subcommand("eigencount", "Count real eigenvectors");
  eig->add_option("expr", expr, "Form, e.g. \"x^3+y^3+z^3\"")->required();
  eig->add_flag("--morse", morse, "Classify critical points on the sphere");
  eig->add_flag("--points", points, "List the eigenpoints");
  add_common(eig);

  auto* ver = app.add_subcommand("verify", "Check the eigenvector bounds");
  ver->add_option("expr", expr)->required();
  ver->add_flag("--morse", morse);
  ver->add_flag("--points", points);
  add_common(ver);

  auto* roots = app.add_subcommand("roots", "Real roots of a binary form");
  roots->add_option("expr", expr)->required();
  add_common(roots);

  auto* topo = app.add_subcommand("topology", "Ovals, pseudo-line and nesting of a ternary curve");
  topo->add_option("expr", expr)->required();
  add_common(topo);

  TableArgs targs;
  auto* table = app.add_subcommand("table", "Monte Carlo table of t against q or c");
  table->add_option("--n", targs.n)->check(CLI::IsMember({2, 3}));
  table->add_option("--d", targs.d)->check(CLI::Range(1, 12));
  table->add_option("--count", targs.count)->check(CLI::PositiveNumber);
  table->add_option("--seed", common.seed);
  table->add_option("--bits", targs.bits, "Significant bits per coefficient")->check(CLI::Range(8, 200));
  table->add_option("--condition", targs.condition)->check(CLI::IsMember({"q", "c"}));
  table->add_option("--format", targs.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--threads", targs.threads)->check(CLI::Range(1, 256));
  table->add_option("--out", targs.out, "Output file (default stdout)");

  bool run = false;
  std::string name;
  auto* gal = app.add_subcommand("gallery", "List or rerun the curve gallery");
  gal->add_flag("--run", run, "Recompute t, c and nesting");
  gal->add_option("--name", name, "Single entry");

  int ft = 4, fd = 4;
  std::string fs = "1/10", parity = "even";
  auto* four = app.add_subcommand("fourier", "Binary form with prescribed t from a trigonometric polynomial");
  four->add_option("--t", ft)->required();
  four->add_option("--s", fs, "Rational amplitude");
  four->add_option("--d", fd)->required();
  four->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));

  PlotArgs pargs;
  auto* plot = app.add_subcommand("plot", "SVG of the affine curve with eigenpoints");
  plot->add_option("expr", expr)->required();
  plot->add_option("--out", pargs.out)->required();
  plot->add_option("--xmin", pargs.xmin);
  plot->add_option("--xmax", pargs.xmax);
  plot->add_option("--ymin", pargs.ymin);
  plot->add_option("--ymax", pargs.ymax);
  plot->add_option("--resolution", pargs.resolution, "Grid cells per side");
  plot->add_option("--size", pargs.size, "Image size in pixels")->check(CLI::Range(16, 10000));
  add_common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eig) return cmd_eigencount(expr, common, morse, points, "eigencount");
    if (*ver) return cmd_eigencount(expr, common, morse, points, "verify");
    if (*roots) return cmd_roots(expr, common);
    if (*topo) return cmd_topology(expr, common);
    if (*table) return cmd_table(targs, common);
    if (*gal) return cmd_gallery(run, name);
    if (*four) return cmd_fourier(ft, fs, fd, parity);
    if (*plot) return cmd_plot(expr, common, pargs);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const GenericityError& e) {
    std::cerr << "genericity error: " << e.what() << "\n";
    return kGenericity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
