#include "realeig/topology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "realeig/errors.hpp"
#include "realeig/random.hpp"
#include "realeig/realroots.hpp"
#include "realeig/system.hpp"

namespace realeig {

int CurveTopology::depth(int i) const {
  int k = 0;
  for (int p = parent.at(i); p >= 0; p = parent.at(p)) ++k;
  return k;
}

int CurveTopology::max_depth() const {
  int m = 0;
  for (int i = 0; i < ovals; ++i) m = std::max(m, depth(i));
  return m;
}

bool CurveTopology::nested() const {
  return std::any_of(parent.begin(), parent.end(), [](int p) { return p >= 0; });
}

bool harnack_check(int d, int components) {
  int lo = d % 2 == 1 ? 1 : 0;
  int hi = (d - 1) * (d - 2) / 2 + 1;
  return components >= lo && components <= hi;
}

bool harnack_check(int d, const CurveTopology& topo) { return harnack_check(d, topo.components); }

bool assert_smooth(const Form& f, std::uint64_t seed) {
  if (f.num_vars() != 3) throw std::invalid_argument("assert_smooth: need a ternary form");
  if (f.is_zero()) throw std::domain_error("assert_smooth: zero form");
  if (f.degree() <= 1) return true;
  SystemSolution s = solve_ternary_system({f.partial(0), f.partial(1), f.partial(2)}, seed);
  return !s.degenerate && s.real.empty();
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

struct Chart {
  Form form;   // f in chart coordinates
  BiPoly affine;
  int real_at_infinity = 0;
};

std::optional<Chart> make_chart(const Form& f, SplitMix64& rng, int attempt, bool want_empty_infinity) {
  const int d = f.degree();
  Matrix3 s;
  int scale = 4 + attempt % 8;
  for (int j = 0; j < 3; ++j) {
    s[0][j] = rng.uniform_int(-3, 3);
    s[1][j] = rng.uniform_int(-3, 3);
  }
  s[2][0] = Rational(rng.uniform_int(-3, 3)) * pow2(-scale);
  s[2][1] = Rational(rng.uniform_int(-3, 3)) * pow2(-scale);
  s[2][2] = 1;
  if (determinant(s) == 0) return std::nullopt;
  Chart c;
  c.form = f.substitute(inverse(s));
  if (c.form.coeff({0, d, 0}) == 0) return std::nullopt;
  std::map<Exponent, Rational> terms;
  for (const auto& [e, v] : c.form.terms())
    if (e[2] == 0) terms[{e[0], e[1], 0}] = v;
  UniPoly q = dehomogenize_binary(Form(2, d, terms), 0).poly;  // F(1, m, 0)
  if (q.degree() != d) return std::nullopt;
  if (squarefree_part(q).degree() != d) return std::nullopt;
  c.real_at_infinity = sturm_count(q);
  if (want_empty_infinity && c.real_at_infinity > 0) return std::nullopt;
  c.affine = dehomogenize_ternary(c.form, 2).poly;
  return c;
}

int real_root_count(const UniPoly& p) { return p.is_constant() ? 0 : sturm_count(p); }

int roots_below(const UniPoly& p, const Rational& y) { return p.is_constant() ? 0 : sturm_count(p, std::nullopt, y); }

struct Fold {
  bool many_left = false;
  int merge_rank = 0;
};

// Certifies that near critical value x0 (isolated by iv) the two branches of
// rank k, k+1 on the side with more branches merge, and returns k.
std::optional<Fold> certify_fold(const BiPoly& p, const detail::ZPoly& disc, const IsolatingInterval& iv,
                                 const UniPoly& s0, const UniPoly& s1, const Rational& left_limit,
                                 const Rational& right_limit) {
  for (int k = 4; k <= 64; k += 6) {
    Rational w = pow2(-3 * k);
    Rational r = pow2(-k);
    Rational a;
    Rational b;
    Rational xm;
    if (iv.is_exact()) {
      xm = *iv.exact_hit;
      a = xm - w;
      b = xm + w;
    } else {
      IsolatingInterval ref = detail::refine_z(disc, iv, w);
      if (ref.is_exact()) {
        xm = *ref.exact_hit;
        a = xm - w;
        b = xm + w;
      } else {
        a = ref.lo;
        b = ref.hi;
        xm = midpoint(a, b);
      }
    }
    // (left_limit, right_limit) holds no other critical value.
    if (a <= left_limit || b >= right_limit) continue;
    if (detail::sign_at(disc, a) == 0 || detail::sign_at(disc, b) == 0) continue;
    Rational c1 = s1(xm);
    if (c1 == 0) continue;
    // Box centre: the double point, rounded to a short dyadic.
    Rational scaled = -s0(xm) / c1 * pow2(k + 2);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational y0 = Rational(fl) * pow2(-(k + 2));
    Rational ylo = y0 - r;
    Rational yhi = y0 + r;
    UniPoly pa = p.specialize(0, a);
    UniPoly pb = p.specialize(0, b);
    if (pa(ylo) == 0 || pa(yhi) == 0 || pb(ylo) == 0 || pb(yhi) == 0) continue;
    int in_a = sturm_count(pa, ylo, yhi);
    int in_b = sturm_count(pb, ylo, yhi);
    bool ok_edges = true;
    for (const Rational& yv : {ylo, yhi}) {
      UniPoly edge = p.specialize(1, yv);
      if (edge.is_zero() || (!edge.is_constant() && sturm_count(edge, a, b) != 0)) ok_edges = false;
    }
    if (!ok_edges) continue;
    Fold fold;
    if (in_a == 2 && in_b == 0) {
      fold.many_left = true;
      fold.merge_rank = roots_below(pa, ylo);
    } else if (in_a == 0 && in_b == 2) {
      fold.many_left = false;
      fold.merge_rank = roots_below(pb, ylo);
    } else {
      continue;
    }
    return fold;
  }
  return std::nullopt;
}

struct SweepResult {
  std::vector<int> slab_counts;
  std::vector<int> node_offset;  // first node of each slab
  int nodes = 0;
  // Lifted components on the sphere: node v of the upper hemisphere is v,
  // its antipodal copy is v + nodes.
  std::vector<int> lift;
  int lifted_components = 0;
};

std::optional<SweepResult> sweep(const Chart& chart) {
  const BiPoly& p = chart.affine;
  BiPoly py = p.partial(1);
  UniPoly disc = resultant_wrt(p, py, 1);
  if (disc.is_zero()) return std::nullopt;

  std::vector<IsolatingInterval> crit;
  UniPoly s0;
  UniPoly s1;
  detail::ZPoly dbase;
  if (!disc.is_constant()) {
    UniPoly sq = squarefree_part(disc);
    if (py.degree_in(1) == 1) {
      auto cs = py.coefficients_in(1);
      s0 = cs[0];
      s1 = cs[1];
    } else {
      auto sub = subresultant_wrt(p, py, 1, 1);
      s0 = sub[0];
      s1 = sub.size() > 1 ? sub[1] : UniPoly();
    }
    // One double point of the projection over each critical value.
    if (s1.is_zero() || gcd(sq, s1).degree() > 0) return std::nullopt;
    dbase = detail::to_primitive(sq);
    crit = isolate_real_roots(sq);
    // Separate neighbouring intervals strictly.
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t i = 0; i + 1 < crit.size(); ++i) {
        if (crit[i].hi < crit[i + 1].lo) continue;
        changed = true;
        for (size_t j : {i, i + 1})
          if (!crit[j].is_exact()) crit[j] = detail::refine_z(dbase, crit[j], crit[j].width() / 2);
      }
    }
  }

  const size_t nslabs = crit.size() + 1;
  std::vector<Rational> samples(nslabs);
  if (crit.empty()) {
    samples[0] = 0;
  } else {
    samples[0] = crit.front().lo - 1;
    samples[nslabs - 1] = crit.back().hi + 1;
    for (size_t i = 1; i < crit.size(); ++i) samples[i] = midpoint(crit[i - 1].hi, crit[i].lo);
  }

  SweepResult res;
  res.node_offset.assign(nslabs + 1, 0);
  for (size_t i = 0; i < nslabs; ++i) {
    int n = real_root_count(p.specialize(0, samples[i]));
    res.slab_counts.push_back(n);
    res.node_offset[i + 1] = res.node_offset[i] + n;
  }
  const int total = res.node_offset[nslabs];
  res.nodes = total;
  if (res.slab_counts.front() != chart.real_at_infinity || res.slab_counts.back() != chart.real_at_infinity)
    return std::nullopt;

  UnionFind uf(2 * total);
  auto node = [&](size_t slab, int rank, int side) { return res.node_offset[slab] + rank + side * total; };
  for (size_t i = 0; i < crit.size(); ++i) {
    auto fold = certify_fold(p, dbase, crit[i], s0, s1, samples[i], samples[i + 1]);
    if (!fold) return std::nullopt;
    size_t many = fold->many_left ? i : i + 1;
    size_t few = fold->many_left ? i + 1 : i;
    int k = fold->merge_rank;
    if (res.slab_counts[many] != res.slab_counts[few] + 2 || k + 1 >= res.slab_counts[many]) return std::nullopt;
    for (int side = 0; side < 2; ++side) {
      uf.unite(node(many, k, side), node(many, k + 1, side));
      for (int j = 0; j < res.slab_counts[few]; ++j)
        uf.unite(node(few, j, side), node(many, j < k ? j : j + 2, side));
    }
  }

  // The right end of rank j crosses the equator at (1, m_j, 0) and continues
  // as the antipodal copy of the left end of rank N-1-j.
  const int ninf = chart.real_at_infinity;
  for (int j = 0; j < ninf; ++j)
    for (int side = 0; side < 2; ++side) uf.unite(node(nslabs - 1, j, side), node(0, ninf - 1 - j, 1 - side));

  std::map<int, int> dense;
  res.lift.resize(2 * total);
  for (int v = 0; v < 2 * total; ++v) {
    int root = uf.find(v);
    auto it = dense.find(root);
    if (it == dense.end()) it = dense.emplace(root, static_cast<int>(dense.size())).first;
    res.lift[v] = it->second;
  }
  res.lifted_components = static_cast<int>(dense.size());
  return res;
}

}  // namespace

CurveTopology count_components(const Form& f, const TopologyOptions& options) {
  if (f.num_vars() != 3) throw std::invalid_argument("count_components: need a ternary form");
  if (f.is_zero()) throw std::domain_error("count_components: zero form");
  if (f.degree() == 0) throw InputError("count_components: constant form has no curve");
  CurveTopology topo;
  if (options.check_smooth) {
    if (!assert_smooth(f, options.seed)) throw InputError("count_components: curve is singular");
    topo.smooth_certified = true;
  }
  const int d = f.degree();
  SplitMix64 rng(options.seed ^ 0x2545F4914F6CDD1DULL);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    bool want_empty = d % 2 == 0 && attempt < 8;
    auto chart = make_chart(f, rng, attempt, want_empty);
    if (!chart) continue;
    auto sw = sweep(*chart);
    if (!sw) continue;

    const int total = sw->nodes;
    // A projective component lifts to one connected curve (pseudo-line) or
    // to two antipodal circles (oval).
    std::map<int, int> oval_of_lift;  // lifted class -> oval id
    std::vector<int> oval_of_node(total, -1);
    int ovals = 0;
    int pseudolines = 0;
    std::set<int> seen_pseudo;
    for (int v = 0; v < total; ++v) {
      int up = sw->lift[v];
      int down = sw->lift[v + total];
      if (up == down) {
        if (seen_pseudo.insert(up).second) ++pseudolines;
        continue;
      }
      auto it = oval_of_lift.find(up);
      if (it == oval_of_lift.end()) {
        oval_of_lift[up] = ovals;
        oval_of_lift[down] = ovals;
        it = oval_of_lift.find(up);
        ++ovals;
      }
      oval_of_node[v] = it->second;
    }
    if (pseudolines != (d % 2)) continue;

    topo.components = ovals + pseudolines;
    topo.ovals = ovals;
    topo.has_pseudoline = pseudolines == 1;
    topo.parent.assign(ovals, -1);
    if (ovals >= 2) {
      // For a point r of oval B on the upper hemisphere, walk the vertical
      // great circle from r to -r; B lies inside A iff the walk crosses one
      // lift of A an odd number of times.
      std::vector<std::vector<int>> contains(ovals);
      std::vector<bool> done(ovals, false);
      for (size_t s = 0; s + 1 < sw->node_offset.size(); ++s) {
        const int off = sw->node_offset[s];
        for (int j = 0; j < sw->slab_counts[s]; ++j) {
          int b = oval_of_node[off + j];
          if (b < 0 || done[b]) continue;
          done[b] = true;
          std::map<int, int> crossings;  // lifted class -> count
          for (int j2 = j + 1; j2 < sw->slab_counts[s]; ++j2) ++crossings[sw->lift[off + j2]];
          for (int j2 = 0; j2 < j; ++j2) ++crossings[sw->lift[off + j2 + total]];
          for (const auto& [cls, n] : crossings) {
            auto it = oval_of_lift.find(cls);
            if (it == oval_of_lift.end() || it->second == b || n % 2 == 0) continue;
            contains[b].push_back(it->second);
          }
        }
      }
      for (int b = 0; b < ovals; ++b) {
        int best = -1;
        for (int a : contains[b])
          if (best < 0 || contains[a].size() > contains[best].size()) best = a;
        topo.parent[b] = best;
      }
    }
    return topo;
  }
  throw GenericityError("count_components: no generic chart after " + std::to_string(options.max_attempts) +
                        " attempts");
}

}  // namespace realeig
