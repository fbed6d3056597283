#include <stdexcept>

#include "realeig/experiments.hpp"
#include "realeig/parser.hpp"

namespace realeig {

namespace {

Form affine(const char* text) { return parse_form(text, {.homogenize = 'z'}); }

RationalMatrix matrix(const std::vector<std::vector<const char*>>& rows) {
  RationalMatrix m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (const char* v : row) m.back().push_back(parse_rational(v));
  }
  return m;
}

// det(I z + A x + B y)
Form quartic_pencil(const RationalMatrix& a, const RationalMatrix& b) {
  return pencil_determinant(a, b, identity_matrix(static_cast<int>(a.size())));
}

const char* const kOvalCubic = "y^2 - 2/100*x^3 + 45/100*x^2 + 303/100*x + 29/100";

std::vector<GalleryEntry> build() {
  std::vector<GalleryEntry> g;
  auto add = [&](std::string name, Form f, std::optional<int> c, std::optional<bool> nested, std::optional<int> t,
                 std::string source) {
    g.push_back({std::move(name), std::move(f), c, nested, t, std::move(source)});
  };

  add("cubic_no_oval", affine("y^2 - x^3 - 1/9*x^2 - x - 1"), 0, std::nullopt, 1, "Weierstrass cubic, pseudo-line only");
  add("cubic_one_oval", affine(kOvalCubic), 1, std::nullopt, 3, "Weierstrass cubic with one oval");
  add("cubic_lines_f1", affine("x*y*(x+y+1) + 1/1000*(x^3+y^3-2)"), 1, std::nullopt, 7, "perturbed triangle of lines");
  add("cubic_lines_f2", affine("x*y*(x+y+1) + 1/1000*(-x^3-y^3+2)"), 0, std::nullopt, 7, "perturbed triangle of lines, opposite sign");

  add("sos_quartic",
      affine("(6x^2 + 9/8*x*y + 4/9*y^2 + 1/6*x + 2/9*y + 4/9)^2"
             " + (4x^2 + 1/2*x*y + 7/9*y^2 + 6/7*x + 3/4*y + 2)^2"
             " + (7/3*x^2 + 2/5*x*y + 1/10*y^2 + x + 1/2*y + 1/5)^2"),
      0, std::nullopt, 3, "sum of three squares of conics");
  add("one_oval_quartic",
      affine("9/5*x^4 + 4/5*x^3*y + 1/3*x^2*y^2 + 4/9*x*y^3 + 5/4*y^4 + x^3 + 8/7*x^2*y + 8/5*x*y^2"
             " + 1/5*y^3 + x^2 + 3/8*x*y + 2*y^2 + 5/2*x + 5/9*y + 3/10"),
      1, std::nullopt, 3, "quartic with one oval");
  add("conic_product",
      affine("(8x^2 + 3y^2 - 1/10*x*y + 3x - 10y - 9)*(7x^2 + 3y^2 + 5x*y - 7x + 12y + 15)"), 2, false, 5,
      "product of two ellipses");

  RationalMatrix n1 = matrix({{"5/2", "5/3", "2", "9/10"},
                              {"5/3", "7/2", "1/4", "2/5"},
                              {"2", "1/4", "10/7", "1/3"},
                              {"9/10", "2/5", "1/3", "1"}});
  RationalMatrix n2 = matrix({{"4/5", "5/3", "1", "5/8"},
                              {"5/3", "1/2", "1", "1"},
                              {"1", "1", "2", "8/7"},
                              {"5/8", "1", "8/7", "10/7"}});
  add("determinantal_n", quartic_pencil(n1, n2), 2, true, 5, "determinantal quartic with nested ovals");

  add("three_oval_quartic", affine("(x^2+y^2)^2 + 16/3*(x^2+y^2) + 80/9*(x^3-3x*y^2) + 2624/9"), 3, std::nullopt, 7,
      "three-oval quartic");

  std::string singular = std::string("(") + kOvalCubic + ")*(x-45)";
  add("perturbed_singular_quartic", affine((singular + " + 1/1000*(-x^4-y^4-1)").c_str()), 4, std::nullopt, 9,
      "perturbed cubic times a line");

  RationalMatrix m1 = matrix({{"2/9", "5", "10", "7/4"},
                              {"5", "1", "1", "3/8"},
                              {"10", "1", "1/2", "1/2"},
                              {"7/4", "3/8", "1/2", "5/3"}});
  RationalMatrix m2 = matrix({{"1/2", "1", "1/2", "4/5"},
                              {"1", "8", "1/3", "8"},
                              {"1/2", "1/3", "1/3", "8"},
                              {"4/5", "8", "8", "7/8"}});
  add("determinantal_m", quartic_pencil(m1, m2), 2, true, 13, "determinantal quartic with maximal t");
  add("fermat_quartic", affine("x^4 + y^4 + 1"), 0, std::nullopt, 13, "sum of three squares of conics");

  const char* base = "x*y*(x+y+1/3)*(-3x+y+1)";
  struct Pert {
    const char* name;
    const char* g;
    int c;
    std::optional<bool> nested;
    const char* source;
  };
  for (const Pert& p : {Pert{"quartic_lines_f1", "x^4+y^4-1", 4, std::nullopt, "four ovals"},
                        Pert{"quartic_lines_f2", "-x^4-y^4+5/2", 3, std::nullopt, "three ovals"},
                        Pert{"quartic_lines_f3", "7x^4+6y^4-1-5x", 2, false, "two ovals"},
                        Pert{"quartic_lines_f4", "7x^4+6y^4-1-5x-9y", 1, std::nullopt, "one oval"}}) {
    Form f = perturb({affine(base), affine(p.g), Rational(1, 1000)});
    add(p.name, f, p.c, p.nested, 13, std::string("perturbed quadrilateral of lines, ") + p.source);
  }

  GalleryEntry s{"singular_quartic", affine(singular.c_str()), std::nullopt, std::nullopt, 9, "cubic with one oval times a line"};
  s.singular = true;
  g.push_back(s);

  for (auto [name, f] : {std::pair{"motzkin_sextic", motzkin()}, std::pair{"robinson_sextic", robinson()},
                         std::pair{"choi_liu_sextic", choi_liu()}}) {
    GalleryEntry b{name, f, std::nullopt, std::nullopt, std::nullopt, "nonnegative sextic, perturbation base"};
    b.base_only = true;
    g.push_back(b);
  }
  return g;
}

}  // namespace

std::vector<GalleryEntry> gallery() {
  static const std::vector<GalleryEntry> entries = build();
  return entries;
}

const GalleryEntry& gallery_entry(const std::string& name) {
  static const std::vector<GalleryEntry> entries = gallery();
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::out_of_range("no gallery entry named " + name);
}

}  // namespace realeig
