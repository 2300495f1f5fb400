#include <doctest.h>

#include <cmath>

#include "innervol/engine.hpp"
#include "innervol/equiangular.hpp"
#include "innervol/error.hpp"
#include "innervol/shapes.hpp"

using namespace innervol;

namespace {

const double kSqrt2 = std::sqrt(2.0);

void check_coeffs(const Polynomial& p, std::vector<double> expected, double rel = 1e-12) {
  for (std::size_t k = 0; k < expected.size(); ++k)
    CHECK(p.coeff(k) == doctest::Approx(expected[k]).epsilon(rel).scale(1.0));
}

}  // namespace

TEST_CASE("rectangles and their closed form") {
  CHECK(make_rectangle({1, 2, 3}).facet_count() == 6);
  const auto r123 = rectangle_closed_form({3, 1, 2});
  REQUIRE(r123.pieces().size() == 1);
  check_coeffs(r123.pieces()[0], {0, 88, -48, 8});
  CHECK(r123.breakpoints() == std::vector<double>{0.0, 1.0});
  CHECK(r123.evaluate(5.0) == 48.0);
  check_coeffs(rectangle_closed_form({1, 1, 2}).pieces()[0], {0, 40, -32, 8});
  CHECK(rectangle_closed_form({1, 1, 2}).evaluate(1.0) == doctest::Approx(16.0));
  const auto seg = rectangle_closed_form({0.7});
  check_coeffs(seg.pieces()[0], {0, 2});
  CHECK(seg.evaluate(3.0) == doctest::Approx(1.4));
}

TEST_CASE("simplices") {
  const auto reg = make_regular_simplex(3);
  CHECK(reg.facet_count() == 4);
  CHECK(inradius(reg).g == doctest::Approx(1.0));
  const auto n = facet_normals(reg);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) CHECK(n[i].dot(n[j]) == doctest::Approx(-1.0 / 3.0));
  CHECK(polytope_volume(make_right_simplex(2)) == doctest::Approx(0.5));
}

TEST_CASE("cut dodecahedron") {
  const double phi = golden_ratio();
  const auto d = make_cut_dodecahedron();
  CHECK(d.facet_count() == 12);
  const auto lattice = face_lattice(d);
  CHECK(face_counts(lattice) == std::vector<std::size_t>{20, 30, 12, 1});

  const double small = std::sqrt(15 - 5 * phi) / 2;
  int n_small = 0, n_large = 0;
  double total = 0.0;
  for (const auto& f : lattice.children) {
    total += f.volume;
    if (std::abs(f.volume - small) < 1e-9) ++n_small;
    if (std::abs(f.volume - 2 * small) < 1e-9) {
      ++n_large;
      // The large sides are regular pentagons of side 2/phi.
      for (const auto& e : f.children) CHECK(e.volume == doctest::Approx(2 / phi));
    }
  }
  CHECK(n_small == 10);
  CHECK(n_large == 2);
  CHECK(total == doctest::Approx(7 * std::sqrt(15 - 5 * phi)));
  CHECK(total == doctest::Approx(18.4005889).epsilon(1e-8));

  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j)
      if (auto a = dihedral_angle(d, i, j)) CHECK(*a == doctest::Approx(std::atan(2.0)));

  const double delta = std::sqrt(1 - 2 / std::sqrt(5.0));
  CHECK(inradius(d).g == doctest::Approx(0.5 * std::sqrt((25 + 11 * std::sqrt(5.0)) / 10) - delta));
}

TEST_CASE("roof construction") {
  const auto tri = make_roof(make_segment());
  CHECK(tri.dim() == 2);
  CHECK(tri.facet_count() == 3);
  bool apex = false;
  for (const auto& v : enumerate_vertices(tri).vertices)
    apex = apex || (std::abs(v[0]) < 1e-12 && std::abs(v[1] - 1) < 1e-12);
  CHECK(apex);

  const auto pyr = make_roof(make_square());
  CHECK(pyr.facet_count() == 5);
  CHECK(polytope_volume(pyr) == doctest::Approx(4.0 / 3.0));
  CHECK(inradius(pyr).g == doctest::Approx(kSqrt2 - 1));
  CHECK(inradius(make_roof(make_rectangle({1, 2}))).g == doctest::Approx(1 / (1 + kSqrt2)));
  CHECK(make_iterated_roof(make_segment(), 3).dim() == 4);
}

TEST_CASE("roof derivative identity and class increments") {
  for (const auto& p : {make_segment(), make_square(), make_rectangle({1, 2}), make_multiphase_pentagon()}) {
    const auto base = inner_volume_function(p);
    const auto roof = inner_volume_function(make_roof(p));
    CHECK(roof.g == doctest::Approx(base.g / (1 + kSqrt2)));
    const auto dw = roof.W.derivative();
    for (int k = 0; k < 32; ++k) {
      const double r = roof.g * (k + 0.5) / 32;
      CHECK(dw.evaluate(r) == doctest::Approx(-(1 + kSqrt2) * base.W.evaluate((1 + kSqrt2) * r)));
    }
    CHECK(roof.class_bound == base.class_bound + 1);
    const auto cb = base.V.smoothness_class(), cr = roof.V.smoothness_class();
    CHECK(cr.order == cb.order + 1);
  }
}

TEST_CASE("Theorem-4 family") {
  struct Case {
    int k, s, d;
  };
  for (const auto c : {Case{1, 1, 2}, Case{1, 2, 3}, Case{2, 2, 3}, Case{2, 3, 4}, Case{1, 3, 3}, Case{3, 3, 3}}) {
    CAPTURE(c.k);
    CAPTURE(c.s);
    CAPTURE(c.d);
    const auto p = make_theorem4_instance(c.k, c.s, c.d);
    CHECK(p.dim() == static_cast<std::size_t>(c.d));
    CHECK(absolute_rank(facet_normals(p)).rank == c.k);
    CHECK(inner_volume_function(p).V.smoothness_class().order == c.s - 1);
  }
  // R_{1,1,2}: the second derivative jumps by 16 at r = 1.
  const auto v = inner_volume_function(make_theorem4_instance(1, 2, 3)).V;
  CHECK(std::abs(v.derivative().derivative().evaluate(1.0 - 1e-12) - v.derivative().derivative().evaluate(1.0)) ==
        doctest::Approx(16.0));
  CHECK_THROWS_AS(make_theorem4_instance(2, 1, 3), Error);
}

TEST_CASE("multiphase pentagon") {
  const auto p = make_multiphase_pentagon();
  CHECK(p.facet_count() == 5);
  const auto f = inner_volume_function(p);
  // The two cut edges vanish when three eroded sides become concurrent.
  const std::vector<double> expected{0.0, 0.4 / (3 - kSqrt2), 0.2 * (2 + kSqrt2), 1.0};
  REQUIRE(f.V.breakpoints().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(f.V.breakpoints()[i] == doctest::Approx(expected[i]));
  CHECK(f.V.phase_count() == 4);
  CHECK(f.V.is_continuous());
  CHECK(f.volume == doctest::Approx(40.0 / 7.0));

  double tan_sum = 0.0, perimeter = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (auto a = dihedral_angle(p, i, j)) tan_sum += std::tan(*a / 2);
  for (const auto& e : face_lattice(p).children) perimeter += e.volume;
  check_coeffs(f.V.pieces()[0], {0, perimeter, -tan_sum}, 1e-10);
  // Last phase: the incircle triangle scaled by (1 - r).
  check_coeffs(f.V.pieces()[2], {40.0 / 7.0 - 6, 12, -6}, 1e-10);
}

TEST_CASE("inscribed-ball criterion") {
  const auto cube = diphase_inscribed_check(make_cube());
  CHECK(cube.inscribed);
  CHECK(cube.diphase_smooth);
  REQUIRE(cube.kappas.size() == 3);
  CHECK(cube.kappas[0] == doctest::Approx(8));
  CHECK(cube.kappas[1] == doctest::Approx(-24));
  CHECK(cube.kappas[2] == doctest::Approx(24));

  const auto r = diphase_inscribed_check(make_rectangle({1, 2, 3}));
  CHECK_FALSE(r.inscribed);
  CHECK_FALSE(r.diphase_smooth);
  CHECK(r.consistent);

  for (const auto& p : {make_regular_simplex(3), make_right_simplex(3), make_regular_polygon(7),
                        make_regular_simplex(4), make_multiphase_pentagon()}) {
    const auto c = diphase_inscribed_check(p);
    CHECK(c.consistent);
  }
  CHECK(diphase_inscribed_check(make_regular_simplex(3)).inscribed);
  CHECK_FALSE(diphase_inscribed_check(make_multiphase_pentagon()).inscribed);
}

TEST_CASE("shape specs") {
  CHECK(polytope_volume(shape_from_spec("rect 1 2 3")) == doctest::Approx(48));
  CHECK(polytope_volume(shape_from_spec("cube")) == doctest::Approx(8));
  CHECK(polytope_volume(shape_from_spec("cube 1 1 1")) == doctest::Approx(8));
  CHECK(polytope_volume(shape_from_spec("square 1 1")) == doctest::Approx(4));
  CHECK(shape_from_spec("roof roof segment").dim() == 3);
  CHECK(shape_from_spec("theorem4 2 3 4").dim() == 4);
  CHECK(shape_from_spec("polygon 6").facet_count() == 6);
  CHECK(shape_from_spec("regular-simplex 2").facet_count() == 3);
  for (const char* bad : {"", "blob", "rect", "rect 1 x", "rect 1 -2", "polygon 2", "cube 1 2", "theorem4 3 2 1"})
    CHECK_THROWS_AS(shape_from_spec(bad), Error);
}
