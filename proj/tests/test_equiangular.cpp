#include <doctest.h>

#include <cmath>

#include "innervol/engine.hpp"
#include "innervol/equiangular.hpp"
#include "innervol/error.hpp"
#include "innervol/shapes.hpp"

using namespace innervol;

namespace {

const double kPi = std::acos(-1.0);

void check_all(const std::vector<double>& got, const std::vector<double>& expected) {
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]));
}

}  // namespace

TEST_CASE("face lattice counts") {
  CHECK(face_counts(face_lattice(make_cube())) == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK(face_counts(face_lattice(make_right_simplex(3))) == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(face_counts(face_lattice(make_square_pyramid())) == std::vector<std::size_t>{5, 8, 5, 1});
  CHECK(face_counts(face_lattice(make_segment())) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("dihedral angles") {
  const auto cube = make_cube();
  // Facets 0/1 are x >= -1 and x <= 1; 2 is y >= -1.
  CHECK(*dihedral_angle(cube, 0, 2) == doctest::Approx(kPi / 2));
  CHECK_FALSE(dihedral_angle(cube, 0, 1).has_value());
  CHECK_THROWS_AS(dihedral_angle(cube, 1, 1), Error);
}

TEST_CASE("omega of cube, square and segment") {
  const auto cube = face_lattice(make_cube());
  const std::vector<double> expected{48, 48, 24, 8};
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(omega(cube, k) == doctest::Approx(expected[k]));
    CHECK(omega_by_flags(cube, k) == doctest::Approx(expected[k]).epsilon(1e-9));
  }
  const auto sq = face_lattice(make_square());
  CHECK(omega(sq, 2) == doctest::Approx(4));
  CHECK(omega(sq, 1) == doctest::Approx(8));
  CHECK(omega(sq, 0) == doctest::Approx(8));
  const auto seg = face_lattice(make_segment(1.5));
  CHECK(omega(seg, 1) == doctest::Approx(3));
  CHECK(omega(seg, 0) == doctest::Approx(2));
}

TEST_CASE("omega recursion matches flag counts") {
  for (const auto& p : {make_cut_dodecahedron(), make_right_simplex(3), make_square_pyramid(),
                        make_theorem4_instance(2, 3, 4), make_multiphase_pentagon()}) {
    const auto lat = face_lattice(p);
    for (std::size_t k = 0; k <= p.dim(); ++k)
      CHECK(omega(lat, k) == doctest::Approx(omega_by_flags(lat, k)).epsilon(1e-9));
  }
}

TEST_CASE("equiangular profiles") {
  const auto cube = check_dimensionwise_equiangular(make_cube());
  REQUIRE(cube.profile);
  check_all(cube.profile->alphas, {kPi / 2, kPi / 2});
  for (double g : cube.profile->gammas) CHECK(g == doctest::Approx(1.0));
  CHECK(check_dimensionwise_equiangular(make_rectangle({1, 2, 3})).profile.has_value());

  const double phi = golden_ratio();
  const auto d = check_dimensionwise_equiangular(make_cut_dodecahedron());
  REQUIRE(d.profile);
  CHECK(d.profile->alphas[0] == doctest::Approx(2 * kPi / 5));
  CHECK(d.profile->alphas[1] == doctest::Approx(std::atan(2.0)));
  CHECK(d.profile->gammas[0] == doctest::Approx(std::sqrt(18 - 11 * phi)));
  CHECK(d.profile->gammas[1] == doctest::Approx(phi - 1));
  CHECK(d.profile->gammas[2] == 1.0);
  for (std::size_t k = 1; k < 3; ++k)
    CHECK(d.profile->gammas[k - 1] / d.profile->gammas[k] == doctest::Approx(std::tan(d.profile->alphas[k - 1] / 2)));

  const auto pyr = check_dimensionwise_equiangular(make_square_pyramid());
  CHECK_FALSE(pyr.profile);
  REQUIRE(pyr.witness);
  CHECK(pyr.witness->level >= 2);
  CHECK_FALSE(check_dimensionwise_equiangular(make_multiphase_pentagon()).profile);
}

TEST_CASE("closed form against the engine") {
  const auto cube = equiangular_volume_polynomial(make_cube());
  check_all(cube.poly.coeffs(), {8, -24, 24, -8});
  CHECK(cube.valid_to == doctest::Approx(1.0));

  const double phi = golden_ratio();
  const auto d = equiangular_volume_polynomial(make_cut_dodecahedron());
  CHECK(d.poly.coeff(1) == doctest::Approx(-7 * std::sqrt(15 - 5 * phi)));
  CHECK(d.poly.coeff(2) == doctest::Approx(50 - 20 * phi));
  CHECK(d.poly.coeff(3) == doctest::Approx(-20 * std::sqrt(47 - 29 * phi)));
  CHECK(d.valid_to < inradius(make_cut_dodecahedron()).g);

  for (const auto& p : {make_cube(), make_rectangle({1, 1, 2}), make_cut_dodecahedron(), make_regular_polygon(5),
                        make_segment(0.5), make_rectangle({1, 2, 3, 4})}) {
    const auto closed = equiangular_volume_polynomial(p).poly;
    const auto engine = inner_volume_function(p).W.pieces().front();
    for (std::size_t k = 0; k <= p.dim(); ++k)
      CHECK(closed.coeff(k) == doctest::Approx(engine.coeff(k)).epsilon(1e-9).scale(1.0));
  }
  try {
    equiangular_volume_polynomial(make_square_pyramid());
    FAIL("expected NotEquiangular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEquiangular);
  }
}

TEST_CASE("flag-uniform form") {
  const auto cube = corollary_form(make_cube());
  CHECK(cube.mus == std::vector<std::size_t>{3, 2, 1});
  check_all(cube.skeleton_volumes, {8, 24, 24, 8});
  const auto closed = equiangular_volume_polynomial(make_cube()).poly;
  for (std::size_t k = 0; k <= 3; ++k) CHECK(cube.poly.coeff(k) == doctest::Approx(closed.coeff(k)));

  const auto d = corollary_form(make_cut_dodecahedron());
  CHECK(d.mus == std::vector<std::size_t>{3, 2, 1});
  const auto dc = equiangular_volume_polynomial(make_cut_dodecahedron()).poly;
  for (std::size_t k = 0; k <= 3; ++k) CHECK(d.poly.coeff(k) == doctest::Approx(dc.coeff(k)));

  try {
    corollary_form(make_square_pyramid());
    FAIL("expected NotUniform");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUniform);
  }
}

TEST_CASE("regular identity with insphere") {
  // d! vol = k! mu_(k+1)..mu_(d) vol_k(P_(k)) gamma_(k+1)..gamma_d g^(d-k).
  for (const auto& p : {make_cube(), make_regular_polygon(5), make_cube(4, 0.5)}) {
    const auto cf = corollary_form(p);
    const auto prof = *check_dimensionwise_equiangular(p).profile;
    const double g = inradius(p).g;
    const std::size_t d = p.dim();
    double dfact = 1;
    for (std::size_t i = 2; i <= d; ++i) dfact *= static_cast<double>(i);
    for (std::size_t k = 0; k <= d; ++k) {
      double rhs = cf.skeleton_volumes[k] * std::pow(g, static_cast<double>(d - k));
      for (std::size_t i = 2; i <= k; ++i) rhs *= static_cast<double>(i);
      for (std::size_t l = k + 1; l <= d; ++l) rhs *= static_cast<double>(cf.mus[l - 1]) * prof.gammas[l - 1];
      CHECK(rhs == doctest::Approx(dfact * cf.skeleton_volumes[d]).epsilon(1e-8));
    }
  }
}
