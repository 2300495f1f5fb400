#include <doctest.h>

#include <vector>

#include "innervol/error.hpp"
#include "innervol/lp.hpp"

using namespace innervol;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("box optimum and witness") {
  std::vector<LinearConstraint> rows{{vec({1, 0}), 1, Sense::LessEqual},
                                     {vec({0, 1}), 2, Sense::LessEqual},
                                     {vec({1, 0}), -3, Sense::GreaterEqual},
                                     {vec({0, 1}), -3, Sense::GreaterEqual}};
  const auto r = solve_lp(vec({1, 1}), rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.optimum == doctest::Approx(3.0));
  CHECK(r.witness[0] == doctest::Approx(1.0));
  CHECK(r.witness[1] == doctest::Approx(2.0));

  const auto m = solve_lp(vec({-1, -1}), rows);
  CHECK(m.optimum == doctest::Approx(6.0));
}

TEST_CASE("free variables take negative values") {
  std::vector<LinearConstraint> rows{{vec({1}), -5, Sense::LessEqual}};
  const auto r = solve_lp(vec({1}), rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.optimum == doctest::Approx(-5.0));
}

TEST_CASE("infeasible and unbounded") {
  std::vector<LinearConstraint> bad{{vec({1}), 0, Sense::LessEqual}, {vec({1}), 1, Sense::GreaterEqual}};
  CHECK(solve_lp(vec({1}), bad).status == LpStatus::Infeasible);
  std::vector<LinearConstraint> half{{vec({1, 1}), 0, Sense::GreaterEqual}};
  CHECK(solve_lp(vec({1, 0}), half).status == LpStatus::Unbounded);
}

TEST_CASE("equality constraints") {
  std::vector<LinearConstraint> rows{{vec({1, 1}), 1, Sense::Equal},
                                     {vec({1, 0}), 0, Sense::GreaterEqual},
                                     {vec({0, 1}), 0, Sense::GreaterEqual}};
  const auto r = solve_lp(vec({2, 1}), rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.optimum == doctest::Approx(2.0));
}

TEST_CASE("degenerate vertex does not cycle") {
  // Many constraints through the optimum (a pyramid apex).
  std::vector<LinearConstraint> rows;
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) rows.push_back({vec({a, b, 1}), 1, Sense::LessEqual});
  rows.push_back({vec({0, 0, 1}), 0, Sense::GreaterEqual});
  rows.push_back({vec({1, 0, 1}), 1, Sense::LessEqual});
  const auto r = solve_lp(vec({0, 0, 1}), rows);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.optimum == doctest::Approx(1.0));
}
