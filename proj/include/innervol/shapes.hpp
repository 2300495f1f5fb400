#ifndef INNERVOL_SHAPES_HPP
#define INNERVOL_SHAPES_HPP

#include <string>
#include <vector>

#include "innervol/engine.hpp"
#include "innervol/geometry.hpp"
#include "innervol/piecewise.hpp"

namespace innervol {

/// {x : |x_i| <= a_i}.
Polytope make_rectangle(const std::vector<double>& half_sides);
/// V of a rectangle: 2^d prod a_i - 2^d prod (a_i - r) up to the smallest half-side, then constant.
PiecewisePoly rectangle_closed_form(std::vector<double> half_sides);

Polytope make_cube(std::size_t dim = 3, double half_side = 1.0);
Polytope make_segment(double half_length = 1.0);
Polytope make_square(double half_side = 1.0);
/// {x >= 0, sum x <= 1}.
Polytope make_right_simplex(std::size_t dim);
/// Regular simplex centred at the origin with inradius 1.
Polytope make_regular_simplex(std::size_t dim);
/// Regular n-gon with inradius 1, one facet normal along +y.
Polytope make_regular_polygon(std::size_t n);

/// Unit-edge regular dodecahedron with one pair of opposite facets pushed
/// inward by sqrt(1 - 2/sqrt(5)).
Polytope make_cut_dodecahedron();
double golden_ratio();

/// {(x, h) : 0 <= h, x in P(h)}: the graph of the erosion family of P.
Polytope make_roof(const Polytope& p);
Polytope make_iterated_roof(const Polytope& p, std::size_t depth);

/// Rectangle in dimension d - k + 1 with s - k + 1 half-sides equal to
/// `short_side` and the rest `long_side`, roofed k - 1 times. Its normals have
/// absolute rank k and its inner volume function has class exactly C^{s-1}.
Polytope make_theorem4_instance(int k, int s, int d, double short_side = 1.0, double long_side = 2.0);

/// Fixed pentagon: the triangle (0,0), (4,0), (0,3) with its two acute
/// corners cut at different depths (x + y <= 3.6, y - x <= 2.6). Both cut
/// edges vanish before the erosion collapses at the incentre (1, 1), so V has
/// four phases.
Polytope make_multiphase_pentagon();

/// Square pyramid over [-1,1]^2 with apex (0, 0, 1): apex meets four edges,
/// base vertices three.
Polytope make_square_pyramid();

struct DiphaseCheck {
  bool inscribed = false;          // every facet touches the Chebyshev ball
  std::vector<double> kappas;      // kappas[i] multiplies r^(d-i), i = 0..d-1; only when inscribed
  bool diphase_smooth = false;     // engine V has one piece, then constant, and class >= d-1
  bool consistent = false;         // inscribed == diphase_smooth
};

/// Inscribed-ball test against the engine's V: a polytope has a diphase
/// volume function of class C^{d-1} exactly when it admits an inscribed ball.
DiphaseCheck diphase_inscribed_check(const Polytope& p, const Tolerances& tol = {});

/// Shape from CLI-style tokens, e.g. {"rect", "1", "2", "3"} or
/// {"roof", "square", "1"}. Raises InvalidArgument for unknown kinds or bad
/// parameters.
Polytope shape_from_tokens(const std::vector<std::string>& tokens, const Tolerances& tol = {});
/// Splits on whitespace and calls shape_from_tokens.
Polytope shape_from_spec(const std::string& spec, const Tolerances& tol = {});

}  // namespace innervol

#endif  // INNERVOL_SHAPES_HPP
