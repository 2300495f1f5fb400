#ifndef INNERVOL_LP_HPP
#define INNERVOL_LP_HPP

#include <span>

#include <Eigen/Dense>

#include "innervol/tolerances.hpp"

namespace innervol {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Sense { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  Vector coeffs;
  double rhs = 0.0;
  Sense sense = Sense::LessEqual;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double optimum = 0.0;
  Vector witness;  // only meaningful when Optimal
};

/// Maximizes objective·x over free variables x subject to the constraints.
///
/// Dense two-phase tableau simplex with Bland's rule, so degenerate pivots
/// cannot cycle. The returned witness is re-checked against every constraint
/// with tolerance tol.lp; a violation, or exhausting the pivot budget, raises
/// NumericalFailure. Intended for the small instances this library produces
/// (tens of rows, a handful of variables).
LpResult solve_lp(const Vector& objective, std::span<const LinearConstraint> constraints,
                  const Tolerances& tol = {});

}  // namespace innervol

#endif  // INNERVOL_LP_HPP
