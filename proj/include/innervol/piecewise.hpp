#ifndef INNERVOL_PIECEWISE_HPP
#define INNERVOL_PIECEWISE_HPP

#include <optional>
#include <vector>

#include "innervol/tolerances.hpp"

namespace innervol {

/// Dense univariate polynomial, coeffs[k] multiplies r^k. The empty list is
/// the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  /// Trailing coefficients below tol.coeff relative to the largest one are dropped.
  explicit Polynomial(std::vector<double> coeffs, double trim = 1e-12);
  static Polynomial constant(double c) { return Polynomial({c}); }

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  double operator()(double r) const;
  /// k-th derivative evaluated at r.
  double derivative_at(int k, double r) const;

  Polynomial derivative() const;
  /// Antiderivative with constant term c0.
  Polynomial antiderivative(double c0 = 0.0) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(double s) const;

 private:
  std::vector<double> coeffs_;
};

/// Largest s such that derivatives 0..s agree at every interior breakpoint.
/// `infinite` when there is nothing to disagree (a single global polynomial);
/// order == -1 reports a discontinuous function.
struct SmoothnessClass {
  bool infinite = false;
  int order = 0;

  bool operator==(const SmoothnessClass&) const = default;
  static SmoothnessClass infinity() { return {true, 0}; }
};

/// Continuous piecewise polynomial of bounded degree.
///
/// breakpoints g_0 < ... < g_n carry n bounded pieces on [g_{i-1}, g_i]. An
/// optional left tail covers (-inf, g_0] and an optional right tail covers
/// [g_n, +inf). A function with no breakpoints is a global polynomial and is
/// stored with both tails equal.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  PiecewisePoly(int degree, std::vector<double> breakpoints, std::vector<Polynomial> pieces,
                std::optional<Polynomial> left_tail = std::nullopt,
                std::optional<Polynomial> right_tail = std::nullopt);
  static PiecewisePoly global(int degree, Polynomial p);
  static PiecewisePoly zero(int degree = 0) { return global(degree, Polynomial()); }

  int degree() const { return degree_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const std::optional<Polynomial>& left_tail() const { return left_tail_; }
  const std::optional<Polynomial>& right_tail() const { return right_tail_; }

  bool in_domain(double r) const;
  /// The polynomial governing r (right-hand piece at a breakpoint, except at
  /// the last breakpoint of a function without right tail). nullptr outside.
  const Polynomial* piece_at(double r) const;
  /// Raises OutOfDomain when no piece or tail covers r.
  double evaluate(double r) const;
  double operator()(double r) const { return evaluate(r); }

  /// Count of polynomial phases, tails included.
  std::size_t phase_count() const;

  /// max |f| over breakpoints and piece ends (>= tiny), and the breakpoint span (or 1).
  double value_scale() const;
  double length_scale() const;

  PiecewisePoly derivative() const;
  /// Continuous antiderivative equal to anchor_value at anchor_r.
  PiecewisePoly antiderivative_anchored(double anchor_r, double anchor_value) const;

  /// Coalesces adjacent pieces (and tails) that are the same polynomial.
  PiecewisePoly normalized(const Tolerances& tol = {}) const;

  bool is_continuous(const Tolerances& tol = {}) const;
  SmoothnessClass smoothness_class(const Tolerances& tol = {}) const;
  /// Largest jump of the k-th derivative over the junctions, in units of
  /// value_scale / length_scale^k (the units smoothness_class compares in).
  double max_relative_jump(int k, const Tolerances& tol = {}) const;

  /// Equality after normalization: same breakpoints and coefficients within tolerance.
  bool approx_equal(const PiecewisePoly& other, double rel_tol) const;

  /// Affine combination sum_k w_k f_k on [lo, hi]; each term contributes zero
  /// where it is undefined. Breakpoints are merged within tol.breakpoint * (hi - lo).
  static PiecewisePoly combine(int degree, const std::vector<std::pair<double, const PiecewisePoly*>>& terms,
                               double lo, double hi, const Tolerances& tol = {});

 private:
  int degree_ = 0;
  std::vector<double> breakpoints_;
  std::vector<Polynomial> pieces_;
  std::optional<Polynomial> left_tail_;
  std::optional<Polynomial> right_tail_;
};

/// Sorted, de-duplicated within tol, strictly increasing.
std::vector<double> merge_breakpoints(std::vector<double> candidates, double tol);

}  // namespace innervol

#endif  // INNERVOL_PIECEWISE_HPP
