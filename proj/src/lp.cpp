#include "innervol/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "innervol/error.hpp"

namespace innervol {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

// Row-major dense tableau: rows_ x (cols_ + 1), the last column is the RHS.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t r) {
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { Optimal, Unbounded };

// Maximizes cost·x from the current basic feasible tableau. Columns flagged in
// `barred` never enter the basis.
PhaseOutcome run_simplex(Tableau& t, const std::vector<double>& cost,
                         const std::vector<bool>& barred, std::size_t budget) {
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget)
      throw Error(ErrorCode::NumericalFailure, "simplex exceeded its pivot budget");

    // Bland: lowest-index column with positive reduced cost enters.
    std::size_t enter = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (barred[c]) continue;
      double reduced = cost[c];
      for (std::size_t r = 0; r < t.rows(); ++r) reduced -= cost[t.basis()[r]] * t.at(r, c);
      if (reduced > kCostEps) {
        enter = c;
        break;
      }
    }
    if (enter == t.cols()) return PhaseOutcome::Optimal;

    // Minimum ratio; ties go to the lowest basic variable index.
    std::size_t leave = t.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= kPivotEps) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      if (ratio < best - 1e-14 ||
          (std::abs(ratio - best) <= 1e-14 && leave < t.rows() && t.basis()[r] < t.basis()[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == t.rows()) return PhaseOutcome::Unbounded;
    t.pivot(leave, enter);
  }
}

double row_activity(const LinearConstraint& c, const Vector& x) { return c.coeffs.dot(x); }

}  // namespace

LpResult solve_lp(const Vector& objective, std::span<const LinearConstraint> constraints,
                  const Tolerances& tol) {
  const std::size_t n = static_cast<std::size_t>(objective.size());
  for (const auto& c : constraints)
    if (static_cast<std::size_t>(c.coeffs.size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "LP constraint dimension differs from objective");

  const std::size_t m = constraints.size();
  // Columns: x+ (n), x- (n), one slack/surplus per inequality, one artificial
  // per row that lacks a natural basic slack.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  std::vector<double> sign(m, 1.0);
  std::size_t cols = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    Sense s = constraints[i].sense;
    if (constraints[i].rhs < 0.0) {
      sign[i] = -1.0;
      if (s == Sense::LessEqual) s = Sense::GreaterEqual;
      else if (s == Sense::GreaterEqual) s = Sense::LessEqual;
    }
    if (s != Sense::Equal) slack_col[i] = static_cast<int>(cols++);
    if (s != Sense::LessEqual) art_col[i] = -2;  // assigned below
  }
  const std::size_t first_art = cols;
  for (std::size_t i = 0; i < m; ++i)
    if (art_col[i] == -2) art_col[i] = static_cast<int>(cols++);

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, j) = sign[i] * c.coeffs[static_cast<Eigen::Index>(j)];
      t.at(i, n + j) = -sign[i] * c.coeffs[static_cast<Eigen::Index>(j)];
    }
    t.rhs(i) = sign[i] * c.rhs;
    Sense s = c.sense;
    if (sign[i] < 0 && s != Sense::Equal) s = (s == Sense::LessEqual) ? Sense::GreaterEqual : Sense::LessEqual;
    if (slack_col[i] >= 0) t.at(i, static_cast<std::size_t>(slack_col[i])) = (s == Sense::LessEqual) ? 1.0 : -1.0;
    if (art_col[i] >= 0) {
      t.at(i, static_cast<std::size_t>(art_col[i])) = 1.0;
      t.basis()[i] = static_cast<std::size_t>(art_col[i]);
    } else {
      t.basis()[i] = static_cast<std::size_t>(slack_col[i]);
    }
  }

  const std::size_t budget = 200 * (cols + m + 10);
  double rhs_scale = 1.0;
  for (const auto& c : constraints) rhs_scale = std::max(rhs_scale, std::abs(c.rhs));

  // Phase 1: drive the artificials to zero.
  if (first_art < cols) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t c = first_art; c < cols; ++c) cost[c] = -1.0;
    std::vector<bool> barred(cols, false);
    run_simplex(t, cost, barred, budget);
    double infeasibility = 0.0;
    for (std::size_t r = 0; r < t.rows(); ++r)
      if (t.basis()[r] >= first_art) infeasibility += t.rhs(r);
    if (infeasibility > tol.lp * rhs_scale) return {LpStatus::Infeasible, 0.0, Vector()};

    // Pivot leftover zero-level artificials out, or drop their redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_art) {
        ++r;
        continue;
      }
      std::size_t pc = first_art;
      double best = 1e-9;
      for (std::size_t c = 0; c < first_art; ++c) {
        if (std::abs(t.at(r, c)) > best) {
          best = std::abs(t.at(r, c));
          pc = c;
        }
      }
      if (pc < first_art) {
        t.pivot(r, pc);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
  }

  // Phase 2 on the original objective; artificial columns are barred.
  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[static_cast<Eigen::Index>(j)];
    cost[n + j] = -objective[static_cast<Eigen::Index>(j)];
  }
  std::vector<bool> barred(cols, false);
  for (std::size_t c = first_art; c < cols; ++c) barred[c] = true;
  if (run_simplex(t, cost, barred, budget) == PhaseOutcome::Unbounded)
    return {LpStatus::Unbounded, std::numeric_limits<double>::infinity(), Vector()};

  Vector x = Vector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::size_t b = t.basis()[r];
    if (b < n) x[static_cast<Eigen::Index>(b)] += t.rhs(r);
    else if (b < 2 * n) x[static_cast<Eigen::Index>(b - n)] -= t.rhs(r);
  }

  double x_scale = 1.0 + x.lpNorm<Eigen::Infinity>();
  for (const auto& c : constraints) {
    const double act = row_activity(c, x);
    const double slack = tol.lp * x_scale * std::max(1.0, c.coeffs.lpNorm<1>());
    const bool ok = (c.sense == Sense::LessEqual && act <= c.rhs + slack) ||
                    (c.sense == Sense::GreaterEqual && act >= c.rhs - slack) ||
                    (c.sense == Sense::Equal && std::abs(act - c.rhs) <= slack);
    if (!ok) throw Error(ErrorCode::NumericalFailure, "LP witness violates a constraint beyond tolerance");
  }
  return {LpStatus::Optimal, objective.dot(x), x};
}

}  // namespace innervol
