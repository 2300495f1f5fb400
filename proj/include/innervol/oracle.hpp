#ifndef INNERVOL_ORACLE_HPP
#define INNERVOL_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "innervol/geometry.hpp"
#include "innervol/piecewise.hpp"

namespace innervol {

/// Estimators of V_P(r) = vol(P \ P(r)) that share nothing with the engine
/// beyond the H-representation. Both use min_j signed_distance as the
/// distance to the boundary, which is valid inside convex bodies only.

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double resolution = 0.0;  // box volume / samples: the weight of one sample
};

/// Uniform samples in the bounding box. Sample i uses a SplitMix64 stream
/// keyed by (seed, i), so results are reproducible bit for bit.
McEstimate mc_inner_volume(const Polytope& p, double r, std::size_t samples, std::uint64_t seed,
                           const Tolerances& tol = {});
/// One shared sample set for all radii.
std::vector<McEstimate> mc_inner_volume_batch(const Polytope& p, const std::vector<double>& radii,
                                              std::size_t samples, std::uint64_t seed, const Tolerances& tol = {});

struct GridBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Cell classification over a resolution^d grid on the bounding box, using
/// per-cell distance ranges, so lower <= V_P(r) <= upper holds exactly (up to
/// rounding). Raises MemoryBudget above max_cells.
GridBounds grid_inner_volume(const Polytope& p, double r, std::size_t resolution,
                             std::size_t max_cells = std::size_t{1} << 26, const Tolerances& tol = {});
std::vector<GridBounds> grid_inner_volume_batch(const Polytope& p, const std::vector<double>& radii,
                                                std::size_t resolution, std::size_t max_cells = std::size_t{1} << 26,
                                                const Tolerances& tol = {});
/// About two million cells, at least 8 per axis.
std::size_t default_grid_resolution(std::size_t dim);

struct VerifyRow {
  double r = 0.0;
  double engine = 0.0;
  double mc = 0.0;
  double std_error = 0.0;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  double z = 0.0;
  bool bracketed = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  double max_abs_z = 0.0;
  std::size_t bracket_violations = 0;
  bool passed = false;
};

struct VerifyOptions {
  std::size_t mc_samples = 1'000'000;
  std::size_t grid_resolution = 0;  // 0: default_grid_resolution
  double z_limit = 4.0;
};

/// Radii stratified over each phase of V on [0, g], both sides of every
/// breakpoint, and one point past g. Passes when every |z| <= z_limit and
/// the engine value lies inside every grid bracket. z uses the Monte-Carlo
/// standard error floored at one sample's weight, since a hit fraction of
/// exactly 0 or 1 has zero binomial error but is still a finite sample.
VerifyReport verify_volume_function(const Polytope& p, const PiecewisePoly& V, std::size_t samples,
                                    std::uint64_t seed, const VerifyOptions& options = {},
                                    const Tolerances& tol = {});
/// The radii verify_volume_function samples.
std::vector<double> verification_radii(const PiecewisePoly& V, std::size_t samples);

}  // namespace innervol

#endif  // INNERVOL_ORACLE_HPP
