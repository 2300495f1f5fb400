#include "innervol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "innervol/error.hpp"

namespace innervol {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

struct Box {
  Vector lo, hi;
  double volume() const { return (hi - lo).prod(); }
};

Box bounding_box(const Polytope& p, const Tolerances& tol) {
  const std::size_t d = p.dim();
  std::vector<LinearConstraint> rows;
  for (const auto& h : p.halfspaces()) rows.push_back({h.normal, h.offset, Sense::GreaterEqual});
  Box b{Vector(idx(d)), Vector(idx(d))};
  for (std::size_t k = 0; k < d; ++k) {
    const Vector e = Vector::Unit(idx(d), idx(k));
    const auto hi = solve_lp(e, rows, tol);
    const auto lo = solve_lp(-e, rows, tol);
    if (hi.status != LpStatus::Optimal || lo.status != LpStatus::Optimal)
      throw Error(ErrorCode::NumericalFailure, "bounding box LP failed");
    b.hi[idx(k)] = hi.optimum;
    b.lo[idx(k)] = -lo.optimum;
  }
  return b;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t z = splitmix64(splitmix64(seed) ^ (counter * 0xD1B54A32D192ED03ULL));
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Sorted min-distances of the samples that land inside P.
std::vector<double> sample_distances(const Polytope& p, const Box& box, std::size_t n, std::uint64_t seed) {
  const std::size_t d = p.dim();
  const auto& hs = p.halfspaces();
  std::vector<double> out;
  Vector q(idx(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const double u = uniform01(seed, static_cast<std::uint64_t>(i) * d + k);
      q[idx(k)] = box.lo[idx(k)] + u * (box.hi[idx(k)] - box.lo[idx(k)]);
    }
    double md = std::numeric_limits<double>::infinity();
    for (const auto& h : hs) md = std::min(md, signed_distance(q, h));
    if (md >= 0) out.push_back(md);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_below(const std::vector<double>& sorted, double r) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin());
}

}  // namespace

std::vector<McEstimate> mc_inner_volume_batch(const Polytope& p, const std::vector<double>& radii, std::size_t n,
                                              std::uint64_t seed, const Tolerances& tol) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  for (double r : radii)
    if (!(r >= 0)) throw Error(ErrorCode::InvalidArgument, "radius must be non-negative");
  const Box box = bounding_box(p, tol);
  const auto dist = sample_distances(p, box, n, seed);
  const double bv = box.volume();
  std::vector<McEstimate> out;
  for (double r : radii) {
    const double frac = static_cast<double>(count_below(dist, r)) / static_cast<double>(n);
    out.push_back({bv * frac, bv * std::sqrt(frac * (1 - frac) / static_cast<double>(n)), bv / static_cast<double>(n)});
  }
  return out;
}

McEstimate mc_inner_volume(const Polytope& p, double r, std::size_t n, std::uint64_t seed, const Tolerances& tol) {
  return mc_inner_volume_batch(p, {r}, n, seed, tol).front();
}

std::size_t default_grid_resolution(std::size_t dim) {
  const auto res = static_cast<std::size_t>(std::floor(std::pow(2e6, 1.0 / static_cast<double>(dim))));
  return std::max<std::size_t>(8, res);
}

std::vector<GridBounds> grid_inner_volume_batch(const Polytope& p, const std::vector<double>& radii,
                                                std::size_t res, std::size_t max_cells, const Tolerances& tol) {
  if (res < 8) throw Error(ErrorCode::InvalidArgument, "grid resolution must be at least 8");
  const std::size_t d = p.dim();
  double cells_f = std::pow(static_cast<double>(res), static_cast<double>(d));
  if (cells_f > static_cast<double>(max_cells))
    throw Error(ErrorCode::MemoryBudget, "grid of " + std::to_string(res) + "^" + std::to_string(d) +
                                             " cells exceeds the cap of " + std::to_string(max_cells));
  const auto cells = static_cast<std::size_t>(cells_f);
  const Box box = bounding_box(p, tol);
  const Vector h = (box.hi - box.lo) / (2.0 * static_cast<double>(res));
  const auto& hs = p.halfspaces();
  std::vector<double> width;
  for (const auto& f : hs) width.push_back(f.normal.cwiseAbs().dot(h));

  // Cells certainly inside P, keyed by the largest possible min-distance, and
  // cells possibly meeting P, keyed by the smallest possible min-distance.
  std::vector<double> sure, maybe;
  std::vector<std::size_t> digit(d, 0);
  Vector c(idx(d));
  for (std::size_t cell = 0; cell < cells; ++cell) {
    for (std::size_t k = 0; k < d; ++k)
      c[idx(k)] = box.lo[idx(k)] + (2.0 * static_cast<double>(digit[k]) + 1.0) * h[idx(k)];
    double lo_min = std::numeric_limits<double>::infinity();
    double hi_min = std::numeric_limits<double>::infinity();
    bool outside = false;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      const double s = signed_distance(c, hs[j]);
      if (s + width[j] < 0) {
        outside = true;
        break;
      }
      lo_min = std::min(lo_min, s - width[j]);
      hi_min = std::min(hi_min, s + width[j]);
    }
    if (!outside) {
      maybe.push_back(lo_min);
      if (lo_min >= 0) sure.push_back(hi_min);
    }
    for (std::size_t k = 0; k < d && ++digit[k] == res; ++k) digit[k] = 0;
  }
  std::sort(sure.begin(), sure.end());
  std::sort(maybe.begin(), maybe.end());
  const double cell_volume = (2.0 * h).prod();
  std::vector<GridBounds> out;
  for (double r : radii) {
    if (!(r >= 0)) throw Error(ErrorCode::InvalidArgument, "radius must be non-negative");
    out.push_back({cell_volume * static_cast<double>(count_below(sure, r)),
                   cell_volume * static_cast<double>(count_below(maybe, r))});
  }
  return out;
}

GridBounds grid_inner_volume(const Polytope& p, double r, std::size_t res, std::size_t max_cells,
                             const Tolerances& tol) {
  return grid_inner_volume_batch(p, {r}, res, max_cells, tol).front();
}

std::vector<double> verification_radii(const PiecewisePoly& V, std::size_t samples) {
  const auto& bps = V.breakpoints();
  if (bps.size() < 2) throw Error(ErrorCode::InvalidArgument, "volume function needs at least one bounded phase");
  const double g = bps.back();
  const double tau = 1e-6 * g;
  const std::size_t phases = bps.size() - 1;
  const std::size_t per_phase = std::max<std::size_t>(2, (samples + phases - 1) / phases);
  std::vector<double> r{bps.front()};
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    for (std::size_t k = 0; k < per_phase; ++k)
      r.push_back(bps[i] + (static_cast<double>(k) + 0.5) / static_cast<double>(per_phase) * (bps[i + 1] - bps[i]));
  for (std::size_t i = 1; i < bps.size(); ++i) {
    r.push_back(bps[i] - tau);
    r.push_back(bps[i] + tau);
  }
  r.push_back(1.1 * g);
  std::sort(r.begin(), r.end());
  return r;
}

VerifyReport verify_volume_function(const Polytope& p, const PiecewisePoly& V, std::size_t samples,
                                    std::uint64_t seed, const VerifyOptions& opt, const Tolerances& tol) {
  const auto radii = verification_radii(V, samples);
  const auto mc = mc_inner_volume_batch(p, radii, opt.mc_samples, seed, tol);
  const std::size_t res = opt.grid_resolution ? opt.grid_resolution : default_grid_resolution(p.dim());
  const auto grid = grid_inner_volume_batch(p, radii, res, std::size_t{1} << 26, tol);
  VerifyReport rep;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double sigma = std::max(mc[i].std_error, mc[i].resolution);
    VerifyRow row{radii[i], V.evaluate(radii[i]), mc[i].estimate, sigma, grid[i].lower, grid[i].upper};
    const double scale = 1e-9 * std::max(1.0, std::abs(grid[i].upper));
    row.z = (row.engine - row.mc) / sigma;
    row.bracketed = row.engine >= grid[i].lower - scale && row.engine <= grid[i].upper + scale;
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(row.z));
    if (!row.bracketed) ++rep.bracket_violations;
    rep.rows.push_back(row);
  }
  rep.passed = rep.max_abs_z <= opt.z_limit && rep.bracket_violations == 0;
  return rep;
}

}  // namespace innervol
