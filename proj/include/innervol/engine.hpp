#ifndef INNERVOL_ENGINE_HPP
#define INNERVOL_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "innervol/geometry.hpp"
#include "innervol/piecewise.hpp"

namespace innervol {

/// Hyperplane translating with constant velocity: at time t it is
/// {Q : signed_distance(Q, plane) - t <velocity, normal> = 0}.
struct GlidingHyperplane {
  Hyperplane plane;
  Vector velocity;
  /// Index of the originating member in the top-level arrangement; traces
  /// inherit it so iterated traces can be keyed by the set of hosts.
  std::size_t source = 0;

  double speed() const { return plane.normal.dot(velocity); }
  /// Offset of the hyperplane at time t.
  double offset_at(double t) const { return plane.offset + t * speed(); }
};

struct GlidingArrangement {
  std::size_t dim = 0;
  std::vector<GlidingHyperplane> members;  // not necessarily distinct
};

/// Sign vector selecting the cell {Q : eps_j (d(Q, H_j(t))) >= 0 for all j}.
struct CellIndex {
  std::vector<int> signs;
};

struct TimeWindow {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return !(hi >= lo); }
  double length() const { return hi - lo; }
};

struct VolumeFunctionResult {
  /// vol_d(C(t)) on the requested window; zero outside the support.
  PiecewisePoly W;
  std::optional<TimeWindow> support;
  /// absolute rank of the member normals, minus one.
  int claimed_class = 0;
};

/// One gliding hyperplane per facet with velocity equal to its inner normal;
/// the polytope is the all-plus cell.
std::pair<GlidingArrangement, CellIndex> adapted_arrangement(const Polytope& p);

/// The (d-1)-dimensional trace of `mover` on `host`, in coordinates of `frame`
/// whose origin travels with the host's velocity. Raises ParallelPlanes when
/// the normals are dependent.
GlidingHyperplane trace_hyperplane(const GlidingHyperplane& mover, const GlidingHyperplane& host,
                                   const Frame& frame, const Tolerances& tol = {});

/// Deterministic frame of a gliding hyperplane: origin offset*normal at t = 0,
/// Gram-Schmidt basis of the normal's complement.
Frame host_frame(const GlidingHyperplane& host);

struct TraceResult {
  GlidingArrangement arrangement;
  CellIndex cell;
  Frame frame;
  /// Members parallel to the host, excluded from the trace.
  std::vector<std::size_t> parallel;
};

TraceResult trace_arrangement(const GlidingArrangement& a, const CellIndex& cell, std::size_t host,
                              const Tolerances& tol = {});

/// {t in window : C(t) is non-empty}, by minimizing and maximizing t over the
/// (d+1)-variable polyhedron of (Q, t).
std::optional<TimeWindow> support_interval(const GlidingArrangement& a, const CellIndex& cell,
                                           const TimeWindow& window, const Tolerances& tol = {});

/// d = 1: W(t) = max(0, min upper(t) - max lower(t)). Raises UnboundedCell
/// when either side has no bound.
VolumeFunctionResult base_case_1d(const GlidingArrangement& a, const CellIndex& cell, const TimeWindow& window,
                                  const Tolerances& tol = {});

/// Volume function of a bounded cell on a finite window, by recursion on
/// dimension: each member's facet volume comes from the trace arrangement on
/// that member, W' = -sum_j <v_j, eps_j N_j> W_j on the support, and the
/// integration constant comes from a degenerate support end or a direct
/// volume probe. Iterated traces are memoized by their set of hosts.
VolumeFunctionResult cell_volume_function(const GlidingArrangement& a, const CellIndex& cell,
                                          const TimeWindow& window, const Tolerances& tol = {});

struct InnerVolumeFunction {
  PiecewisePoly V;  // vol_d(P \ P(r)) on [0, inf)
  PiecewisePoly W;  // vol_d(P(r)) on [0, inf)
  double g = 0.0;   // where V stabilizes (the inradius)
  double volume = 0.0;
  int class_bound = 0;  // absolute rank - 1
};

InnerVolumeFunction inner_volume_function(const Polytope& p, double window_margin = 0.1,
                                          const Tolerances& tol = {});

/// The cell C(t) as a list of halfspaces at time t.
std::vector<Hyperplane> cell_halfspaces_at(const GlidingArrangement& a, const CellIndex& cell, double t);

}  // namespace innervol

#endif  // INNERVOL_ENGINE_HPP
