#include "innervol/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "innervol/error.hpp"

namespace innervol {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Parallelism threshold on |pr_host(N_j)| for unit normals.
constexpr double kParallel = 1e-7;

void check_arrangement(const GlidingArrangement& a, const CellIndex& cell) {
  if (a.dim == 0) throw Error(ErrorCode::InvalidArgument, "gliding arrangement must have positive dimension");
  if (cell.signs.size() != a.members.size())
    throw Error(ErrorCode::DimensionMismatch, "cell index length differs from arrangement size");
  for (const auto& m : a.members)
    if (m.plane.dim() != a.dim || static_cast<std::size_t>(m.velocity.size()) != a.dim)
      throw Error(ErrorCode::DimensionMismatch, "gliding hyperplane dimension differs from arrangement");
  for (int s : cell.signs)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "cell signs must be +1 or -1");
}

double chebyshev_radius(const GlidingArrangement& a, const CellIndex& cell, double t, const Tolerances& tol) {
  const std::size_t d = a.dim;
  std::vector<LinearConstraint> rows;
  for (const auto& h : cell_halfspaces_at(a, cell, t)) {
    Vector row(idx(d + 1));
    row.head(idx(d)) = h.normal;
    row[idx(d)] = -1.0;
    rows.push_back({row, h.offset, Sense::GreaterEqual});
  }
  Vector obj = Vector::Zero(idx(d + 1));
  obj[idx(d)] = 1.0;
  const auto res = solve_lp(obj, rows, tol);
  if (res.status == LpStatus::Unbounded) throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
  if (res.status == LpStatus::Infeasible) return -1.0;
  return res.optimum;
}

void check_bounded(const GlidingArrangement& a, const CellIndex& cell, double t, const Tolerances& tol) {
  std::vector<LinearConstraint> rows;
  for (const auto& h : cell_halfspaces_at(a, cell, t)) rows.push_back({h.normal, h.offset, Sense::GreaterEqual});
  for (std::size_t k = 0; k < a.dim; ++k)
    for (double s : {1.0, -1.0})
      if (solve_lp(s * Vector::Unit(idx(a.dim), idx(k)), rows, tol).status == LpStatus::Unbounded)
        throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
}

double direct_volume(const GlidingArrangement& a, const CellIndex& cell, double t, const Tolerances& tol) {
  try {
    return polytope_volume(Polytope::from_halfspaces(a.dim, cell_halfspaces_at(a, cell, t), tol), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::LowerDimensional || e.code() == ErrorCode::Empty) return 0.0;
    if (e.code() == ErrorCode::UnboundedInput) throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
    throw;
  }
}

PiecewisePoly zero_on(int degree, const TimeWindow& w) {
  return PiecewisePoly(degree, {w.lo, w.hi}, {Polynomial()});
}

// Places a function known on the support into the window, zero elsewhere.
PiecewisePoly embed(const PiecewisePoly& on_support, const TimeWindow& s, const TimeWindow& w, const Tolerances& tol) {
  const double eps = tol.breakpoint * std::max(w.length(), 1e-300);
  std::vector<double> bps;
  std::vector<Polynomial> pieces;
  const bool zero_left = s.lo > w.lo + eps;
  const bool zero_right = s.hi < w.hi - eps;
  if (zero_left) {
    bps.push_back(w.lo);
    pieces.push_back(Polynomial());
  }
  const auto& sb = on_support.breakpoints();
  for (std::size_t i = 0; i < sb.size(); ++i) {
    double b = sb[i];
    if (i == 0 && !zero_left) b = w.lo;
    if (i + 1 == sb.size() && !zero_right) b = w.hi;
    bps.push_back(b);
    if (i + 1 < sb.size()) pieces.push_back(on_support.pieces()[i]);
  }
  if (zero_right) {
    pieces.push_back(Polynomial());
    bps.push_back(w.hi);
  }
  return PiecewisePoly(on_support.degree(), std::move(bps), std::move(pieces));
}

// Restricts a window by the constraints of members parallel to the host: on
// H_host(t) each of them is satisfied everywhere or nowhere.
TimeWindow parallel_window(const GlidingArrangement& a, const CellIndex& cell, std::size_t host,
                           const std::vector<std::size_t>& parallel, TimeWindow w, const Tolerances& tol) {
  const auto& h = a.members[host];
  for (std::size_t l : parallel) {
    const auto& m = a.members[l];
    const double sigma = m.plane.normal.dot(h.plane.normal) > 0 ? 1.0 : -1.0;
    const double eps = cell.signs[l];
    const double alpha = eps * (sigma * h.plane.offset - m.plane.offset);
    const double beta = eps * (sigma * h.speed() - m.speed());
    if (std::abs(beta) <= 1e-14) {
      if (alpha < -tol.feas) return {1.0, 0.0};
      continue;
    }
    const double root = -alpha / beta;
    if (beta > 0) w.lo = std::max(w.lo, root);
    else w.hi = std::min(w.hi, root);
  }
  return w;
}

bool same_halfspace(const GlidingHyperplane& a, int ea, const GlidingHyperplane& b, int eb, const Tolerances& tol) {
  return (ea * a.plane.normal - eb * b.plane.normal).norm() <= tol.feas &&
         std::abs(ea * a.plane.offset - eb * b.plane.offset) <= tol.feas &&
         std::abs(ea * a.speed() - eb * b.speed()) <= tol.feas;
}

struct Computed {
  PiecewisePoly W;
  std::optional<TimeWindow> support;
};

class Recursion {
 public:
  explicit Recursion(const Tolerances& tol) : tol_(tol) {}

  Computed run(const GlidingArrangement& a, const CellIndex& cell, const TimeWindow& window,
               const std::vector<std::size_t>& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Computed out = compute(a, cell, window, key);
    memo_.emplace(key, out);
    return out;
  }

 private:
  Computed compute(const GlidingArrangement& a, const CellIndex& cell, const TimeWindow& window,
                   const std::vector<std::size_t>& key) {
    const int d = static_cast<int>(a.dim);
    const auto support = support_interval(a, cell, window, tol_);
    if (!support || support->length() <= tol_.breakpoint * window.length())
      return {zero_on(d, window), support};
    if (a.dim == 1) return {base_case_1d(a, cell, window, tol_).W, support};
    if (key.empty()) check_bounded(a, cell, 0.5 * (support->lo + support->hi), tol_);

    // Facet volume functions, weighted by the inward speed of each facet.
    std::vector<PiecewisePoly> facet_fns;
    std::vector<double> weights;
    facet_fns.reserve(a.members.size());
    for (std::size_t j = 0; j < a.members.size(); ++j) {
      const double weight = -cell.signs[j] * a.members[j].speed();
      if (std::abs(weight) <= 1e-15) continue;
      bool duplicate = false;
      for (std::size_t k = 0; k < j && !duplicate; ++k)
        duplicate = same_halfspace(a.members[j], cell.signs[j], a.members[k], cell.signs[k], tol_);
      if (duplicate) continue;

      TraceResult tr = trace_arrangement(a, cell, j, tol_);
      const TimeWindow child_window = parallel_window(a, cell, j, tr.parallel, window, tol_);
      if (child_window.empty() || child_window.length() <= tol_.breakpoint * window.length()) continue;
      std::vector<std::size_t> child_key = key;
      child_key.insert(std::upper_bound(child_key.begin(), child_key.end(), a.members[j].source),
                       a.members[j].source);
      facet_fns.push_back(run(tr.arrangement, tr.cell, child_window, child_key).W);
      weights.push_back(weight);
    }
    std::vector<std::pair<double, const PiecewisePoly*>> terms;
    for (std::size_t i = 0; i < facet_fns.size(); ++i) terms.emplace_back(weights[i], &facet_fns[i]);
    const PiecewisePoly rate = PiecewisePoly::combine(d - 1, terms, support->lo, support->hi, tol_);

    // Integration constant.
    const double length = support->length();
    double anchor_t, anchor_v = 0.0;
    const double flat = tol_.feas * std::max(1.0, length);
    if (chebyshev_radius(a, cell, support->hi, tol_) <= flat) {
      anchor_t = support->hi;
    } else if (chebyshev_radius(a, cell, support->lo, tol_) <= flat) {
      anchor_t = support->lo;
    } else {
      anchor_t = 0.5 * (support->lo + support->hi);
      for (double b : rate.breakpoints())
        if (std::abs(b - anchor_t) <= tol_.breakpoint * length) anchor_t += 1e-6 * length;
      anchor_v = direct_volume(a, cell, anchor_t, tol_);
    }
    PiecewisePoly on_support = rate.antiderivative_anchored(anchor_t, anchor_v);
    on_support = PiecewisePoly(d, on_support.breakpoints(), on_support.pieces());
    return {embed(on_support, *support, window, tol_).normalized(tol_), support};
  }

  Tolerances tol_;
  std::map<std::vector<std::size_t>, Computed> memo_;
};

}  // namespace

std::pair<GlidingArrangement, CellIndex> adapted_arrangement(const Polytope& p) {
  GlidingArrangement a{p.dim(), {}};
  const auto& hs = p.halfspaces();
  for (std::size_t j = 0; j < hs.size(); ++j) a.members.push_back({hs[j], hs[j].normal, j});
  return {std::move(a), CellIndex{std::vector<int>(hs.size(), 1)}};
}

Frame host_frame(const GlidingHyperplane& host) {
  return {host.plane.offset * host.plane.normal, orthonormal_complement(host.plane.normal)};
}

GlidingHyperplane trace_hyperplane(const GlidingHyperplane& mover, const GlidingHyperplane& host, const Frame& frame,
                                   const Tolerances&) {
  const Vector proj = frame.basis.transpose() * mover.plane.normal;
  const double len = proj.norm();
  if (len <= kParallel) throw Error(ErrorCode::ParallelPlanes, "mover is parallel to the host");
  const Vector n = proj / len;
  const double offset = (mover.plane.offset - mover.plane.normal.dot(frame.origin)) / len;
  const double speed = (mover.velocity - host.velocity).dot(mover.plane.normal) / len;
  return {{n, offset}, speed * n, mover.source};
}

TraceResult trace_arrangement(const GlidingArrangement& a, const CellIndex& cell, std::size_t host,
                              const Tolerances& tol) {
  check_arrangement(a, cell);
  if (a.dim < 2) throw Error(ErrorCode::InvalidArgument, "traces need dimension at least 2");
  if (host >= a.members.size()) throw Error(ErrorCode::InvalidArgument, "host index out of range");
  TraceResult out;
  out.arrangement.dim = a.dim - 1;
  out.frame = host_frame(a.members[host]);
  for (std::size_t l = 0; l < a.members.size(); ++l) {
    if (l == host) continue;
    const Vector proj = out.frame.basis.transpose() * a.members[l].plane.normal;
    if (proj.norm() <= kParallel) {
      out.parallel.push_back(l);
      continue;
    }
    out.arrangement.members.push_back(trace_hyperplane(a.members[l], a.members[host], out.frame, tol));
    out.cell.signs.push_back(cell.signs[l]);
  }
  return out;
}

std::vector<Hyperplane> cell_halfspaces_at(const GlidingArrangement& a, const CellIndex& cell, double t) {
  std::vector<Hyperplane> out;
  out.reserve(a.members.size());
  for (std::size_t j = 0; j < a.members.size(); ++j) {
    const double s = cell.signs[j];
    out.push_back({s * a.members[j].plane.normal, s * a.members[j].offset_at(t)});
  }
  return out;
}

std::optional<TimeWindow> support_interval(const GlidingArrangement& a, const CellIndex& cell,
                                           const TimeWindow& window, const Tolerances& tol) {
  check_arrangement(a, cell);
  if (!std::isfinite(window.lo) || !std::isfinite(window.hi))
    throw Error(ErrorCode::InvalidArgument, "support window must be finite");
  if (window.empty()) return std::nullopt;
  const std::size_t d = a.dim;
  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < a.members.size(); ++j) {
    const double s = cell.signs[j];
    const auto& m = a.members[j];
    Vector row(idx(d + 1));
    row.head(idx(d)) = s * m.plane.normal;
    row[idx(d)] = -s * m.speed();
    rows.push_back({row, s * m.plane.offset, Sense::GreaterEqual});
  }
  const Vector t_axis = Vector::Unit(idx(d + 1), idx(d));
  rows.push_back({t_axis, window.lo, Sense::GreaterEqual});
  rows.push_back({t_axis, window.hi, Sense::LessEqual});
  const auto hi = solve_lp(t_axis, rows, tol);
  if (hi.status == LpStatus::Infeasible) return std::nullopt;
  const auto lo = solve_lp(-t_axis, rows, tol);
  if (lo.status == LpStatus::Infeasible) return std::nullopt;
  TimeWindow s{std::clamp(-lo.optimum, window.lo, window.hi), std::clamp(hi.optimum, window.lo, window.hi)};
  if (s.hi < s.lo) s.hi = s.lo;
  return s;
}

VolumeFunctionResult base_case_1d(const GlidingArrangement& a, const CellIndex& cell, const TimeWindow& window,
                                  const Tolerances& tol) {
  check_arrangement(a, cell);
  if (a.dim != 1) throw Error(ErrorCode::InvalidArgument, "base case needs a 1-dimensional arrangement");
  if (!(window.hi > window.lo)) throw Error(ErrorCode::InvalidArgument, "base case needs a non-degenerate window");

  // Each constraint is x >= c0 + c1 t (lower) or x <= c0 + c1 t (upper).
  struct Affine {
    double c0, c1;
    double operator()(double t) const { return c0 + c1 * t; }
  };
  std::vector<Affine> lower, upper;
  for (std::size_t j = 0; j < a.members.size(); ++j) {
    const auto& m = a.members[j];
    const double e = cell.signs[j] * m.plane.normal[0];
    const double s = cell.signs[j];
    if (e > 0) lower.push_back({s * m.plane.offset / e, s * m.speed() / e});
    else upper.push_back({s * m.plane.offset / e, s * m.speed() / e});
  }
  if (lower.empty() || upper.empty()) throw Error(ErrorCode::UnboundedCell, "1-dimensional cell is unbounded");

  std::vector<double> cand{window.lo, window.hi};
  std::vector<Affine> all = lower;
  all.insert(all.end(), upper.begin(), upper.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t k = i + 1; k < all.size(); ++k) {
      const double dc1 = all[i].c1 - all[k].c1;
      if (std::abs(dc1) <= 1e-15) continue;
      const double t = (all[k].c0 - all[i].c0) / dc1;
      if (t > window.lo && t < window.hi) cand.push_back(t);
    }
  std::vector<double> bps = merge_breakpoints(std::move(cand), tol.breakpoint * window.length());
  bps.front() = window.lo;
  bps.back() = window.hi;

  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double mid = 0.5 * (bps[i] + bps[i + 1]);
    const Affine* lo = &lower.front();
    const Affine* up = &upper.front();
    for (const auto& l : lower)
      if (l(mid) > (*lo)(mid)) lo = &l;
    for (const auto& u : upper)
      if (u(mid) < (*up)(mid)) up = &u;
    if ((*up)(mid) - (*lo)(mid) <= 0.0) pieces.emplace_back();
    else pieces.emplace_back(std::vector<double>{up->c0 - lo->c0, up->c1 - lo->c1}, 0.0);
  }
  VolumeFunctionResult out;
  out.W = PiecewisePoly(1, std::move(bps), std::move(pieces)).normalized(tol);
  out.support = support_interval(a, cell, window, tol);
  std::vector<Vector> normals;
  for (const auto& m : a.members) normals.push_back(m.plane.normal);
  out.claimed_class = absolute_rank(normals, tol).rank - 1;
  return out;
}

VolumeFunctionResult cell_volume_function(const GlidingArrangement& a, const CellIndex& cell,
                                          const TimeWindow& window, const Tolerances& tol) {
  check_arrangement(a, cell);
  if (!std::isfinite(window.lo) || !std::isfinite(window.hi) || !(window.hi > window.lo))
    throw Error(ErrorCode::InvalidArgument, "volume function window must be finite and non-degenerate");
  Recursion rec(tol);
  const Computed c = rec.run(a, cell, window, {});
  std::vector<Vector> normals;
  for (const auto& m : a.members) normals.push_back(m.plane.normal);
  return {c.W, c.support, absolute_rank(normals, tol).rank - 1};
}

InnerVolumeFunction inner_volume_function(const Polytope& p, double window_margin, const Tolerances& tol) {
  if (p.dim() == 0) throw Error(ErrorCode::InvalidArgument, "polytope must have positive dimension");
  if (!(window_margin > 0)) throw Error(ErrorCode::InvalidArgument, "window margin must be positive");
  const auto [arr, cell] = adapted_arrangement(p);
  const double g_lp = inradius(p, tol).g;
  const TimeWindow window{0.0, g_lp * (1.0 + window_margin)};
  const VolumeFunctionResult res = cell_volume_function(arr, cell, window, tol);
  if (!res.support) throw Error(ErrorCode::NumericalFailure, "adapted cell has empty support");
  const double g = res.support->hi;
  const double eps = tol.breakpoint * window.length();
  const int d = static_cast<int>(p.dim());

  std::vector<double> bps;
  std::vector<Polynomial> w_pieces, v_pieces;
  const double volume = res.W.evaluate(0.0);
  const auto& wb = res.W.breakpoints();
  for (std::size_t i = 0; i + 1 < wb.size() && wb[i] < g - eps; ++i) {
    bps.push_back(wb[i]);
    w_pieces.push_back(res.W.pieces()[i]);
    v_pieces.push_back(Polynomial::constant(volume) - res.W.pieces()[i]);
  }
  bps.push_back(g);
  PiecewisePoly W(d, bps, std::move(w_pieces), std::nullopt, Polynomial());
  PiecewisePoly V(d, std::move(bps), std::move(v_pieces), std::nullopt, Polynomial::constant(volume));
  return {V.normalized(tol), W.normalized(tol), g, volume, res.claimed_class};
}

}  // namespace innervol
