#include "innervol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "innervol/error.hpp"

namespace innervol {

struct PolytopeAccess {
  static Polytope make(std::size_t dim, std::vector<Hyperplane> hs) { return Polytope(dim, std::move(hs)); }
};

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Rows <N_j, x> - g >= b_j over variables (x, g); the Chebyshev LP.
std::vector<LinearConstraint> chebyshev_rows(std::size_t dim, const std::vector<Hyperplane>& hs) {
  std::vector<LinearConstraint> rows;
  rows.reserve(hs.size() + 1);
  for (const auto& h : hs) {
    Vector a(idx(dim + 1));
    a.head(idx(dim)) = h.normal;
    a[idx(dim)] = -1.0;
    rows.push_back({a, h.offset, Sense::GreaterEqual});
  }
  return rows;
}

std::vector<LinearConstraint> halfspace_rows(const std::vector<Hyperplane>& hs) {
  std::vector<LinearConstraint> rows;
  rows.reserve(hs.size());
  for (const auto& h : hs) rows.push_back({h.normal, h.offset, Sense::GreaterEqual});
  return rows;
}

void check_dims(std::size_t dim, const std::vector<Hyperplane>& hs) {
  for (const auto& h : hs)
    if (h.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "halfspace dimension differs from polytope dimension");
}

void for_each_subset(std::size_t m, std::size_t k, const auto& fn) {
  if (k > m) return;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (!fn(pick)) return;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Hyperplane normalize_halfspace(const Vector& a, double b, HalfspaceSense sense, const Tolerances& tol) {
  const double norm = a.norm();
  if (norm < tol.unit) throw Error(ErrorCode::ZeroNormal, "halfspace has a zero normal");
  // <a,x> <= b  <=>  <-a,x> - (-b) >= 0
  const double s = (sense == HalfspaceSense::LessEqual) ? -1.0 : 1.0;
  return {s * a / norm, s * b / norm};
}

double signed_distance(const Vector& q, const Hyperplane& h) {
  if (q.size() != h.normal.size()) throw Error(ErrorCode::DimensionMismatch, "point and hyperplane dimensions differ");
  return q.dot(h.normal) - h.offset;
}

Matrix orthonormal_complement(const Vector& normal) {
  const Eigen::Index d = normal.size();
  Matrix basis(d, std::max<Eigen::Index>(d - 1, 0));
  Eigen::Index found = 0;
  for (Eigen::Index i = 0; i < d && found < d - 1; ++i) {
    Vector v = Vector::Unit(d, i);
    for (int pass = 0; pass < 2; ++pass) {
      v -= normal.dot(v) * normal;
      for (Eigen::Index k = 0; k < found; ++k) v -= basis.col(k).dot(v) * basis.col(k);
    }
    const double n = v.norm();
    if (n > 1e-6) basis.col(found++) = v / n;
  }
  if (found != d - 1) throw Error(ErrorCode::NumericalFailure, "could not complete an orthonormal frame");
  return basis;
}

RedundancyResult remove_redundant(std::size_t dim, const std::vector<Hyperplane>& hs, const Tolerances& tol) {
  check_dims(dim, hs);
  if (dim == 0) return {Polytope::point(), {}};
  for (const auto& h : hs)
    if (std::abs(h.normal.norm() - 1.0) > 1e3 * tol.unit)
      throw Error(ErrorCode::InvalidArgument, "halfspace normal is not unit length");

  // Emptiness and full-dimensionality via a capped Chebyshev LP.
  {
    auto rows = chebyshev_rows(dim, hs);
    Vector cap = Vector::Zero(idx(dim + 1));
    cap[idx(dim)] = 1.0;
    rows.push_back({cap, 1.0, Sense::LessEqual});
    Vector obj = Vector::Zero(idx(dim + 1));
    obj[idx(dim)] = 1.0;
    const auto res = solve_lp(obj, rows, tol);
    if (res.status != LpStatus::Optimal) throw Error(ErrorCode::NumericalFailure, "Chebyshev LP did not reach an optimum");
    if (res.optimum < -tol.feas) throw Error(ErrorCode::Empty, "halfspace intersection is empty");
    if (res.optimum <= tol.feas) throw Error(ErrorCode::LowerDimensional, "halfspace intersection has no interior");
  }

  // Boundedness: every coordinate has a finite max and min.
  {
    const auto rows = halfspace_rows(hs);
    for (std::size_t k = 0; k < dim; ++k) {
      for (double s : {1.0, -1.0}) {
        const auto res = solve_lp(s * Vector::Unit(idx(dim), idx(k)), rows, tol);
        if (res.status == LpStatus::Unbounded)
          throw Error(ErrorCode::UnboundedInput, "halfspace intersection is unbounded");
      }
    }
  }

  std::vector<bool> alive(hs.size(), true);
  for (std::size_t i = hs.size(); i-- > 0;) {
    std::vector<LinearConstraint> rows;
    for (std::size_t j = 0; j < hs.size(); ++j)
      if (j != i && alive[j]) rows.push_back({hs[j].normal, hs[j].offset, Sense::GreaterEqual});
    const auto res = solve_lp(-hs[i].normal, rows, tol);
    if (res.status == LpStatus::Unbounded) continue;
    const double min_slack = -res.optimum - hs[i].offset;
    if (min_slack >= -tol.feas) alive[i] = false;
  }

  RedundancyResult out{Polytope::point(), {}};
  std::vector<Hyperplane> kept;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!alive[i]) continue;
    kept.push_back(hs[i]);
    out.kept.push_back(i);
  }
  out.polytope = PolytopeAccess::make(dim, std::move(kept));
  return out;
}

Polytope Polytope::from_halfspaces(std::size_t dim, std::vector<Hyperplane> halfspaces, const Tolerances& tol) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "polytope dimension must be positive");
  return remove_redundant(dim, halfspaces, tol).polytope;
}

VertexSet enumerate_vertices(const Polytope& p, const Tolerances& tol) {
  const std::size_t d = p.dim();
  const auto& hs = p.halfspaces();
  VertexSet out;
  if (d == 0) {
    out.vertices.push_back(Vector(0));
    return out;
  }
  for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& pick) {
    Matrix a(idx(d), idx(d));
    Vector b(idx(d));
    for (std::size_t r = 0; r < d; ++r) {
      a.row(idx(r)) = hs[pick[r]].normal.transpose();
      b[idx(r)] = hs[pick[r]].offset;
    }
    Eigen::JacobiSVD<Matrix> svd(a);
    const auto& sv = svd.singularValues();
    if (sv[idx(d - 1)] <= 1e-12 * sv[0]) return true;
    const Vector x = a.fullPivLu().solve(b);
    for (const auto& h : hs)
      if (signed_distance(x, h) < -tol.feas) return true;
    for (const auto& v : out.vertices)
      if ((v - x).norm() <= tol.vertex) return true;
    out.vertices.push_back(x);
    return true;
  });
  return out;
}

Inradius inradius(const Polytope& p, const Tolerances& tol) {
  const std::size_t d = p.dim();
  if (d == 0) return {0.0, Vector(0)};
  Vector obj = Vector::Zero(idx(d + 1));
  obj[idx(d)] = 1.0;
  const auto res = solve_lp(obj, chebyshev_rows(d, p.halfspaces()), tol);
  if (res.status != LpStatus::Optimal) throw Error(ErrorCode::NumericalFailure, "inradius LP did not reach an optimum");
  return {res.optimum, res.witness.head(idx(d))};
}

FacetPolytope facet_polytope(const Polytope& p, std::size_t j, const Tolerances& tol) {
  const auto& hs = p.halfspaces();
  if (j >= hs.size()) throw Error(ErrorCode::InvalidArgument, "facet index out of range");
  const Hyperplane& host = hs[j];
  Frame frame{host.offset * host.normal, orthonormal_complement(host.normal)};

  if (p.dim() == 1) return {Polytope::point(), std::move(frame), {}};

  std::vector<Hyperplane> traced;
  std::vector<std::size_t> origin;
  for (std::size_t l = 0; l < hs.size(); ++l) {
    if (l == j) continue;
    const Vector proj = frame.basis.transpose() * hs[l].normal;
    const double len = proj.norm();
    const double at_origin = hs[l].normal.dot(frame.origin) - hs[l].offset;
    if (len <= tol.rank * 1e3) {
      // Parallel: the whole hyperplane lies on one side.
      if (at_origin < -tol.feas) throw Error(ErrorCode::Empty, "facet is cut away by a parallel halfspace");
      continue;
    }
    traced.push_back({proj / len, -at_origin / len});
    origin.push_back(l);
  }
  auto reduced = remove_redundant(p.dim() - 1, traced, tol);
  FacetPolytope out{std::move(reduced.polytope), std::move(frame), {}};
  for (std::size_t k : reduced.kept) out.source.push_back(origin[k]);
  return out;
}

double polytope_volume(const Polytope& p, const Tolerances& tol) {
  const std::size_t d = p.dim();
  if (d == 0) return 1.0;
  const auto& hs = p.halfspaces();
  if (d == 1) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& h : hs) {
      // n x >= b with n = +-1
      if (h.normal[0] > 0) lo = std::max(lo, h.offset / h.normal[0]);
      else hi = std::min(hi, h.offset / h.normal[0]);
    }
    return std::max(0.0, hi - lo);
  }
  const Vector center = inradius(p, tol).center;
  double vol = 0.0;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    const double height = signed_distance(center, hs[j]);
    vol += height * polytope_volume(facet_polytope(p, j, tol).polytope, tol);
  }
  return vol / static_cast<double>(d);
}

AbsoluteRank absolute_rank(const std::vector<Vector>& normals, const Tolerances& tol) {
  if (normals.empty()) return {0, false};
  const std::size_t d = static_cast<std::size_t>(normals.front().size());
  for (const auto& n : normals)
    if (static_cast<std::size_t>(n.size()) != d) throw Error(ErrorCode::DimensionMismatch, "normals differ in dimension");

  const std::size_t m = normals.size();
  const std::size_t limit = std::min(m, d + 1);
  for (std::size_t s = 1; s <= limit; ++s) {
    bool dependent = false;
    for_each_subset(m, s, [&](const std::vector<std::size_t>& pick) {
      if (s > d) {
        dependent = true;
        return false;
      }
      Matrix a(idx(d), idx(s));
      for (std::size_t c = 0; c < s; ++c) a.col(idx(c)) = normals[pick[c]];
      Eigen::JacobiSVD<Matrix> svd(a);
      if (svd.singularValues()[idx(s - 1)] <= tol.rank) {
        dependent = true;
        return false;
      }
      return true;
    });
    if (dependent) return {static_cast<int>(s) - 1, false};
  }
  return {static_cast<int>(std::min(m, d)), true};
}

std::vector<Vector> facet_normals(const Polytope& p) {
  std::vector<Vector> out;
  out.reserve(p.facet_count());
  for (const auto& h : p.halfspaces()) out.push_back(h.normal);
  return out;
}

}  // namespace innervol
