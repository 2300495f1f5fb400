#ifndef INNERVOL_GEOMETRY_HPP
#define INNERVOL_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "innervol/lp.hpp"
#include "innervol/tolerances.hpp"

namespace innervol {

/// Oriented hyperplane with unit inner normal. The closed halfspace it bounds
/// is {x : <normal, x> - offset >= 0}.
struct Hyperplane {
  Vector normal;
  double offset = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(normal.size()); }
};

enum class HalfspaceSense { LessEqual, GreaterEqual };

/// {x : <a,x> <= b} (or >=) rewritten with a unit inner normal.
Hyperplane normalize_halfspace(const Vector& a, double b, HalfspaceSense sense, const Tolerances& tol = {});

/// <q, normal> - offset; positive on the inner side.
double signed_distance(const Vector& q, const Hyperplane& h);

/// Affine embedding y -> origin + basis * y of a lower-dimensional coordinate
/// system into its parent space. The basis columns are orthonormal.
struct Frame {
  Vector origin;
  Matrix basis;

  Vector lift(const Vector& local) const { return origin + basis * local; }
};

/// Orthonormal basis of the complement of a unit vector, by Gram-Schmidt over
/// the canonical basis in index order (so frames are reproducible).
Matrix orthonormal_complement(const Vector& normal);

/// Bounded, full-dimensional, minimal H-representation. Dimension 0 is the
/// single point (no halfspaces), used as the bottom of face recursions.
class Polytope {
 public:
  /// Validates and minimizes; raises UnboundedInput, LowerDimensional, Empty.
  static Polytope from_halfspaces(std::size_t dim, std::vector<Hyperplane> halfspaces,
                                  const Tolerances& tol = {});
  static Polytope point() { return Polytope(0, {}); }

  std::size_t dim() const { return dim_; }
  const std::vector<Hyperplane>& halfspaces() const { return halfspaces_; }
  std::size_t facet_count() const { return halfspaces_.size(); }

 private:
  Polytope(std::size_t dim, std::vector<Hyperplane> hs) : dim_(dim), halfspaces_(std::move(hs)) {}
  friend struct PolytopeAccess;

  std::size_t dim_ = 0;
  std::vector<Hyperplane> halfspaces_;
};

struct RedundancyResult {
  Polytope polytope;
  std::vector<std::size_t> kept;  // indices into the input that survived
};

/// Drops every halfspace implied by the others (weakly redundant ones too).
/// Later duplicates are removed first, so the first occurrence survives.
RedundancyResult remove_redundant(std::size_t dim, const std::vector<Hyperplane>& halfspaces,
                                  const Tolerances& tol = {});

struct VertexSet {
  std::vector<Vector> vertices;
};

/// Brute force over all d-subsets of facets: O(C(m, d)) small solves.
/// Singular subsets (condition number above 1e12) do not define vertices and
/// are skipped.
VertexSet enumerate_vertices(const Polytope& p, const Tolerances& tol = {});

struct Inradius {
  double g = 0.0;
  Vector center;
};

/// Chebyshev ball: maximize g subject to signed_distance(x, H_j) >= g.
Inradius inradius(const Polytope& p, const Tolerances& tol = {});

struct FacetPolytope {
  Polytope polytope;              // in the facet's own (d-1)-coordinates
  Frame frame;                    // facet coordinates -> parent coordinates
  std::vector<std::size_t> source;  // parent halfspace index of each facet halfspace
};

/// Facet j expressed in a deterministic frame of its hyperplane: the other
/// halfspaces are intersected with it and reduced to a minimal family.
FacetPolytope facet_polytope(const Polytope& p, std::size_t j, const Tolerances& tol = {});

/// d-volume by cone decomposition over facets, recursing on dimension
/// (the 0-volume of a point is 1).
double polytope_volume(const Polytope& p, const Tolerances& tol = {});

struct AbsoluteRank {
  int rank = 0;
  /// True when no subfamily is linearly dependent, so rank is min(m, d) by
  /// convention rather than by the "k+1 dependent" clause.
  bool all_independent = false;
};

/// One less than the size of the smallest linearly dependent subfamily.
AbsoluteRank absolute_rank(const std::vector<Vector>& normals, const Tolerances& tol = {});

std::vector<Vector> facet_normals(const Polytope& p);

}  // namespace innervol

#endif  // INNERVOL_GEOMETRY_HPP
