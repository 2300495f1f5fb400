#ifndef INNERVOL_EQUIANGULAR_HPP
#define INNERVOL_EQUIANGULAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "innervol/geometry.hpp"
#include "innervol/piecewise.hpp"

namespace innervol {

/// A face of the lattice, reached along one chain of facets. Faces shared by
/// several chains appear once per chain; `key` identifies them.
struct FaceNode {
  std::size_t dim = 0;
  Polytope local = Polytope::point();  // in the face's own coordinates
  Frame frame;                         // face coordinates -> ambient coordinates
  std::vector<std::size_t> chain;      // facet index at each level, from the top
  std::vector<Vector> vertices;        // ambient coordinates
  std::string key;                     // rounded, sorted vertex fingerprint
  double volume = 0.0;                 // dim-volume (1 for a vertex)
  std::vector<FaceNode> children;
};

FaceNode face_lattice(const Polytope& p, const Tolerances& tol = {});

/// Number of distinct faces per dimension, index 0 = vertices.
std::vector<std::size_t> face_counts(const FaceNode& root);

/// Outer dihedral angle arccos<N_i, N_j> when facets i and j share a ridge.
std::optional<double> dihedral_angle(const Polytope& p, std::size_t i, std::size_t j, const Tolerances& tol = {});

/// Omega_k: the volume at level k, summed over facets above it.
double omega(const FaceNode& node, std::size_t k);
/// The same quantity as sum over distinct k-faces of (number of flags from
/// the top down to the face) * vol_k(face).
double omega_by_flags(const FaceNode& root, std::size_t k);

struct EquiangularWitness {
  std::size_t level = 0;            // dimension of the offending face
  std::vector<std::size_t> chain;   // its facet chain
  std::size_t facet_i = 0, facet_j = 0;
  double angle = 0.0;
  double expected = 0.0;
};

struct EquiangularProfile {
  std::vector<double> alphas;  // alpha_2..alpha_d
  std::vector<double> gammas;  // gamma_1..gamma_d
  std::vector<double> omegas;  // Omega_0..Omega_d
};

struct EquiangularCheck {
  std::optional<EquiangularProfile> profile;
  std::optional<EquiangularWitness> witness;
};

EquiangularCheck check_dimensionwise_equiangular(const Polytope& p, const Tolerances& tol = {});
EquiangularCheck check_dimensionwise_equiangular(const FaceNode& root, const Tolerances& tol = {});

struct EquiangularPolynomial {
  Polynomial poly;                 // W_P on [0, valid_to]
  double valid_to = 0.0;           // first breakpoint of the engine's W_P
  EquiangularProfile profile;
};

/// sum_k (-1)^{d-k} Omega_k gamma_{k+1}...gamma_d r^{d-k} / (d-k)!. Raises NotEquiangular.
EquiangularPolynomial equiangular_volume_polynomial(const Polytope& p, const Tolerances& tol = {});
/// The polynomial alone, from a lattice, without the engine's validity bound.
Polynomial equiangular_polynomial(const EquiangularProfile& profile, std::size_t dim);

struct CorollaryForm {
  Polynomial poly;
  std::vector<std::size_t> mus;          // mu_(1)..mu_(d)
  std::vector<double> skeleton_volumes;  // vol_k(P_(k)), k = 0..d
};

/// Requires every (k-1)-face to lie in the same number mu_(k) of k-faces
/// (NotUniform otherwise) and a dimension-wise equiangular P.
CorollaryForm corollary_form(const Polytope& p, const Tolerances& tol = {});

}  // namespace innervol

#endif  // INNERVOL_EQUIANGULAR_HPP
