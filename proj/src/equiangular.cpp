#include "innervol/equiangular.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "innervol/engine.hpp"
#include "innervol/error.hpp"

namespace innervol {
namespace {

std::string fingerprint(const std::vector<Vector>& vertices, double grid) {
  std::vector<std::vector<long long>> cells;
  for (const auto& v : vertices) {
    std::vector<long long> c;
    for (Eigen::Index i = 0; i < v.size(); ++i) c.push_back(std::llround(v[i] / grid));
    cells.push_back(std::move(c));
  }
  std::sort(cells.begin(), cells.end());
  std::ostringstream out;
  for (const auto& c : cells) {
    out << '(';
    for (long long x : c) out << x << ',';
    out << ')';
  }
  return out.str();
}

FaceNode build(const Polytope& local, Frame frame, std::vector<std::size_t> chain, const Tolerances& tol) {
  FaceNode node;
  node.dim = local.dim();
  node.local = local;
  for (const auto& v : enumerate_vertices(local, tol).vertices) node.vertices.push_back(frame.lift(v));
  node.key = fingerprint(node.vertices, tol.vertex);
  node.volume = polytope_volume(local, tol);
  if (node.dim > 0) {
    for (std::size_t j = 0; j < local.facet_count(); ++j) {
      FacetPolytope fp = facet_polytope(local, j, tol);
      Frame child{frame.lift(fp.frame.origin), frame.basis * fp.frame.basis};
      auto child_chain = chain;
      child_chain.push_back(j);
      node.children.push_back(build(fp.polytope, std::move(child), std::move(child_chain), tol));
    }
  }
  node.frame = std::move(frame);
  node.chain = std::move(chain);
  return node;
}

// Distinct faces with their distinct parents (faces having them as a facet).
struct Lattice {
  struct Face {
    std::size_t dim = 0;
    double volume = 0.0;
    std::set<std::string> parents;
  };
  std::map<std::string, Face> faces;
};

void collect(const FaceNode& node, Lattice& lat) {
  auto& f = lat.faces[node.key];
  f.dim = node.dim;
  f.volume = node.volume;
  for (const auto& c : node.children) {
    collect(c, lat);
    lat.faces[c.key].parents.insert(node.key);
  }
}

Lattice lattice_of(const FaceNode& root) {
  Lattice lat;
  collect(root, lat);
  return lat;
}

void for_each_node(const FaceNode& node, const auto& fn) {
  fn(node);
  for (const auto& c : node.children) for_each_node(c, fn);
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

FaceNode face_lattice(const Polytope& p, const Tolerances& tol) {
  const auto d = static_cast<Eigen::Index>(p.dim());
  return build(p, Frame{Vector::Zero(d), Matrix::Identity(d, d)}, {}, tol);
}

std::vector<std::size_t> face_counts(const FaceNode& root) {
  std::vector<std::set<std::string>> keys(root.dim + 1);
  for_each_node(root, [&](const FaceNode& n) { keys[n.dim].insert(n.key); });
  std::vector<std::size_t> out;
  for (const auto& k : keys) out.push_back(k.size());
  return out;
}

std::optional<double> dihedral_angle(const Polytope& p, std::size_t i, std::size_t j, const Tolerances& tol) {
  const auto& hs = p.halfspaces();
  if (i == j || i >= hs.size() || j >= hs.size())
    throw Error(ErrorCode::InvalidArgument, "dihedral angle needs two distinct facet indices");
  if (p.dim() < 2) return std::nullopt;
  const auto fp = facet_polytope(p, i, tol);
  if (std::find(fp.source.begin(), fp.source.end(), j) == fp.source.end()) return std::nullopt;
  return std::acos(std::clamp(hs[i].normal.dot(hs[j].normal), -1.0, 1.0));
}

double omega(const FaceNode& node, std::size_t k) {
  if (node.dim == k) return node.volume;
  if (node.dim < k) return 0.0;
  double sum = 0.0;
  for (const auto& c : node.children) sum += omega(c, k);
  return sum;
}

double omega_by_flags(const FaceNode& root, std::size_t k) {
  if (k > root.dim) return 0.0;
  const Lattice lat = lattice_of(root);
  std::map<std::string, double> flags{{root.key, 1.0}};
  for (std::size_t level = root.dim; level-- > k;) {
    for (const auto& [key, face] : lat.faces) {
      if (face.dim != level) continue;
      double n = 0.0;
      for (const auto& parent : face.parents) n += flags[parent];
      flags[key] = n;
    }
  }
  double sum = 0.0;
  for (const auto& [key, face] : lat.faces)
    if (face.dim == k) sum += flags[key] * face.volume;
  return sum;
}

EquiangularCheck check_dimensionwise_equiangular(const FaceNode& root, const Tolerances& tol) {
  const std::size_t d = root.dim;
  EquiangularCheck out;
  std::vector<std::optional<double>> alpha(d + 1);
  std::optional<EquiangularWitness> witness;
  for_each_node(root, [&](const FaceNode& n) {
    if (witness || n.dim < 2) return;
    const std::size_t m = n.local.facet_count();
    for (std::size_t i = 0; i < m && !witness; ++i)
      for (std::size_t j = i + 1; j < m && !witness; ++j) {
        const auto a = dihedral_angle(n.local, i, j, tol);
        if (!a) continue;
        if (!alpha[n.dim]) alpha[n.dim] = *a;
        else if (std::abs(*a - *alpha[n.dim]) > tol.angle)
          witness = EquiangularWitness{n.dim, n.chain, i, j, *a, *alpha[n.dim]};
      }
  });
  if (witness) {
    out.witness = witness;
    return out;
  }
  EquiangularProfile prof;
  for (std::size_t k = 2; k <= d; ++k) prof.alphas.push_back(alpha[k].value_or(0.0));
  prof.gammas.assign(d, 1.0);
  for (std::size_t k = d - 1; k >= 1; --k) prof.gammas[k - 1] = prof.gammas[k] * std::tan(alpha[k + 1].value_or(0.0) / 2);
  for (std::size_t k = 0; k <= d; ++k) prof.omegas.push_back(omega(root, k));
  out.profile = std::move(prof);
  return out;
}

EquiangularCheck check_dimensionwise_equiangular(const Polytope& p, const Tolerances& tol) {
  return check_dimensionwise_equiangular(face_lattice(p, tol), tol);
}

Polynomial equiangular_polynomial(const EquiangularProfile& prof, std::size_t d) {
  std::vector<double> c(d + 1, 0.0);
  for (std::size_t k = 0; k <= d; ++k) {
    double g = 1.0;
    for (std::size_t l = k + 1; l <= d; ++l) g *= prof.gammas[l - 1];
    const double sign = (d - k) % 2 == 0 ? 1.0 : -1.0;
    c[d - k] = sign * prof.omegas[k] * g / factorial(d - k);
  }
  return Polynomial(std::move(c), 0.0);
}

EquiangularPolynomial equiangular_volume_polynomial(const Polytope& p, const Tolerances& tol) {
  auto check = check_dimensionwise_equiangular(p, tol);
  if (!check.profile) {
    const auto& w = *check.witness;
    throw Error(ErrorCode::NotEquiangular, "dihedral angles differ on a " + std::to_string(w.level) +
                                               "-face: " + std::to_string(w.angle) + " vs " +
                                               std::to_string(w.expected));
  }
  EquiangularPolynomial out;
  out.poly = equiangular_polynomial(*check.profile, p.dim());
  const auto ivf = inner_volume_function(p, 0.1, tol);
  const auto& bps = ivf.W.breakpoints();
  out.valid_to = bps.size() >= 2 ? bps[1] : ivf.g;
  out.profile = std::move(*check.profile);
  return out;
}

CorollaryForm corollary_form(const Polytope& p, const Tolerances& tol) {
  const std::size_t d = p.dim();
  const FaceNode root = face_lattice(p, tol);
  const Lattice lat = lattice_of(root);
  CorollaryForm out;
  for (std::size_t k = 1; k <= d; ++k) {
    std::set<std::size_t> counts;
    for (const auto& [key, face] : lat.faces)
      if (face.dim == k - 1) counts.insert(face.parents.size());
    if (counts.size() != 1) {
      std::string list;
      for (auto c : counts) list += (list.empty() ? "" : ", ") + std::to_string(c);
      throw Error(ErrorCode::NotUniform, "faces of dimension " + std::to_string(k - 1) + " meet differing numbers ({" +
                                             list + "}) of " + std::to_string(k) + "-faces");
    }
    out.mus.push_back(*counts.begin());
  }
  out.skeleton_volumes.assign(d + 1, 0.0);
  for (const auto& [key, face] : lat.faces) out.skeleton_volumes[face.dim] += face.volume;

  const auto check = check_dimensionwise_equiangular(root, tol);
  if (!check.profile) throw Error(ErrorCode::NotEquiangular, "polytope is not dimension-wise equiangular");
  std::vector<double> c(d + 1, 0.0);
  for (std::size_t k = 0; k <= d; ++k) {
    double f = out.skeleton_volumes[k];
    for (std::size_t l = k + 1; l <= d; ++l) f *= static_cast<double>(out.mus[l - 1]) * check.profile->gammas[l - 1];
    const double sign = (d - k) % 2 == 0 ? 1.0 : -1.0;
    c[d - k] = sign * f / factorial(d - k);
  }
  out.poly = Polynomial(std::move(c), 0.0);
  return out;
}

}  // namespace innervol
