#include "innervol/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "innervol/error.hpp"

namespace innervol {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Hyperplane unit(Vector n, double offset) {
  const double len = n.norm();
  return {n / len, offset / len};
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_number(s);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::vector<double> positive_numbers(const std::vector<std::string>& tokens, std::size_t from) {
  std::vector<double> out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    out.push_back(parse_number(tokens[i]));
    if (!(out.back() > 0)) throw Error(ErrorCode::InvalidArgument, "shape parameters must be positive");
  }
  return out;
}

void expect_count(const std::vector<std::string>& tokens, std::size_t lo, std::size_t hi) {
  const std::size_t n = tokens.size() - 1;
  if (n < lo || n > hi)
    throw Error(ErrorCode::InvalidArgument, "wrong number of parameters for shape '" + tokens[0] + "'");
}

std::size_t dimension_param(const std::vector<std::string>& tokens, std::size_t fallback) {
  expect_count(tokens, 0, 1);
  if (tokens.size() == 1) return fallback;
  const int d = parse_int(tokens[1]);
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return static_cast<std::size_t>(d);
}

}  // namespace

Polytope make_rectangle(const std::vector<double>& a) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "rectangle needs at least one half-side");
  const std::size_t d = a.size();
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < d; ++i) {
    if (!(a[i] > 0)) throw Error(ErrorCode::InvalidArgument, "half-sides must be positive");
    hs.push_back({Vector::Unit(idx(d), idx(i)), -a[i]});
    hs.push_back({-Vector::Unit(idx(d), idx(i)), -a[i]});
  }
  return Polytope::from_halfspaces(d, std::move(hs));
}

PiecewisePoly rectangle_closed_form(std::vector<double> a) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "rectangle needs at least one half-side");
  std::sort(a.begin(), a.end());
  const int d = static_cast<int>(a.size());
  // prod (a_i - r), expanded.
  std::vector<double> prod{1.0};
  for (double ai : a) {
    std::vector<double> next(prod.size() + 1, 0.0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k] += ai * prod[k];
      next[k + 1] -= prod[k];
    }
    prod = std::move(next);
  }
  const double scale = std::ldexp(1.0, d);
  std::vector<double> v(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) v[k] = -scale * prod[k];
  v[0] = 0.0;
  const double volume = scale * prod[0];
  return PiecewisePoly(d, {0.0, a.front()}, {Polynomial(v)}, std::nullopt, Polynomial::constant(volume));
}

Polytope make_cube(std::size_t dim, double half_side) {
  return make_rectangle(std::vector<double>(dim, half_side));
}

Polytope make_segment(double half_length) { return make_rectangle({half_length}); }

Polytope make_square(double half_side) { return make_rectangle({half_side, half_side}); }

Polytope make_right_simplex(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "simplex dimension must be positive");
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < dim; ++i) hs.push_back({Vector::Unit(idx(dim), idx(i)), 0.0});
  hs.push_back(unit(-Vector::Ones(idx(dim)), -1.0));
  return Polytope::from_halfspaces(dim, std::move(hs));
}

Polytope make_regular_simplex(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "simplex dimension must be positive");
  // Centred standard basis of R^{d+1}, expressed in the sum-zero hyperplane.
  const std::size_t n = dim + 1;
  const Matrix basis = orthonormal_complement(Vector::Ones(idx(n)) / std::sqrt(static_cast<double>(n)));
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = Vector::Unit(idx(n), idx(i)) - Vector::Constant(idx(n), 1.0 / static_cast<double>(n));
    const Vector u = (basis.transpose() * e).normalized();
    hs.push_back({-u, -1.0});
  }
  return Polytope::from_halfspaces(dim, std::move(hs));
}

Polytope make_regular_polygon(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 sides");
  std::vector<Hyperplane> hs;
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = pi / 2 + 2 * pi * static_cast<double>(k) / static_cast<double>(n);
    Vector u(2);
    u << std::cos(theta), std::sin(theta);
    hs.push_back({-u, -1.0});
  }
  return Polytope::from_halfspaces(2, std::move(hs));
}

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

Polytope make_cut_dodecahedron() {
  const double phi = golden_ratio();
  // Facet directions of the dodecahedron are the icosahedron's vertices.
  std::vector<Vector> dirs;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0})
      for (int c = 0; c < 3; ++c) {
        Vector u = Vector::Zero(3);
        u[(c + 1) % 3] = s1;
        u[(c + 2) % 3] = s2 * phi;
        dirs.push_back(u.normalized());
      }
  const double inr = 0.5 * std::sqrt((25.0 + 11.0 * std::sqrt(5.0)) / 10.0);
  const double delta = std::sqrt(1.0 - 2.0 / std::sqrt(5.0));
  std::vector<Hyperplane> hs;
  for (const Vector& u : dirs) {
    // The pair along (0, 1, phi) is cut.
    const bool cut = std::abs(u[0]) < 1e-12 && u[1] * u[2] > 0;
    hs.push_back({-u, -(cut ? inr - delta : inr)});
  }
  return Polytope::from_halfspaces(3, std::move(hs));
}

Polytope make_roof(const Polytope& p) {
  const std::size_t d = p.dim();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "cannot roof a point");
  std::vector<Hyperplane> hs;
  hs.push_back({Vector::Unit(idx(d + 1), idx(d)), 0.0});
  for (const auto& h : p.halfspaces()) {
    Vector n(idx(d + 1));
    n.head(idx(d)) = h.normal;
    n[idx(d)] = -1.0;
    hs.push_back(unit(n, h.offset));
  }
  return Polytope::from_halfspaces(d + 1, std::move(hs));
}

Polytope make_iterated_roof(const Polytope& p, std::size_t depth) {
  Polytope out = p;
  for (std::size_t i = 0; i < depth; ++i) out = make_roof(out);
  return out;
}

Polytope make_theorem4_instance(int k, int s, int d, double short_side, double long_side) {
  if (!(1 <= k && k <= s && s <= d))
    throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= s <= d");
  if (!(short_side > 0) || !(long_side > short_side))
    throw Error(ErrorCode::InvalidArgument, "need 0 < short side < long side");
  const int base_dim = d - k + 1;
  const int shortest = s - k + 1;
  std::vector<double> a(static_cast<std::size_t>(base_dim), long_side);
  std::fill_n(a.begin(), shortest, short_side);
  return make_iterated_roof(make_rectangle(a), static_cast<std::size_t>(k - 1));
}

Polytope make_multiphase_pentagon() {
  auto h = [](double a, double b, double c) {
    Vector n(2);
    n << a, b;
    return unit(n, c);
  };
  // a x + b y >= c
  return Polytope::from_halfspaces(2, {h(1, 0, 0), h(0, 1, 0), h(-3, -4, -12), h(-1, -1, -3.6), h(1, -1, -2.6)});
}

Polytope make_square_pyramid() { return make_roof(make_square(1.0)); }

DiphaseCheck diphase_inscribed_check(const Polytope& p, const Tolerances& tol) {
  DiphaseCheck out;
  const auto ball = inradius(p, tol);
  out.inscribed = std::all_of(p.halfspaces().begin(), p.halfspaces().end(), [&](const Hyperplane& h) {
    return std::abs(signed_distance(ball.center, h) - ball.g) <= tol.lp * std::max(1.0, ball.g);
  });
  const auto ivf = inner_volume_function(p, 0.1, tol);
  const int d = static_cast<int>(p.dim());
  if (out.inscribed) {
    double binom = 1.0;  // C(d, i)
    for (int i = 0; i < d; ++i) {
      const double sign = (d - i - 1) % 2 == 0 ? 1.0 : -1.0;
      out.kappas.push_back(sign * binom * ivf.volume / std::pow(ivf.g, d - i));
      binom = binom * (d - i) / (i + 1);
    }
  }
  const auto cls = ivf.V.smoothness_class(tol);
  out.diphase_smooth = ivf.V.phase_count() == 2 && (cls.infinite || cls.order >= d - 1);
  out.consistent = out.inscribed == out.diphase_smooth;
  return out;
}

Polytope shape_from_tokens(const std::vector<std::string>& tokens, const Tolerances& tol) {
  if (tokens.empty()) throw Error(ErrorCode::InvalidArgument, "empty shape specification");
  const std::string& kind = tokens[0];
  if (kind == "rect" || kind == "rectangle") {
    expect_count(tokens, 1, 64);
    return make_rectangle(positive_numbers(tokens, 1));
  }
  if (kind == "cube") {
    // cube | cube a | cube a1 a2 a3
    const auto a = positive_numbers(tokens, 1);
    if (a.empty()) return make_cube(3, 1.0);
    if (a.size() == 1) return make_cube(3, a[0]);
    if (a.size() == 3) return make_rectangle(a);
    throw Error(ErrorCode::InvalidArgument, "cube takes 0, 1 or 3 half-sides");
  }
  if (kind == "square") {
    const auto a = positive_numbers(tokens, 1);
    if (a.empty()) return make_square(1.0);
    if (a.size() == 1) return make_square(a[0]);
    if (a.size() == 2) return make_rectangle(a);
    throw Error(ErrorCode::InvalidArgument, "square takes 0, 1 or 2 half-sides");
  }
  if (kind == "segment") {
    expect_count(tokens, 0, 1);
    const auto a = positive_numbers(tokens, 1);
    return make_segment(a.empty() ? 1.0 : a[0]);
  }
  if (kind == "simplex") return make_right_simplex(dimension_param(tokens, 3));
  if (kind == "regular-simplex") return make_regular_simplex(dimension_param(tokens, 3));
  if (kind == "polygon") {
    expect_count(tokens, 1, 1);
    const int n = parse_int(tokens[1]);
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 sides");
    return make_regular_polygon(static_cast<std::size_t>(n));
  }
  if (kind == "cut-dodecahedron") {
    expect_count(tokens, 0, 0);
    return make_cut_dodecahedron();
  }
  if (kind == "pentagon") {
    expect_count(tokens, 0, 0);
    return make_multiphase_pentagon();
  }
  if (kind == "pyramid") {
    expect_count(tokens, 0, 0);
    return make_square_pyramid();
  }
  if (kind == "theorem4") {
    expect_count(tokens, 3, 3);
    return make_theorem4_instance(parse_int(tokens[1]), parse_int(tokens[2]), parse_int(tokens[3]));
  }
  if (kind == "roof") {
    if (tokens.size() < 2) throw Error(ErrorCode::InvalidArgument, "roof needs an inner shape");
    return make_roof(shape_from_tokens({tokens.begin() + 1, tokens.end()}, tol));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown shape kind '" + kind + "'");
}

Polytope shape_from_spec(const std::string& spec, const Tolerances& tol) {
  std::istringstream in(spec);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return shape_from_tokens(tokens, tol);
}

}  // namespace innervol
