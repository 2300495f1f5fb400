#include "innervol/json_io.hpp"

#include <string>

#include "innervol/error.hpp"

namespace innervol {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::Parse, std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

json coeffs_to_json(const Polynomial& p, int degree) {
  json out = json::array();
  for (int k = 0; k <= std::max(degree, p.degree()); ++k) out.push_back(p.coeff(static_cast<std::size_t>(k)));
  return out;
}

std::optional<Polynomial> tail_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Polynomial(numbers(j, "tail coefficients"), 0.0);
}

}  // namespace

Polytope polytope_from_json(const json& j, const Tolerances& tol) {
  const json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1)
    throw Error(ErrorCode::Parse, "'dim' must be a positive integer");
  const auto dim = dim_j.get<std::size_t>();
  const json& hs = field(j, "halfspaces");
  if (!hs.is_array()) throw Error(ErrorCode::Parse, "'halfspaces' must be an array");
  std::vector<Hyperplane> planes;
  for (const auto& h : hs) {
    const auto a = numbers(field(h, "a"), "'a'");
    if (a.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "halfspace normal has " + std::to_string(a.size()) +
                                                    " entries, expected " + std::to_string(dim));
    const double b = number(field(h, "b"), "'b'");
    HalfspaceSense sense = HalfspaceSense::LessEqual;
    if (h.contains("sense")) {
      const json& s = h.at("sense");
      if (s == "<=") sense = HalfspaceSense::LessEqual;
      else if (s == ">=") sense = HalfspaceSense::GreaterEqual;
      else throw Error(ErrorCode::Parse, "'sense' must be \"<=\" or \">=\"");
    }
    planes.push_back(normalize_halfspace(Eigen::Map<const Vector>(a.data(), static_cast<Eigen::Index>(a.size())), b,
                                         sense, tol));
  }
  return Polytope::from_halfspaces(dim, std::move(planes), tol);
}

Polytope polytope_from_json_text(std::string_view text, const Tolerances& tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return polytope_from_json(j, tol);
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json polytope_to_json(const Polytope& p) {
  json hs = json::array();
  for (const auto& h : p.halfspaces()) hs.push_back({{"a", vector_to_json(h.normal)}, {"b", h.offset}, {"sense", ">="}});
  return {{"dim", p.dim()}, {"halfspaces", std::move(hs)}};
}

json piecewise_to_json(const PiecewisePoly& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) pieces.push_back(coeffs_to_json(p, f.degree()));
  json out{{"degree", f.degree()}, {"breakpoints", f.breakpoints()}, {"pieces", std::move(pieces)}};
  out["left_tail"] = f.left_tail() ? coeffs_to_json(*f.left_tail(), f.degree()) : json(nullptr);
  out["right_tail"] = f.right_tail() ? coeffs_to_json(*f.right_tail(), f.degree()) : json(nullptr);
  return out;
}

PiecewisePoly piecewise_from_json(const json& j) {
  const json& deg = field(j, "degree");
  if (!deg.is_number_integer() || deg.get<int>() < 0) throw Error(ErrorCode::Parse, "'degree' must be a non-negative integer");
  std::vector<Polynomial> pieces;
  const json& pj = field(j, "pieces");
  if (!pj.is_array()) throw Error(ErrorCode::Parse, "'pieces' must be an array");
  for (const auto& p : pj) pieces.emplace_back(numbers(p, "piece coefficients"), 0.0);
  std::optional<Polynomial> left, right;
  if (j.contains("left_tail")) left = tail_from_json(j.at("left_tail"));
  if (j.contains("right_tail")) right = tail_from_json(j.at("right_tail"));
  return PiecewisePoly(deg.get<int>(), numbers(field(j, "breakpoints"), "'breakpoints'"), std::move(pieces),
                       std::move(left), std::move(right));
}

}  // namespace innervol
