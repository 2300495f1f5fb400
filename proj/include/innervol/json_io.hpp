#ifndef INNERVOL_JSON_IO_HPP
#define INNERVOL_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "innervol/geometry.hpp"
#include "innervol/piecewise.hpp"

namespace innervol {

/// {"dim": d, "halfspaces": [{"a": [..], "b": x, "sense": "<=" | ">="}]}.
/// Loading normalizes each halfspace and removes redundant ones.
Polytope polytope_from_json(const nlohmann::json& j, const Tolerances& tol = {});
Polytope polytope_from_json_text(std::string_view text, const Tolerances& tol = {});
/// Written with inner unit normals and sense ">=".
nlohmann::json polytope_to_json(const Polytope& p);

/// {"degree": d, "breakpoints": [..], "pieces": [[c0..cd]..], "left_tail": null | [..], "right_tail": null | [..]}
/// Coefficient lists are padded to degree + 1 entries.
nlohmann::json piecewise_to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);

}  // namespace innervol

#endif  // INNERVOL_JSON_IO_HPP
