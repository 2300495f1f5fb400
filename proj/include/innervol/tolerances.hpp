#ifndef INNERVOL_TOLERANCES_HPP
#define INNERVOL_TOLERANCES_HPP

#include <string_view>

namespace innervol {

/// Every numerical threshold used by the library, in one place.
///
/// Absolute tolerances apply to unit-normal, order-one geometry; the
/// piecewise-polynomial ones are relative and get multiplied by the value and
/// length scales of the function they are applied to.
struct Tolerances {
  double unit = 1e-12;      // |normal| == 1, and the zero-normal threshold
  double feas = 1e-9;       // constraint feasibility / full-dimensionality
  double lp = 1e-9;         // certified LP witness accuracy
  double vertex = 1e-8;     // vertex de-duplication radius
  double rank = 1e-10;      // singular-value threshold for linear dependence
  double coeff = 1e-12;     // trailing-coefficient trim (relative)
  double cont = 1e-9;       // continuity across breakpoints (relative)
  double smooth = 1e-7;     // derivative agreement for smoothness class (relative)
  double breakpoint = 1e-9; // breakpoint merge radius (relative to support)
  double coalesce = 1e-9;   // identical-adjacent-piece test (relative)
  double angle = 1e-8;      // dihedral angle equality, radians
};

/// Overrides the defaults with the keys present in a JSON object such as
/// {"feas": 1e-10, "smooth": 1e-6}. Unknown keys raise Parse.
Tolerances tolerances_from_json(std::string_view json);

}  // namespace innervol

#endif  // INNERVOL_TOLERANCES_HPP
