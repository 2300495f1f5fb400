#include "innervol/tolerances.hpp"

#include <json.hpp>

#include "innervol/error.hpp"

namespace innervol {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ZeroNormal: return "ZeroNormal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnboundedInput: return "UnboundedInput";
    case ErrorCode::LowerDimensional: return "LowerDimensional";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::UnboundedCell: return "UnboundedCell";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotEquiangular: return "NotEquiangular";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::MemoryBudget: return "MemoryBudget";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::Parse:
    case ErrorCode::ZeroNormal:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnboundedInput:
    case ErrorCode::LowerDimensional:
    case ErrorCode::Empty:
      return true;
    default:
      return false;
  }
}

Tolerances tolerances_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("tolerances: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "tolerances: expected a JSON object");

  Tolerances tol;
  const std::pair<const char*, double*> fields[] = {
      {"unit", &tol.unit},         {"feas", &tol.feas},         {"lp", &tol.lp},
      {"vertex", &tol.vertex},     {"rank", &tol.rank},         {"coeff", &tol.coeff},
      {"cont", &tol.cont},         {"smooth", &tol.smooth},     {"breakpoint", &tol.breakpoint},
      {"coalesce", &tol.coalesce}, {"angle", &tol.angle},
  };
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const auto& [name, slot] : fields) {
      if (key == name) {
        if (!value.is_number() || value.get<double>() <= 0.0)
          throw Error(ErrorCode::Parse, "tolerances: '" + key + "' must be a positive number");
        *slot = value.get<double>();
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::Parse, "tolerances: unknown key '" + key + "'");
  }
  return tol;
}

}  // namespace innervol
