#ifndef INNERVOL_ERROR_HPP
#define INNERVOL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace innervol {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  ZeroNormal,
  DimensionMismatch,
  UnboundedInput,
  LowerDimensional,
  Empty,
  UnboundedCell,
  ParallelPlanes,
  OutOfDomain,
  NotEquiangular,
  NotUniform,
  MemoryBudget,
  NumericalFailure,
};

const char* error_name(ErrorCode code) noexcept;

/// Input-validation errors; everything else is a numerical or internal failure.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace innervol

#endif  // INNERVOL_ERROR_HPP
