#ifndef HOMCX_ERROR_HPP
#define HOMCX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homcx {

// Error categories; the CLI maps them to exit codes
// (1 = verification failure, 2 = budget, 3 = config).
enum class ErrorCode {
  UnknownCatalogName,
  InvalidGroupFile,
  GeneratorIndexOutOfRange,
  NotASubgroup,
  SizeGuardExceeded,
  RankMismatch,
  UnsupportedFamilyParameter,
  IdentityViolation,
  CocycleNotVerified,
  CommutationFailure,
  BudgetExceeded,
  SimplicialIdentityViolation,
  ImageNotAHomomorphism,
  BijectionFailure,
  EquivarianceViolation,
  PullbackFailure,
  DimensionMismatch,
  DiagramFailure,
  BoundarySquareNonzero,
  ConfigError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

const char* error_code_name(ErrorCode code);

} // namespace homcx

#endif
