#pragma once

#include <stdexcept>
#include <string>

namespace folcalc {

enum class ErrorCode {
  kInvalidArgument,   // precondition violated by caller-supplied data
  kParse,             // malformed JSON or rational text
  kUnknownLabel,
  kMismatchedGraphs,
  kDegenerateConfiguration,
  kInvalidDihedralDatum,
  kInconsistentModel,
  kIncompatibleSamples,
  kNotGeneralType,
  kNotPseudoeffective,
  kInconsistentContribution,
};

/// Stable machine-readable name, e.g. "degenerate_configuration".
const char* code_name(ErrorCode code);

/// True for codes caused by malformed user input rather than by the mathematics.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace folcalc
