#include "folcalc/error.hpp"

namespace folcalc {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kUnknownLabel: return "unknown_label";
    case ErrorCode::kMismatchedGraphs: return "mismatched_graphs";
    case ErrorCode::kDegenerateConfiguration: return "degenerate_configuration";
    case ErrorCode::kInvalidDihedralDatum: return "invalid_dihedral_datum";
    case ErrorCode::kInconsistentModel: return "inconsistent_model_data";
    case ErrorCode::kIncompatibleSamples: return "incompatible_samples";
    case ErrorCode::kNotGeneralType: return "not_general_type";
    case ErrorCode::kNotPseudoeffective: return "not_pseudoeffective";
    case ErrorCode::kInconsistentContribution: return "inconsistent_contribution_sum";
  }
  return "unknown";
}

bool is_validation_error(ErrorCode code) {
  return code == ErrorCode::kInvalidArgument || code == ErrorCode::kParse ||
         code == ErrorCode::kUnknownLabel || code == ErrorCode::kInvalidDihedralDatum;
}

}  // namespace folcalc
