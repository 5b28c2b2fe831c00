#include "reslat/errors.hpp"

namespace reslat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TrivialCarrier: return "TrivialCarrier";
    case ErrorCode::BadTables: return "BadTables";
    case ErrorCode::LatticeViolation: return "LatticeViolation";
    case ErrorCode::MonoidViolation: return "MonoidViolation";
    case ErrorCode::ResiduationViolation: return "ResiduationViolation";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::FreeVarMismatch: return "FreeVarMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::AnchorOutOfRange: return "AnchorOutOfRange";
    case ErrorCode::RadiusMismatch: return "RadiusMismatch";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::NoCoAtom: return "NoCoAtom";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::UnboundedAlgebra: return "UnboundedAlgebra";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::GeneratorExhausted: return "GeneratorExhausted";
    case ErrorCode::BadDocument: return "BadDocument";
    case ErrorCode::BadUsage: return "BadUsage";
  }
  return "UnknownError";
}

}  // namespace reslat
