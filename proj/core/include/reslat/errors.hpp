#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace reslat {

enum class ErrorCode {
  // algebra validation
  TrivialCarrier,
  BadTables,
  LatticeViolation,
  MonoidViolation,
  ResiduationViolation,
  SizeTooSmall,
  // syntax
  SyntaxError,
  UnknownSymbol,
  ArityMismatch,
  // semantics
  UnboundVariable,
  FreeVarMismatch,
  SignatureMismatch,
  AlgebraMismatch,
  AnchorOutOfRange,
  // metric / gaifman
  RadiusMismatch,
  InvalidThreshold,
  NoCoAtom,
  NotAChain,
  UnboundedAlgebra,
  // budgets and harnesses
  BudgetExceeded,
  GeneratorExhausted,
  // documents / cli
  BadDocument,
  BadUsage,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole library. `witness` carries the
/// offending element triple for algebra-law violations, `offset` the byte
/// position for parse errors; both are meaningful only for the codes that
/// document them.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code(code) {}

  Error(ErrorCode code, const std::string& message, std::size_t offset)
      : Error(code, message + " (at offset " + std::to_string(offset) + ")") {
    this->offset = offset;
  }

  Error(ErrorCode code, const std::string& message, std::array<int, 3> witness)
      : Error(code, message) {
    this->witness = witness;
    has_witness = true;
  }

  ErrorCode code;
  std::size_t offset = no_offset;
  std::array<int, 3> witness{-1, -1, -1};
  bool has_witness = false;
};

}  // namespace reslat
