#pragma once

#include <stdexcept>
#include <string>

namespace detour {

enum class ErrorCode {
  RejectedLoop = 1,
  BadVertex,
  TooLarge,
  BadGraph6,
  BudgetExceeded,
  BadStart,
  Refuted,
  NotHypohamiltonian,
  BadMatching,
  BadBlock,
  BadBase,
  DropMismatch,
  BadParams,
  Empty,
  BadSequence,
  Unrealizable,
  NotPathUnicyclic,
  NotInCatalog,
  CorruptCatalog,
  BadFormat,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace detour
