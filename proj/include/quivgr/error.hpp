#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quivgr {

enum class ErrorCode {
  ParseError,
  CycleDetected,
  DuplicateIdentifier,
  DanglingEndpoint,
  InvalidArgument,
  SupportNotArrowClosed,
  InfeasibleDimensions,
  NotASubrepresentation,
  ParallelPathsUnsupported,
  SmoothnessNotCertified,
  PavingInconsistent,
  EnumerationTooLarge,
  NotPolynomialCount,
  MissingRepVarietyMotive,
  NonPolynomialEntry,
};

std::string_view error_code_name(ErrorCode code);

// True for errors caused by malformed input rather than by a computation
// refusing to proceed.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, std::string_view module,
                       const std::string& message);

}  // namespace quivgr
