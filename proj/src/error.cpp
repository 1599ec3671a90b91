#include "quivgr/error.hpp"

namespace quivgr {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SupportNotArrowClosed: return "SupportNotArrowClosed";
    case ErrorCode::InfeasibleDimensions: return "InfeasibleDimensions";
    case ErrorCode::NotASubrepresentation: return "NotASubrepresentation";
    case ErrorCode::ParallelPathsUnsupported: return "ParallelPathsUnsupported";
    case ErrorCode::SmoothnessNotCertified: return "SmoothnessNotCertified";
    case ErrorCode::PavingInconsistent: return "PavingInconsistent";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NotPolynomialCount: return "NotPolynomialCount";
    case ErrorCode::MissingRepVarietyMotive: return "MissingRepVarietyMotive";
    case ErrorCode::NonPolynomialEntry: return "NonPolynomialEntry";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::CycleDetected:
    case ErrorCode::DuplicateIdentifier:
    case ErrorCode::DanglingEndpoint:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

void fail(ErrorCode code, std::string_view module, const std::string& message) {
  std::string text;
  text.reserve(module.size() + message.size() + 32);
  text.append(module);
  text.append(": ");
  text.append(error_code_name(code));
  text.append(": ");
  text.append(message);
  throw Error(code, text);
}

}  // namespace quivgr
