#include "bindlog/error.hpp"

namespace bindlog {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BinderCountMismatch: return "BinderCountMismatch";
    case ErrorCode::DuplicateBinder: return "DuplicateBinder";
    case ErrorCode::SortMismatch: return "SortMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::NotAnFTerm: return "NotAnFTerm";
    case ErrorCode::RuleMismatch: return "RuleMismatch";
    case ErrorCode::SideConditionViolated: return "SideConditionViolated";
    case ErrorCode::PrincipalFormulaMissing: return "PrincipalFormulaMissing";
    case ErrorCode::CongruenceBudgetExceeded: return "CongruenceBudgetExceeded";
    case ErrorCode::InvalidSourceProof: return "InvalidSourceProof";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::InfiniteDomainExhaustionRequested: return "InfiniteDomainExhaustionRequested";
    case ErrorCode::UninterpretedSymbol: return "UninterpretedSymbol";
    case ErrorCode::ModelTableIncomplete: return "ModelTableIncomplete";
  }
  return "UnknownError";
}

std::string Diagnostic::str() const {
  std::string out(to_string(code));
  if (!path.empty()) out += " at " + path;
  if (!detail.empty()) out += ": " + detail;
  return out;
}

Error::Error(ErrorCode code, std::string detail, std::string path)
    : std::runtime_error(Diagnostic{code, path, detail}.str()),
      diag_{code, std::move(path), std::move(detail)} {}

std::string format_path(std::span<const std::size_t> path) {
  if (path.empty()) return "/";
  std::string out;
  for (std::size_t i : path) out += "/" + std::to_string(i);
  return out;
}

}  // namespace bindlog
