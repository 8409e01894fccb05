#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bindlog {

enum class ErrorCode {
  ParseError,
  InvalidSignature,
  UnknownSymbol,
  ArityMismatch,
  BinderCountMismatch,
  DuplicateBinder,
  SortMismatch,
  IndexOutOfRange,
  StepBudgetExceeded,
  InvalidRule,
  NotAnFTerm,
  RuleMismatch,
  SideConditionViolated,
  PrincipalFormulaMissing,
  CongruenceBudgetExceeded,
  InvalidSourceProof,
  UnboundVariable,
  InfiniteDomainExhaustionRequested,
  UninterpretedSymbol,
  ModelTableIncomplete,
};

std::string_view to_string(ErrorCode code);

/// A located failure: what went wrong and where (a subterm or proof-node path).
struct Diagnostic {
  ErrorCode code;
  std::string path;
  std::string detail;

  std::string str() const;
  bool operator==(const Diagnostic&) const = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, std::string path = {});

  ErrorCode code() const noexcept { return diag_.code; }
  const std::string& path() const noexcept { return diag_.path; }
  const std::string& detail() const noexcept { return diag_.detail; }
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

class CheckResult {
 public:
  static CheckResult success() { return CheckResult{}; }
  static CheckResult failure(Diagnostic d) {
    CheckResult r;
    r.error_ = std::move(d);
    return r;
  }
  static CheckResult failure(ErrorCode code, std::string path, std::string detail) {
    return failure(Diagnostic{code, std::move(path), std::move(detail)});
  }

  bool ok() const noexcept { return !error_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
  const Diagnostic& error() const { return *error_; }

 private:
  std::optional<Diagnostic> error_;
};

/// Renders a child-index path as "/" (root) or "/0/2".
std::string format_path(std::span<const std::size_t> path);

}  // namespace bindlog
