#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boxnet {

enum class ErrorKind {
  InvalidPlace,
  InvalidNet,
  UnknownElement,
  NotFireable,
  EmptySet,
  StateCapExceeded,
  TransitionSetMismatch,
  EnumerationBudgetExceeded,
  NotDistributed,
  NotSeparated,
  UnionNotDistributed,
  InitialMarkingStraddle,
  CoverInvalid,
  Parse,
  DuplicateAction,
  GrammarViolation,
  CliqueCountExceeded,
  BudgetExceeded,
  InvalidGraph,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// True for the kinds that signal an instance too large for the configured
/// caps rather than a malformed input.
bool is_budget_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  /// Character offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace boxnet
