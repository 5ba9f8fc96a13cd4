#include "boxnet/error.hpp"

namespace boxnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPlace: return "InvalidPlace";
    case ErrorKind::InvalidNet: return "InvalidNet";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotFireable: return "NotFireable";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::StateCapExceeded: return "StateCapExceeded";
    case ErrorKind::TransitionSetMismatch: return "TransitionSetMismatch";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorKind::NotDistributed: return "NotDistributed";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::UnionNotDistributed: return "UnionNotDistributed";
    case ErrorKind::InitialMarkingStraddle: return "InitialMarkingStraddle";
    case ErrorKind::CoverInvalid: return "CoverInvalid";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateAction: return "DuplicateAction";
    case ErrorKind::GrammarViolation: return "GrammarViolation";
    case ErrorKind::CliqueCountExceeded: return "CliqueCountExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

bool is_budget_error(ErrorKind kind) {
  return kind == ErrorKind::StateCapExceeded || kind == ErrorKind::EnumerationBudgetExceeded ||
         kind == ErrorKind::CliqueCountExceeded || kind == ErrorKind::BudgetExceeded;
}

Error::Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::Parse, "offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

}  // namespace boxnet
