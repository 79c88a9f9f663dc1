#include "gaussforge/errors.hpp"

namespace gaussforge {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicatePosition: return "DuplicatePosition";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::BadChordRoles: return "BadChordRoles";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::SelfLinkQuery: return "SelfLinkQuery";
    case ErrorKind::ArcOutOfRange: return "ArcOutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TokenSyntax: return "TokenSyntax";
    case ErrorKind::LabelCount: return "LabelCount";
    case ErrorKind::RoleError: return "RoleError";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::InapplicableMove: return "InapplicableMove";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::CorrespondenceMismatch: return "CorrespondenceMismatch";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::InternalParity: return "InternalParity";
    case ErrorKind::Internal: return "Internal";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string component, const std::string& message,
             long token_index)
    : std::runtime_error(std::string(to_string(kind)) + " [" + component + "]: " + message),
      kind_(kind),
      component_(std::move(component)),
      token_index_(token_index) {}

void fail(ErrorKind kind, const std::string& component, const std::string& message,
          long token_index) {
    throw Error(kind, component, message, token_index);
}

} // namespace gaussforge
