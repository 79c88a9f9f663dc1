#pragma once

#include <stdexcept>
#include <string>

namespace gaussforge {

enum class ErrorKind {
    DuplicatePosition,
    PositionOutOfRange,
    BadChordRoles,
    UnknownLabel,
    SelfLinkQuery,
    ArcOutOfRange,
    BudgetExceeded,
    TokenSyntax,
    LabelCount,
    RoleError,
    SignMismatch,
    InapplicableMove,
    LabelOutOfRange,
    CorrespondenceMismatch,
    SizeLimitExceeded,
    InternalParity,
    Internal,
    IoError,
};

const char* to_string(ErrorKind kind);

// Single failure type for the whole library. `component` names the module that
// raised it; `token_index` is >= 0 only for parse errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string component, const std::string& message,
          long token_index = -1);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& component() const noexcept { return component_; }
    long token_index() const noexcept { return token_index_; }

private:
    ErrorKind kind_;
    std::string component_;
    long token_index_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& component,
                       const std::string& message, long token_index = -1);

} // namespace gaussforge
