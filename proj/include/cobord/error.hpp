#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cobord {

enum class ErrorKind {
    MissingImage,
    DegreeMismatch,
    NonNilpotentSubstitution,
    NotInvertible,
    VariableMismatch,
    BoundTooSmall,
    IndexOutOfRange,
    NotSymmetric,
    PSeriesObstructed,
    UnsupportedGroup,
    NonHomogeneousRelation,
    InvalidParameters,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every typed failure in the library carries one of the kinds above so the
// CLI can report it as a machine-readable document.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cobord
