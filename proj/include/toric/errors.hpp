#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
    DimensionMismatch,
    BadConeIndex,
    NonPrimitiveRay,
    DuplicateRay,
    UnusedRay,
    NonUnimodularCone,
    UnpairedWall,
    CoverageFailure,
    ConeNotInFan,
    DimensionTooSmall,
    OutOfRange,
    NotAWall,
    DegreeMismatch,
    WrongDimension,
    UnsupportedSurface,
    InvalidBundle,
    MalformedInput,
};

std::string_view to_string(ErrorKind kind);

class ToricError : public std::runtime_error {
public:
    ToricError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace toric
