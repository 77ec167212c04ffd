#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpcolor {

enum class ErrorCode {
    // hypergraph validation
    EmptyVertexSet,
    OutOfRangeVertex,
    EdgeTooSmall,
    DuplicateEdge,
    EdgeContainment,
    IndexOutOfRange,
    // counting
    ResourceLimit,
    NonIntegralCoefficient,
    DomainError,
    NotUniform,
    // covers
    InvalidCover,
    DomainNotAnEdge,
    DisjointnessViolation,
    TooManyMapsOnEdge,
    NotFull,
    // generators / io / cli
    BadParameters,
    ParseError,
    InvalidConfig,
    ConsistencyFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Every library failure is
/// reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace dpcolor
