#include <dpcolor/error.hpp>

namespace dpcolor {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgeContainment: return "EdgeContainment";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::DomainNotAnEdge: return "DomainNotAnEdge";
    case ErrorCode::DisjointnessViolation: return "DisjointnessViolation";
    case ErrorCode::TooManyMapsOnEdge: return "TooManyMapsOnEdge";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    }
    return "Unknown";
}

} // namespace dpcolor
