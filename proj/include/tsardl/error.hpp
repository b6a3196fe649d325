#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tsardl {

/// Failure categories raised by the library. Every thrown tsardl::Error
/// carries exactly one of these so callers can branch without string matching.
enum class ErrorKind {
    EmptyOverlap,
    LeadingGap,
    NonPositiveLog,
    InsufficientLength,
    InvalidArgument,
    TooFewObservations,
    TooShort,
    RankDeficient,
    DimensionMismatch,
    DegenerateAfterDetrend,
    MissingCriticalValue,
    MissingBoundsEntry,
    NearSingularAdjustment,
    DummyOutsideSample,
    InvalidDgp,
    ParseError,
    UnknownVariable,
    I2VariableDetected,
    Io,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyOverlap: return "EmptyOverlap";
        case ErrorKind::LeadingGap: return "LeadingGap";
        case ErrorKind::NonPositiveLog: return "NonPositiveLog";
        case ErrorKind::InsufficientLength: return "InsufficientLength";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::TooFewObservations: return "TooFewObservations";
        case ErrorKind::TooShort: return "TooShort";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegenerateAfterDetrend: return "DegenerateAfterDetrend";
        case ErrorKind::MissingCriticalValue: return "MissingCriticalValue";
        case ErrorKind::MissingBoundsEntry: return "MissingBoundsEntry";
        case ErrorKind::NearSingularAdjustment: return "NearSingularAdjustment";
        case ErrorKind::DummyOutsideSample: return "DummyOutsideSample";
        case ErrorKind::InvalidDgp: return "InvalidDgp";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::I2VariableDetected: return "I2VariableDetected";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::string> subjects = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          subjects_(std::move(subjects)) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

    /// Names the error is about: offending design columns, variables, model ids.
    [[nodiscard]] const std::vector<std::string>& subjects() const noexcept { return subjects_; }

private:
    ErrorKind kind_;
    std::vector<std::string> subjects_;
};

}  // namespace tsardl
