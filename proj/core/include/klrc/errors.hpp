#pragma once

#include <stdexcept>
#include <string>

namespace klrc {

/** Machine-readable error codes shared across the library and the CLI. */
enum class ErrorCode {
    NonSymmetric,
    DiagonalNotPositiveEven,
    OffDiagonalPositive,
    DivisibilityFailure,
    UnknownVertex,
    NotDivisible,
    ZeroCharacter,
    ContentMismatch,
    IndexOutOfRange,
    CapExceeded,
    TruncationExceeded,
    IncompleteCrystal,
    UsageError,
};

const char* to_string(ErrorCode code);

/**
 * Library error with a stable code and a human-readable detail string.
 * The CLI renders every Error as "ERROR <code> <detail>" on stderr;
 * CapExceeded and TruncationExceeded map to exit code 2, the rest to 1.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(std::move(detail)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::DiagonalNotPositiveEven: return "DiagonalNotPositiveEven";
        case ErrorCode::OffDiagonalPositive: return "OffDiagonalPositive";
        case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::ZeroCharacter: return "ZeroCharacter";
        case ErrorCode::ContentMismatch: return "ContentMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::TruncationExceeded: return "TruncationExceeded";
        case ErrorCode::IncompleteCrystal: return "IncompleteCrystal";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace klrc
