#pragma once

#include <stdexcept>
#include <string>

namespace annustitch {

/// Error codes surfaced by the pipeline. Each maps to one failure contract
/// of a stage; the CLI serializes them into the machine-readable summary.
enum class ErrorCode {
    InvalidFps,
    VideoTooShort,
    DecodeError,
    EmptyMask,
    DegenerateContour,
    NoDarkRegion,
    CenterOutOfBounds,
    DegenerateAnnulus,
    SpecImageMismatch,
    ImageTooSmall,
    InsufficientMatches,
    NoConsensus,
    ChainBroken,
    LengthMismatch,
    AllZeroDifferences,
    InvalidConfig,
    InvalidArgument,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace annustitch
