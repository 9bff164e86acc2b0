#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlgmd {

enum class ErrorCode {
    NonPositiveSigma,
    NonPositiveRadius,
    InvalidWindow,
    InvalidParameter,
    DegenerateLatency,
    InvalidFrame,
    DimensionMismatch,
    KernelTooLarge,
    EmptyHistory,
    NonPositiveDenominator,
    InvalidScene,
    ContactBeforeEnd,
    ObjectOutOfView,
    InvalidSpeed,
    WindowOutOfRange,
    EmptyDirectory,
    MixedDimensions,
    UnreadableFrame,
    InvalidFactor,
    InvalidConfig,
    IoFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `context()` names the offending
// parameter field, file or config key when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string context, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    ErrorCode code_;
    std::string context_;
};

}  // namespace dlgmd
