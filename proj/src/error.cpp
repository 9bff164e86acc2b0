#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
        case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::DegenerateLatency: return "DegenerateLatency";
        case ErrorCode::InvalidFrame: return "InvalidFrame";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::KernelTooLarge: return "KernelTooLarge";
        case ErrorCode::EmptyHistory: return "EmptyHistory";
        case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
        case ErrorCode::InvalidScene: return "InvalidScene";
        case ErrorCode::ContactBeforeEnd: return "ContactBeforeEnd";
        case ErrorCode::ObjectOutOfView: return "ObjectOutOfView";
        case ErrorCode::InvalidSpeed: return "InvalidSpeed";
        case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
        case ErrorCode::EmptyDirectory: return "EmptyDirectory";
        case ErrorCode::MixedDimensions: return "MixedDimensions";
        case ErrorCode::UnreadableFrame: return "UnreadableFrame";
        case ErrorCode::InvalidFactor: return "InvalidFactor";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

std::string compose(ErrorCode code, const std::string& context, const std::string& message) {
    std::string out(code_name(code));
    if (!context.empty()) {
        out += " [" + context + "]";
    }
    out += ": " + message;
    return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) { return code_name(code); }

Error::Error(ErrorCode code, std::string context, const std::string& message)
    : std::runtime_error(compose(code, context, message)),
      code_(code),
      context_(std::move(context)) {}

}  // namespace dlgmd
