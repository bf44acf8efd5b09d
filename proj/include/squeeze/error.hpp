#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace squeeze {

enum class ErrorCode {
    NotUnimodular,
    DegenerateOffDiagonal,
    BothCouplingsZero,
    NonFinite,
    OutOfRange,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::DegenerateOffDiagonal: return "DegenerateOffDiagonal";
        case ErrorCode::BothCouplingsZero: return "BothCouplingsZero";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Domain error raised by every library operation. The code is the stable,
/// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return to_string(code_); }

private:
    ErrorCode code_;
};

} // namespace squeeze
