#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smhd {

enum class ErrorKind {
    NonPositiveHeight,
    DegenerateHeight,
    AmbiguousClassification,
    NotAShock,
    InvalidRatio,
    LaxViolation,
    ZeroTangentialField,
    HeightMismatch,
    NotSymmetricCase,
    ConstraintViolation,
    PositivityLoss,
    CflViolation,
    InvalidConfig,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonPositiveHeight: return "NonPositiveHeight";
    case ErrorKind::DegenerateHeight: return "DegenerateHeight";
    case ErrorKind::AmbiguousClassification: return "AmbiguousClassification";
    case ErrorKind::NotAShock: return "NotAShock";
    case ErrorKind::InvalidRatio: return "InvalidRatio";
    case ErrorKind::LaxViolation: return "LaxViolation";
    case ErrorKind::ZeroTangentialField: return "ZeroTangentialField";
    case ErrorKind::HeightMismatch: return "HeightMismatch";
    case ErrorKind::NotSymmetricCase: return "NotSymmetricCase";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::PositivityLoss: return "PositivityLoss";
    case ErrorKind::CflViolation: return "CflViolation";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace smhd
