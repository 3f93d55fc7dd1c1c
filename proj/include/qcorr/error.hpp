#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

enum class ErrorKind {
    NonHermitian,
    NonSquare,
    DimensionMismatch,
    BadRank,
    BadDimension,
    ParamOutOfRange,
    WrongDims,
    InvariantViolation,
    ParseError,
    NotApplicable,
    NotDetected,
    DimensionTooLarge,
    NegativeTime,
    BadSteps,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `detail` names
// the violated invariant where one applies (e.g. "trace" or "psd").
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, std::string detail = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace qcorr
