#pragma once

#include <stdexcept>
#include <string>

namespace dmc {

/// Machine-readable failure codes carried by dmc::Error.
enum class ErrorCode {
    OpenBoundary,
    NonManifoldEdge,
    NonOrientable,
    Disconnected,
    DegenerateTriangle,
    ArcsinDomain,
    SingularMetric,
    NoRadius,
    UnknownGenerator,
    ParameterRange,
    ParseError,
    IoError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace dmc
