#pragma once

#include <stdexcept>
#include <string>

namespace hirsch {

// Failure taxonomy shared by the whole library. The C API maps these 1:1
// onto hirsch_status codes, so keep the order in sync with hirsch.h.
enum class ErrorCode {
    Parse = 1,
    Invalid,
    MarkNotVertex,
    Unbounded,
    LowDim,
    NotSimple,
    NotCandidate,
    NotDantzig,
    NonGeneric,
    Degenerate,
    NoCrossing,
    ProtectedVertex,
    NotDantzigAfter,
    SeparationFailed,
    Undeformable,
    EndpointLost,
    ShapeMismatch,
    BudgetExceeded,
    SamplerExhausted,
    Disconnected,
    BadArgument,
    Internal,
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

}  // namespace hirsch
