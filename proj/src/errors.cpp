#include "nibble/errors.hpp"

namespace nibble {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MissingWeight: return "missing-weight";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::ParameterDomain: return "parameter-domain";
    case ErrorCode::ScheduleCollapse: return "schedule-collapse";
    case ErrorCode::DegenerateWeight: return "degenerate-weight";
    case ErrorCode::NibbleFailure: return "nibble-failure";
    case ErrorCode::EnumerationLimit: return "enumeration-limit";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::DivisionDomain: return "division-domain";
    case ErrorCode::Range: return "range";
    case ErrorCode::Generation: return "generation";
    case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

} // namespace nibble
