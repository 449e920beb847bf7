#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nibble {

enum class ErrorCode {
    MissingWeight,
    Precondition,
    Validation,
    ParameterDomain,
    ScheduleCollapse,
    DegenerateWeight,
    NibbleFailure,
    EnumerationLimit,
    Unsupported,
    DivisionDomain,
    Range,
    Generation,
    Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown by the schedule when L' <= 0 or the keep probability leaves (0,1].
class ScheduleCollapse : public Error {
public:
    ScheduleCollapse(std::uint32_t round, const std::string& what)
        : Error(ErrorCode::ScheduleCollapse, what), round_(round) {}

    std::uint32_t round() const noexcept { return round_; }

private:
    std::uint32_t round_;
};

class NibbleFailure : public Error {
public:
    NibbleFailure(std::uint32_t round, const std::string& what)
        : Error(ErrorCode::NibbleFailure, what), round_(round) {}

    std::uint32_t round() const noexcept { return round_; }

private:
    std::uint32_t round_;
};

} // namespace nibble
