#pragma once

#include "nibble/instance.hpp"

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

namespace nibble::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification = 1,
    exit_input = 2,
    exit_cap = 3,
    exit_resource = 4,
};

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Checks a colouring document against an instance. Violations go to err.
int verify(const Instance& inst, const nlohmann::json& colouring, std::ostream& err);

} // namespace nibble::cli
