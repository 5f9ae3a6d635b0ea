#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "viscowave/models.hpp"

namespace viscowave::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kNumericalError = 3,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"model": name, parameter: value, ...}
std::string model_json(const RelaxationModel& model);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string config_hash(const std::string& text);

}  // namespace viscowave::cli
