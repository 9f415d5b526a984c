#pragma once

#include <stdexcept>
#include <string>

namespace tlsim {

// Invalid user input: bad config keys, malformed data files, parameters out of
// their physical range. Maps to process exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure while a simulation is running (singular system, taut-cable
// regime, residual out of bounds). Maps to process exit code 3.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tlsim
