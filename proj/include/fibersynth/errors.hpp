#pragma once

#include <stdexcept>
#include <string>

namespace fibersynth {

// Error taxonomy mapped to CLI exit codes: ConfigError -> 2, DataError -> 3,
// TrainingError -> 4. Plain std::invalid_argument is reserved for API misuse
// (shape/dimension mismatches) and maps to exit code 1.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fibersynth
