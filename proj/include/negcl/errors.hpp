#pragma once

#include <stdexcept>
#include <string>

namespace negcl {

// Invalid or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable or malformed dataset files (CLI exit code 3).
struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite training loss (CLI exit code 4).
struct DivergenceError : std::runtime_error {
    DivergenceError(int epoch, const std::string& what)
        : std::runtime_error(what), epoch(epoch) {}
    int epoch;
};

}  // namespace negcl
