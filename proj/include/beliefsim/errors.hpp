#pragma once

#include <stdexcept>
#include <string>

namespace beliefsim {

// Configuration and input-file problems. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdowns: overflow, divergence, iteration caps. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace beliefsim
