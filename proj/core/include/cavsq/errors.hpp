#pragma once

#include <stdexcept>
#include <string>

namespace cavsq {

// Bad or inconsistent user input (config files, CLI values). Exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The model itself is ill-posed for the given parameters (amplification
// regime, unstable drift, heating regime). Exit code 2.
struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cavsq
