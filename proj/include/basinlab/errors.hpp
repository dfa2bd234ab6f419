#pragma once

#include <stdexcept>
#include <string>

namespace basinlab {

// Bad user input: malformed config, parameter out of range.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation could not produce a meaningful result.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotInvertible : NumericError {
    explicit NotInvertible(const std::string& msg) : NumericError(msg) {}
};

struct UnsupportedSystem : NumericError {
    explicit UnsupportedSystem(const std::string& msg) : NumericError(msg) {}
};

struct RequiresLebesgueBase : NumericError {
    explicit RequiresLebesgueBase(const std::string& msg) : NumericError(msg) {}
};

struct NoValidC : NumericError {
    explicit NoValidC(const std::string& msg) : NumericError(msg) {}
};

struct ZeroVector : NumericError {
    explicit ZeroVector(const std::string& msg) : NumericError(msg) {}
};

struct TauDiverged : NumericError {
    explicit TauDiverged(const std::string& msg) : NumericError(msg) {}
};

struct DeltaTooSmall : NumericError {
    explicit DeltaTooSmall(const std::string& msg) : NumericError(msg) {}
};

struct BadSegment : NumericError {
    explicit BadSegment(const std::string& msg) : NumericError(msg) {}
};

struct EmptyGrid : NumericError {
    explicit EmptyGrid(const std::string& msg) : NumericError(msg) {}
};

}  // namespace basinlab
