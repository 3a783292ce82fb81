#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kronecker {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a configurable cap is hit. `partial` is the amount of work or number of
/// results produced before stopping.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::string cap_name, std::size_t cap, std::size_t partial)
        : std::runtime_error("resource cap '" + cap_name + "' (" + std::to_string(cap) +
                             ") exceeded after " + std::to_string(partial) + " items"),
          cap_name_(std::move(cap_name)),
          cap_(cap),
          partial_(partial) {}

    const std::string& cap_name() const { return cap_name_; }
    std::size_t cap() const { return cap_; }
    std::size_t partial() const { return partial_; }

private:
    std::string cap_name_;
    std::size_t cap_;
    std::size_t partial_;
};

/// Caps for lattice-point style enumerations.
struct EnumerationLimits {
    std::size_t max_points = 50'000'000;
    std::size_t max_nodes = 4'000'000'000;
};

}  // namespace kronecker
