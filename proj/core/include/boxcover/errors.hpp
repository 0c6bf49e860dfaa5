#pragma once

#include <stdexcept>
#include <string>

namespace boxcover {

// Malformed caller input: bad ids, self-loops, unparseable files, violated
// operation preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a hard cap of an exact algorithm.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boxcover
