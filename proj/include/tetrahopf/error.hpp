#pragma once

#include <stdexcept>
#include <string>

namespace tetrahopf {

/// Thrown whenever a computation reaches a state the theory forbids
/// (singular change of basis, non-unit leading coefficient, ...) or an
/// input is malformed.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tetrahopf
