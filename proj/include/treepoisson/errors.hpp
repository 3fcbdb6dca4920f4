#pragma once

#include <stdexcept>
#include <string>

namespace treepoisson {

// Malformed inputs: bad files, ids out of range, wrong tree class.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter outside the regime an operation is defined for:
// z^2 in {0,1}, q >= |z|^2, power overflow.
class NumericRegimeError : public std::runtime_error {
public:
    explicit NumericRegimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treepoisson
