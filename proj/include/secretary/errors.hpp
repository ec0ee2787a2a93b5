// errors.hpp — exception types shared by all solver modules.
#pragma once
#include <stdexcept>
#include <string>

namespace secretary {

// Argument outside the domain of an operation (bad thresholds, prefix length
// out of range, theta <= 0).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Request exceeds a hard size cap, e.g. exhaustive enumeration of S_n.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// The quantity does not exist, e.g. conditioning on a zero-probability win.
class undefined_result_error : public std::runtime_error {
public:
    explicit undefined_result_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace secretary
