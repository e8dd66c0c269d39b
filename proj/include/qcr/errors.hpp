#pragma once

#include <stdexcept>
#include <string>

namespace qcr {

// Input outside an operation's mathematical domain (|s| > 1, p outside [0,1],
// non-orthogonal axes, ...).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {
    }
};

// Measured data that cannot be turned into a valid estimate, e.g. readout
// correction producing probabilities too far below zero.
class DataQualityError : public std::runtime_error {
  public:
    explicit DataQualityError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace qcr
