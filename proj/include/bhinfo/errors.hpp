#pragma once

#include <stdexcept>
#include <string>

namespace bhinfo {

// Input outside the physical domain of a formula (negative mass, sub-Planck
// hole, radius inside a horizon, ...). The CLI maps this to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Q^2 + a^2 > M^2: no horizon exists.
class NakedSingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace bhinfo
