#pragma once

#include <stdexcept>
#include <string>

namespace gaussfid {

// A kernel whose parameters break the Hermiticity relations (d = conj a,
// b real, k = conj l, g real) beyond tolerance.
class invalid_kernel_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A kernel that cannot represent a non-negative operator (b > 0 or Re a < -b).
class non_positive_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A covariance matrix with detA < 1 or non-positive diagonal.
class unphysical_state_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Fock truncation too small for the requested deficit budget.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(const std::string& what, int suggested)
      : std::runtime_error(what), suggested_dim(suggested) {}
  int suggested_dim;
};

}  // namespace gaussfid
