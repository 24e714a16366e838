#pragma once

#include <stdexcept>
#include <string>

namespace pvo {

/// A computation would exceed its configured size budget (degree or window).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// pi = [] passed where L_pi(1) vanishes identically.
class DegenerateShape : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pvo
