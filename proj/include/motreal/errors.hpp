#pragma once

#include <stdexcept>
#include <string>

namespace motreal {

/// Enumeration oracle was asked to exceed its element-pair budget.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural hypothesis of a theorem-backed operation does not hold.
class HypothesisViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A denominator prime lies outside the requested prime set.
class PrimeOutsideSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arguments outside the documented range of a verifier.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Chart request larger than the cell budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace motreal
