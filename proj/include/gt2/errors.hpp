#ifndef GT2_ERRORS_HPP
#define GT2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gt2 {

// Bad data supplied by a caller or read from a file.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An API contract was broken (wrong state, mixed contexts, missing precondition).
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Fixed-width arithmetic left its representable range.
class ArithmeticError : public std::runtime_error {
public:
  explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gt2

#endif
