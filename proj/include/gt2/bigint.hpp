#ifndef GT2_BIGINT_HPP
#define GT2_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "gt2/errors.hpp"

namespace gt2 {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_even(const BigInt& x) { return (x & 1) == 0; }
inline bool is_odd(const BigInt& x) { return (x & 1) != 0; }

// (-1)^e
inline int neg_one_pow(const BigInt& e) { return is_even(e) ? 1 : -1; }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticError("integer overflow in exponent arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticError("integer overflow in exponent arithmetic");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  return checked_mul(a, -1);
}

}  // namespace gt2

#endif
