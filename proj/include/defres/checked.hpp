#pragma once

// Overflow-checked integer arithmetic. Every exact computation in the
// library goes through these helpers so that a result which does not fit
// in 64 bits raises instead of wrapping.

#include <cstdint>
#include <stdexcept>

namespace defres {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

inline Int checked_pow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace defres
