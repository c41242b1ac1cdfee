#pragma once

#include <cstdint>
#include <stdexcept>

namespace fourfold::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t abs(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("integer overflow in abs");
  return a < 0 ? -a : a;
}

/// Ceiling of num/den for den > 0.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace fourfold::checked
