#pragma once

// Exact integer helpers: arbitrary-precision binomials and rounding division.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "frc/error.hpp"

namespace frc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(a, b), zero when b < 0 or b > a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

// Mathematical floor/ceiling of num/den for den > 0, valid for negative num.
inline std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && ((num < 0) != (den < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) { return -floor_div(BigInt(-num), den); }

inline std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error("integer result does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace frc
