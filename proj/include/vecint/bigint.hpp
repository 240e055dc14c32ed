// Arbitrary-precision integers and rationals for the exact-count paths.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

namespace vecint {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// log2 of a positive BigInt, accurate to ~1e-15 relative (double mantissa).
inline double log2_big(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(value);  // floor(log2)
  if (bits < 63) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  BigInt top = value >> (bits - 62);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

inline std::string to_string(const BigInt& value) { return value.str(); }

inline double to_double(const BigRat& value) { return value.convert_to<double>(); }

}  // namespace vecint
