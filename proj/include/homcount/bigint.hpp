#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace homcount {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::uint64_t n)
{
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

inline BigInt ipow(const BigInt& base, std::uint64_t exponent)
{
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1u)
      result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

} // namespace homcount
