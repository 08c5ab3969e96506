#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace trislice {

// All counting and elimination arithmetic is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t value) noexcept;

}  // namespace trislice
