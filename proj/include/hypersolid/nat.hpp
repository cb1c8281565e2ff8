#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypersolid {

// Exact integer used for every figurate value. Values produced by the library
// are nonnegative; the signed backing type lets identity checks carry
// intermediate differences without wraparound.
using Nat = boost::multiprecision::cpp_int;

// Coordinate type for v, d, n and for the derived sums s and c.
using Index = std::uint32_t;

// Raised when an argument falls outside an operation's precondition.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline std::string to_string(const Nat& value) { return value.str(); }

}  // namespace hypersolid
