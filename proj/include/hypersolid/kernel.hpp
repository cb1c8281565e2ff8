#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypersolid/nat.hpp"

namespace hypersolid {

// Coordinates of one hypersolid number S(v, d, n): dimension v, common
// difference d of the generating progression, rank n.
struct IndexTriple {
  Index v = 0;
  Index d = 0;
  Index n = 0;

  friend constexpr auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

std::string to_string(const IndexTriple& t);

enum class EvalMethod {
  kClosed,     // binomial closed form
  kSummation,  // repeated prefix sums of the arithmetic progression
};

std::string_view to_string(EvalMethod method);

// C(M, m). Zero whenever m < 0, m > M or M < 0.
Nat binomial(std::int64_t M, std::int64_t m);

// M! / (M - m)!. Zero whenever m < 0, m > M or M < 0.
Nat permutation(std::int64_t M, std::int64_t m);

// r-th term 1 + (r - 1) d of the progression; r must be at least 1.
Nat gnomon_term(Index d, Index r);

// Plane polygonal, solid pyramidal and four-dimensional numbers, evaluated
// from their own product formulas (independent of hypersolid()).
Nat polygonal(Index d, Index n);
Nat pyramidal(Index d, Index n);
Nat hyper4(Index d, Index n);

// S(v, d, n) = C(v+n-2, v-1) + d C(v+n-2, v).
Nat hypersolid(const IndexTriple& t, EvalMethod method = EvalMethod::kClosed);

// [S(v, d, 0), ..., S(v, d, n_max)] by repeated prefix sums. The v = 0 row is
// the constant d from n = 2 on.
std::vector<Nat> compiled_row(Index v, Index d, Index n_max);

// Rank, difference and dimension gnomons. Each returns the quantity added
// to a neighbouring hypersolid to reach S(t):
//   n_gnomon: S(v,d,n) - S(v,d,n-1) = S(v-1,d,n)   needs v >= 1, n >= 1
//   d_gnomon: S(v,d,n) - S(v,d-1,n) = S(v,1,n-1)   needs d >= 1, n >= 1
//   v_gnomon: S(v,d,n) - S(v-1,d,n) = S(v,d,n-1)   needs v >= 1, n >= 1
Nat n_gnomon(const IndexTriple& t);
Nat d_gnomon(const IndexTriple& t);
Nat v_gnomon(const IndexTriple& t);

}  // namespace hypersolid
