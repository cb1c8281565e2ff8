#pragma once

#include <span>
#include <vector>

#include "hypersolid/kernel.hpp"

namespace hypersolid {

// Arithmetic triangle of the hypersolids sharing one common difference d.
// Row c lists S(v, d, c - v) for v = 0..c, so every row ends in the n = 0
// zero. At d = 0 the rows are Pascal rows shifted by two and zero padded.
class Triangle {
 public:
  Triangle(Index d, Index c_max);

  Index d() const { return d_; }
  Index c_max() const { return c_max_; }

  std::span<const Nat> row(Index c) const;
  const Nat& entry(Index c, Index v) const;

 private:
  Index d_;
  Index c_max_;
  std::vector<std::vector<Nat>> rows_;
};

// Lines m v + n = k through the triangle; m = 2 gives the Fibonacci-type
// diagonals.
struct DiagonalSpec {
  Index d = 0;
  Index m = 2;
  Index k = 2;
};

Triangle build_triangle(Index d, Index c_max);

// 0 for c < 2, otherwise (d + 1) 2^(c-2).
Nat row_sum(Index d, Index c);

// Sum of S(r, d, n) for r = 0..v; equals S(v, d, n + 1).
Nat compile_row(Index d, Index n, Index v);

Nat diagonal_sum(const DiagonalSpec& spec);

// a_k = diagonal_sum(d, m, k + 2) for k = 0..count-1. For m = 2 this is the
// sequence d, d+1, 2d+1, 3d+2, ...; in general a_k = a_{k-1} + a_{k-m}.
std::vector<Nat> recurrence_sequence(Index d, Index m, Index count);

// Whether entry (c, v) of the d = 0 triangle equals C(c-2, v-1).
bool pascal_entry_check(Index c, Index v);

}  // namespace hypersolid
