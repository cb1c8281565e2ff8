#include "hypersolid/triangle.hpp"

#include <string>

namespace hypersolid {

Triangle::Triangle(Index d, Index c_max) : d_(d), c_max_(c_max) {
  rows_.reserve(static_cast<std::size_t>(c_max) + 1);
  for (Index c = 0; c <= c_max; ++c) {
    std::vector<Nat> row;
    row.reserve(static_cast<std::size_t>(c) + 1);
    for (Index v = 0; v <= c; ++v) row.push_back(hypersolid({v, d, c - v}));
    rows_.push_back(std::move(row));
  }
}

std::span<const Nat> Triangle::row(Index c) const {
  if (c > c_max_) {
    throw RangeError("Triangle::row: row " + std::to_string(c) + " beyond c_max " + std::to_string(c_max_));
  }
  return rows_[c];
}

const Nat& Triangle::entry(Index c, Index v) const {
  const auto r = row(c);
  if (v > c) throw RangeError("Triangle::entry: position v must not exceed row index c");
  return r[v];
}

Triangle build_triangle(Index d, Index c_max) { return Triangle(d, c_max); }

Nat row_sum(Index d, Index c) {
  if (c < 2) return 0;
  return (Nat(d) + 1) << (c - 2);
}

Nat compile_row(Index d, Index n, Index v) {
  Nat total = 0;
  for (Index r = 0; r <= v; ++r) total += hypersolid({r, d, n});
  return total;
}

Nat diagonal_sum(const DiagonalSpec& spec) {
  if (spec.m < 2) throw RangeError("diagonal_sum: inverse slope m must be >= 2");
  if (spec.k < 2) throw RangeError("diagonal_sum: diagonal index k must be >= 2");
  Nat total = 0;
  for (Index v = 0; v <= spec.k / spec.m; ++v) total += hypersolid({v, spec.d, spec.k - spec.m * v});
  return total;
}

std::vector<Nat> recurrence_sequence(Index d, Index m, Index count) {
  if (m < 2) throw RangeError("recurrence_sequence: order parameter m must be >= 2");
  if (count < 2) throw RangeError("recurrence_sequence: count must be >= 2");
  std::vector<Nat> terms;
  terms.reserve(count);
  for (Index k = 0; k < count; ++k) terms.push_back(diagonal_sum({d, m, k + 2}));
  return terms;
}

bool pascal_entry_check(Index c, Index v) {
  if (v > c) return false;
  const Nat entry = hypersolid({v, 0, c - v});
  return entry == binomial(static_cast<std::int64_t>(c) - 2, static_cast<std::int64_t>(v) - 1);
}

}  // namespace hypersolid
