#pragma once

#include <optional>
#include <vector>

#include "hypersolid/kernel.hpp"

namespace hypersolid {

struct IndexRange {
  Index low = 0;
  Index high = 0;

  bool contains(Index x) const { return low <= x && x <= high; }
};

// Inverse problem: which S(v, d, n) inside a box equal the target. Unset
// d_range defaults to [0, target]; unset n_max is derived from the target.
struct RepresentationQuery {
  Nat target = 1;
  IndexRange v_range{2, 8};
  std::optional<IndexRange> d_range;
  Index n_min = 3;
  std::optional<Index> n_max;
};

struct RepresentationHit {
  IndexTriple triple;
  Nat value;

  friend bool operator==(const RepresentationHit&, const RepresentationHit&) = default;
};

// The unique n >= 1 with S(v, d, n) == value, if any. Requires v >= 2, or
// v == 1 with d >= 1, so that n -> S(v, d, n) is strictly increasing.
std::optional<Index> rank_of(const Nat& value, Index v, Index d);

// Every hit in the query box, in (v, d, n) order.
std::vector<RepresentationHit> representations(const RepresentationQuery& query);

// [S(v, d, n) for n = n_from..n_to].
std::vector<Nat> sequence_slice(Index v, Index d, Index n_from, Index n_to);

}  // namespace hypersolid
