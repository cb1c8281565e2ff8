#include "hypersolid/search.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hypersolid {

namespace {

constexpr std::uint64_t kMaxIndex = std::numeric_limits<Index>::max();

Nat value_at(Index v, Index d, std::uint64_t n) { return hypersolid({v, d, static_cast<Index>(n)}); }

}  // namespace

std::optional<Index> rank_of(const Nat& value, Index v, Index d) {
  if (v == 0 || (v == 1 && d == 0)) {
    throw RangeError("rank_of: requires v >= 2, or v = 1 with d >= 1 (strictly increasing ranks)");
  }
  if (value < 1) throw RangeError("rank_of: value must be >= 1");

  // Smallest power-of-two bracket [lo, hi] with S(v,d,hi) >= value.
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  while (value_at(v, d, hi) < value) {
    if (hi == kMaxIndex) return std::nullopt;
    lo = hi + 1;
    hi = std::min(hi * 2, kMaxIndex);
  }
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (value_at(v, d, mid) < value) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (value_at(v, d, lo) != value) return std::nullopt;
  return static_cast<Index>(lo);
}

std::vector<RepresentationHit> representations(const RepresentationQuery& query) {
  const Nat& target = query.target;
  if (target < 1) throw RangeError("representations: target must be >= 1");

  const IndexRange d_range = query.d_range.value_or(
      IndexRange{0, target > kMaxIndex ? static_cast<Index>(kMaxIndex) : static_cast<Index>(target)});

  std::vector<RepresentationHit> hits;
  for (std::uint64_t v = query.v_range.low; v <= query.v_range.high; ++v) {
    // For v >= 2 the d = 0 value C(v+n-2, v-1) grows with n and bounds the
    // search. For v <= 1 it never exceeds 1, so the default cap is target + 1.
    std::uint64_t n_cap = query.n_max.value_or(kMaxIndex);
    if (v < 2 && !query.n_max) {
      n_cap = target >= kMaxIndex ? kMaxIndex : static_cast<std::uint64_t>(target) + 1;
    }
    for (std::uint64_t n = query.n_min; n <= n_cap; ++n) {
      if (n == 0) continue;
      const std::int64_t top = static_cast<std::int64_t>(v + n) - 2;
      const Nat base = binomial(top, static_cast<std::int64_t>(v) - 1);
      if (base > target) {
        if (v >= 2) break;
        continue;
      }
      const Nat slope = binomial(top, static_cast<std::int64_t>(v));
      const Nat residual = target - base;
      if (slope == 0) {
        if (residual != 0) continue;
        for (std::uint64_t d = d_range.low; d <= d_range.high; ++d) {
          hits.push_back({{static_cast<Index>(v), static_cast<Index>(d), static_cast<Index>(n)}, target});
        }
        continue;
      }
      if (residual % slope != 0) continue;
      const Nat d = residual / slope;
      if (d < d_range.low || d > d_range.high) continue;
      hits.push_back({{static_cast<Index>(v), static_cast<Index>(d), static_cast<Index>(n)}, target});
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const RepresentationHit& a, const RepresentationHit& b) { return a.triple < b.triple; });
  return hits;
}

std::vector<Nat> sequence_slice(Index v, Index d, Index n_from, Index n_to) {
  if (n_from > n_to) {
    throw RangeError("sequence_slice: n_from " + std::to_string(n_from) + " exceeds n_to " + std::to_string(n_to));
  }
  auto row = compiled_row(v, d, n_to);
  return {row.begin() + n_from, row.end()};
}

}  // namespace hypersolid
