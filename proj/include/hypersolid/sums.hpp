#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersolid/kernel.hpp"

namespace hypersolid {

// Which coordinate (if any) is held fixed alongside s = v + d + n.
enum class FixedCoordinate { kNone, kV, kD, kN };

std::string_view to_string(FixedCoordinate which);

struct SumQuery {
  Index s = 0;
  FixedCoordinate fixed = FixedCoordinate::kNone;
  Index value = 0;  // ignored when fixed == kNone
};

struct TripleValue {
  IndexTriple triple;
  Nat value;

  friend bool operator==(const TripleValue&, const TripleValue&) = default;
};

// Closed form vs. exhaustive enumeration for one query. An empty formula
// field means no closed form applies to the query.
struct SumReport {
  SumQuery query;
  std::optional<Nat> formula_sum;
  Nat enumerated_sum;
  std::optional<std::int64_t> formula_multitude;
  std::int64_t enumerated_multitude = 0;
  // Nonzero contributors in (v, d, n) order; filled only when requested.
  std::optional<std::vector<TripleValue>> triples;
  bool consistent = false;

  bool has_formula() const { return formula_sum.has_value() && formula_multitude.has_value(); }
};

// All C(s+2, 2) triples with v + d + n = s and their values, in (v, d, n) order.
std::vector<TripleValue> enumerate_triples(Index s);

SumReport sum_fixed_sv(Index s, Index v, bool with_triples = false);
SumReport sum_fixed_sd(Index s, Index d, bool with_triples = false);
SumReport sum_fixed_sn(Index s, Index n, bool with_triples = false);
SumReport sum_fixed_s(Index s, bool with_triples = false);

// Dispatches on query.fixed.
SumReport sum_report(const SumQuery& query, bool with_triples = false);

enum class LemmaId {
  kSumR,               // sum_{r=1}^{n} r = n(n+1)/2
  kSumR2,              // sum_{r=1}^{n} r^2 = n(n+1)(2n+1)/6
  kSumR3,              // sum_{r=1}^{n} r^3 = (n(n+1)/2)^2
  kHockeyStick,        // sum_{j=m}^{M} C(j,m) = C(M+1,m+1),            0 <= m <= M
  kDiagonalStick,      // sum_{j=0}^{m} C(M+j,j) = C(M+m+1,m),          M, m >= 0
  kRowPower,           // sum_{j=0}^{M} C(M,j) = 2^M
  kWeightedStick,      // sum_{j=1}^{M-m} j C(M-j,m) = C(M+1,m+2),      0 <= m < M
  kPermutationLadder,  // P(M+1,m) = m! + m sum_{j=m}^{M} P(j,m-1),     0 <= m <= M
  kGeometric,          // sum_{r=0}^{R} 2^r = 2^(R+1) - 1
  kWeightedGeometric,  // sum_{r=0}^{R} r 2^r = 2 + (R-1) 2^(R+1)
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::kSumR,          LemmaId::kSumR2,          LemmaId::kSumR3,
    LemmaId::kHockeyStick,   LemmaId::kDiagonalStick,  LemmaId::kRowPower,
    LemmaId::kWeightedStick, LemmaId::kPermutationLadder, LemmaId::kGeometric,
    LemmaId::kWeightedGeometric,
};

std::string_view to_string(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view name);

// Names of the bound variables each lemma reads from its parameter map.
std::vector<std::string> lemma_parameters(LemmaId id);

using LemmaParams = std::map<std::string, std::int64_t, std::less<>>;

// Both sides evaluated exactly. Missing or out-of-domain parameters raise
// RangeError.
bool lemma_check(LemmaId id, const LemmaParams& params);

// Both sides of the identity, for reporting.
std::pair<Nat, Nat> lemma_sides(LemmaId id, const LemmaParams& params);

}  // namespace hypersolid
