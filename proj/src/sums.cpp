#include "hypersolid/sums.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace hypersolid {

std::string_view to_string(FixedCoordinate which) {
  switch (which) {
    case FixedCoordinate::kNone:
      return "none";
    case FixedCoordinate::kV:
      return "v";
    case FixedCoordinate::kD:
      return "d";
    case FixedCoordinate::kN:
      return "n";
  }
  return "unknown";
}

std::vector<TripleValue> enumerate_triples(Index s) {
  std::vector<TripleValue> out;
  out.reserve((static_cast<std::size_t>(s) + 1) * (s + 2) / 2);
  for (Index v = 0; v <= s; ++v) {
    for (Index d = 0; d <= s - v; ++d) {
      const IndexTriple t{v, d, s - v - d};
      out.push_back({t, hypersolid(t)});
    }
  }
  return out;
}

namespace {

// Triples with v + d + n = s and the fixed coordinate pinned, in (v, d, n)
// order: the rows of enumerate_triples(s) that match the query.
std::vector<TripleValue> candidates(const SumQuery& q) {
  if (q.fixed == FixedCoordinate::kNone) return enumerate_triples(q.s);
  std::vector<TripleValue> out;
  const Index rest = q.s - q.value;
  for (Index a = 0; a <= rest; ++a) {
    IndexTriple t;
    switch (q.fixed) {
      case FixedCoordinate::kV:
        t = {q.value, a, rest - a};
        break;
      case FixedCoordinate::kD:
        t = {a, q.value, rest - a};
        break;
      default:
        t = {a, rest - a, q.value};
        break;
    }
    out.push_back({t, hypersolid(t)});
  }
  return out;
}

// Fills the enumerated fields and the verdict from the oracle.
SumReport finish(SumReport report, bool with_triples) {
  std::vector<TripleValue> contributors;
  for (auto& tv : candidates(report.query)) {
    if (tv.value == 0) continue;
    report.enumerated_sum += tv.value;
    ++report.enumerated_multitude;
    if (with_triples) contributors.push_back(std::move(tv));
  }
  if (with_triples) report.triples = std::move(contributors);
  report.consistent = report.has_formula() && *report.formula_sum == report.enumerated_sum &&
                      *report.formula_multitude == report.enumerated_multitude;
  return report;
}

void require_fixed_in_range(std::string_view op, std::string_view name, Index value, Index s) {
  if (value > s) {
    throw RangeError(std::string(op) + ": fixed " + std::string(name) + "=" + std::to_string(value) +
                     " exceeds s=" + std::to_string(s));
  }
}

}  // namespace

SumReport sum_fixed_sv(Index s, Index v, bool with_triples) {
  require_fixed_in_range("sum_fixed_sv", "v", v, s);
  SumReport r;
  r.query = {s, FixedCoordinate::kV, v};
  const std::int64_t ss = s;
  if (v == 0) {
    r.formula_sum = binomial(ss - 1, 2);
    r.formula_multitude = std::max<std::int64_t>(ss - 2, 0);
  } else {
    r.formula_sum = binomial(ss - 1, v) + binomial(ss - 1, std::int64_t{v} + 2);
    r.formula_multitude = ss - v;
  }
  return finish(std::move(r), with_triples);
}

SumReport sum_fixed_sd(Index s, Index d, bool with_triples) {
  require_fixed_in_range("sum_fixed_sd", "d", d, s);
  SumReport r;
  r.query = {s, FixedCoordinate::kD, d};
  if (s >= 2 && d <= s - 2) {
    r.formula_sum = (Nat(d) + 1) << (s - d - 2);
    r.formula_multitude = d == 0 ? std::int64_t{s} - 1 : std::int64_t{s} - d;
  }
  return finish(std::move(r), with_triples);
}

SumReport sum_fixed_sn(Index s, Index n, bool with_triples) {
  require_fixed_in_range("sum_fixed_sn", "n", n, s);
  SumReport r;
  r.query = {s, FixedCoordinate::kN, n};
  const std::int64_t ss = s;
  if (n == 0) {
    r.formula_sum = 0;
    r.formula_multitude = 0;
  } else if (n == 1) {
    r.formula_sum = ss - 1;
    r.formula_multitude = ss - 1;
  } else if (n < s) {
    r.formula_sum = 2 * binomial(ss - 1, n);
    r.formula_multitude = ss - n + 1;
  }
  return finish(std::move(r), with_triples);
}

SumReport sum_fixed_s(Index s, bool with_triples) {
  SumReport r;
  r.query = {s, FixedCoordinate::kNone, 0};
  if (s >= 2) {
    r.formula_sum = (Nat(1) << s) - (Nat(s) + 1);
    r.formula_multitude = static_cast<std::int64_t>(binomial(std::int64_t{s} + 1, 2)) - 2;
  }
  return finish(std::move(r), with_triples);
}

SumReport sum_report(const SumQuery& query, bool with_triples) {
  switch (query.fixed) {
    case FixedCoordinate::kV:
      return sum_fixed_sv(query.s, query.value, with_triples);
    case FixedCoordinate::kD:
      return sum_fixed_sd(query.s, query.value, with_triples);
    case FixedCoordinate::kN:
      return sum_fixed_sn(query.s, query.value, with_triples);
    case FixedCoordinate::kNone:
      break;
  }
  return sum_fixed_s(query.s, with_triples);
}

// ---------------------------------------------------------------------------
// Auxiliary identities

namespace {

struct LemmaInfo {
  LemmaId id;
  std::string_view name;
  std::array<std::string_view, 2> params;  // unused slots are empty
};

constexpr std::array<LemmaInfo, 10> kLemmaTable{{
    {LemmaId::kSumR, "sum_r", {"n", ""}},
    {LemmaId::kSumR2, "sum_r2", {"n", ""}},
    {LemmaId::kSumR3, "sum_r3", {"n", ""}},
    {LemmaId::kHockeyStick, "hockey_stick", {"M", "m"}},
    {LemmaId::kDiagonalStick, "diagonal_stick", {"M", "m"}},
    {LemmaId::kRowPower, "row_power", {"M", ""}},
    {LemmaId::kWeightedStick, "weighted_stick", {"M", "m"}},
    {LemmaId::kPermutationLadder, "permutation_ladder", {"M", "m"}},
    {LemmaId::kGeometric, "geometric", {"R", ""}},
    {LemmaId::kWeightedGeometric, "weighted_geometric", {"R", ""}},
}};

const LemmaInfo& info(LemmaId id) {
  for (const auto& entry : kLemmaTable) {
    if (entry.id == id) return entry;
  }
  throw RangeError("unknown lemma id");
}

std::int64_t param(const LemmaParams& params, LemmaId id, std::string_view name) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw RangeError(std::string(to_string(id)) + ": missing parameter " + std::string(name));
  }
  if (it->second < 0) {
    throw RangeError(std::string(to_string(id)) + ": parameter " + std::string(name) + " must be >= 0");
  }
  return it->second;
}

Nat power_sum(std::int64_t n, unsigned exponent) {
  Nat total = 0;
  for (std::int64_t r = 1; r <= n; ++r) total += boost::multiprecision::pow(Nat(r), exponent);
  return total;
}

}  // namespace

std::string_view to_string(LemmaId id) { return info(id).name; }

std::optional<LemmaId> parse_lemma(std::string_view name) {
  for (const auto& entry : kLemmaTable) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::vector<std::string> lemma_parameters(LemmaId id) {
  std::vector<std::string> names;
  for (auto p : info(id).params) {
    if (!p.empty()) names.emplace_back(p);
  }
  return names;
}

std::pair<Nat, Nat> lemma_sides(LemmaId id, const LemmaParams& params) {
  switch (id) {
    case LemmaId::kSumR: {
      const auto n = param(params, id, "n");
      return {power_sum(n, 1), Nat(n) * (n + 1) / 2};
    }
    case LemmaId::kSumR2: {
      const auto n = param(params, id, "n");
      return {power_sum(n, 2), Nat(n) * (n + 1) * (2 * n + 1) / 6};
    }
    case LemmaId::kSumR3: {
      const auto n = param(params, id, "n");
      const Nat half = Nat(n) * (n + 1) / 2;
      return {power_sum(n, 3), half * half};
    }
    case LemmaId::kHockeyStick: {
      const auto M = param(params, id, "M");
      const auto m = param(params, id, "m");
      if (m > M) throw RangeError("hockey_stick: requires m <= M");
      Nat lhs = 0;
      for (std::int64_t j = m; j <= M; ++j) lhs += binomial(j, m);
      return {lhs, binomial(M + 1, m + 1)};
    }
    case LemmaId::kDiagonalStick: {
      const auto M = param(params, id, "M");
      const auto m = param(params, id, "m");
      Nat lhs = 0;
      for (std::int64_t j = 0; j <= m; ++j) lhs += binomial(M + j, j);
      return {lhs, binomial(M + m + 1, m)};
    }
    case LemmaId::kRowPower: {
      const auto M = param(params, id, "M");
      Nat lhs = 0;
      for (std::int64_t j = 0; j <= M; ++j) lhs += binomial(M, j);
      return {lhs, Nat(1) << M};
    }
    case LemmaId::kWeightedStick: {
      const auto M = param(params, id, "M");
      const auto m = param(params, id, "m");
      if (!(M > m)) throw RangeError("weighted_stick: requires M > m");
      Nat lhs = 0;
      for (std::int64_t j = 1; j <= M - m; ++j) lhs += j * binomial(M - j, m);
      return {lhs, binomial(M + 1, m + 2)};
    }
    case LemmaId::kPermutationLadder: {
      const auto M = param(params, id, "M");
      const auto m = param(params, id, "m");
      if (m > M) throw RangeError("permutation_ladder: requires m <= M");
      Nat ladder = 0;
      for (std::int64_t j = m; j <= M; ++j) ladder += permutation(j, m - 1);
      return {permutation(M + 1, m), permutation(m, m) + m * ladder};
    }
    case LemmaId::kGeometric: {
      const auto R = param(params, id, "R");
      Nat lhs = 0;
      for (std::int64_t r = 0; r <= R; ++r) lhs += Nat(1) << r;
      return {lhs, (Nat(1) << (R + 1)) - 1};
    }
    case LemmaId::kWeightedGeometric: {
      const auto R = param(params, id, "R");
      Nat lhs = 0;
      for (std::int64_t r = 0; r <= R; ++r) lhs += r * (Nat(1) << r);
      return {lhs, 2 + Nat(R - 1) * (Nat(1) << (R + 1))};
    }
  }
  throw RangeError("unknown lemma id");
}

bool lemma_check(LemmaId id, const LemmaParams& params) {
  const auto [lhs, rhs] = lemma_sides(id, params);
  return lhs == rhs;
}

}  // namespace hypersolid
