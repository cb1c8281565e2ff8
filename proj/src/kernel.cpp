#include "hypersolid/kernel.hpp"

#include <algorithm>

namespace hypersolid {

std::string to_string(const IndexTriple& t) {
  return "(" + std::to_string(t.v) + "," + std::to_string(t.d) + "," + std::to_string(t.n) + ")";
}

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::kClosed:
      return "closed";
    case EvalMethod::kSummation:
      return "summation";
  }
  return "unknown";
}

Nat binomial(std::int64_t M, std::int64_t m) {
  if (M < 0 || m < 0 || m > M) return 0;
  const std::int64_t k = std::min(m, M - m);
  Nat result = 1;
  // After step i the running value is C(M - k + i, i), so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= M - k + i;
    result /= i;
  }
  return result;
}

Nat permutation(std::int64_t M, std::int64_t m) {
  if (M < 0 || m < 0 || m > M) return 0;
  Nat result = 1;
  for (std::int64_t i = M - m + 1; i <= M; ++i) result *= i;
  return result;
}

Nat gnomon_term(Index d, Index r) {
  if (r == 0) throw RangeError("gnomon_term: term index r must be >= 1");
  return Nat(1) + Nat(r - 1) * d;
}

Nat polygonal(Index d, Index n) {
  const Nat nn = n;
  const Nat product = nn * (2 + (nn - 1) * d);
  return product / 2;
}

Nat pyramidal(Index d, Index n) {
  const Nat nn = n;
  const Nat product = nn * (nn + 1) * (3 + (nn - 1) * d);
  return product / 6;
}

Nat hyper4(Index d, Index n) {
  const Nat nn = n;
  const Nat product = nn * (nn + 1) * (nn + 2) * (4 + (nn - 1) * d);
  return product / 24;
}

std::vector<Nat> compiled_row(Index v, Index d, Index n_max) {
  std::vector<Nat> row(static_cast<std::size_t>(n_max) + 1);
  if (v == 0) {
    for (std::size_t n = 2; n < row.size(); ++n) row[n] = d;
    return row;
  }
  for (std::size_t n = 1; n < row.size(); ++n) row[n] = Nat(1) + Nat(n - 1) * d;
  for (Index pass = 1; pass < v; ++pass) {
    Nat running = 0;
    for (auto& entry : row) {
      running += entry;
      entry = running;
    }
  }
  return row;
}

Nat hypersolid(const IndexTriple& t, EvalMethod method) {
  if (method == EvalMethod::kSummation) return compiled_row(t.v, t.d, t.n)[t.n];
  const std::int64_t v = t.v;
  const std::int64_t top = v + static_cast<std::int64_t>(t.n) - 2;
  return binomial(top, v - 1) + Nat(t.d) * binomial(top, v);
}

Nat n_gnomon(const IndexTriple& t) {
  if (t.v == 0 || t.n == 0) throw RangeError("n_gnomon: requires v >= 1 and n >= 1, got " + to_string(t));
  return hypersolid({t.v - 1, t.d, t.n});
}

Nat d_gnomon(const IndexTriple& t) {
  if (t.d == 0 || t.n == 0) throw RangeError("d_gnomon: requires d >= 1 and n >= 1, got " + to_string(t));
  return hypersolid({t.v, 1, t.n - 1});
}

Nat v_gnomon(const IndexTriple& t) {
  if (t.v == 0 || t.n == 0) throw RangeError("v_gnomon: requires v >= 1 and n >= 1, got " + to_string(t));
  return hypersolid({t.v, t.d, t.n - 1});
}

}  // namespace hypersolid
