#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersolid/nat.hpp"
#include "hypersolid/sums.hpp"

namespace hypersolid::cli {

// Grid bounds for the verification sweeps. Unset bounds fall back to each
// suite's own default.
struct VerifyBounds {
  std::optional<Index> vmax;  // oracle, gnomons: 8; corollaries: 8
  std::optional<Index> dmax;  // oracle, gnomons: 10; corollaries: 8
  std::optional<Index> nmax;  // 12
  std::optional<Index> cmax;  // corollaries: 24
  std::optional<Index> kmax;  // diagonal sequences: 30
  std::optional<Index> smax;  // theorems: 40
  std::optional<Index> mmax;  // lemmas: 30
};

struct VerifyFailure {
  std::string key;
  std::string expected;
  std::string actual;
};

struct VerifyOutcome {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<VerifyFailure> failures;
};

// oracle, gnomons, corollaries, theorems, lemmas.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Failures are reported in case
// order whatever the job count.
std::vector<VerifyOutcome> run_verify(std::string_view suite, const VerifyBounds& bounds, unsigned jobs);

// Process status for finished work: kExitFailure when any suite reported a
// failure, or when a closed form exists and disagrees with enumeration.
int exit_code(const std::vector<VerifyOutcome>& outcomes);
int exit_code(const SumReport& report);

}  // namespace hypersolid::cli
