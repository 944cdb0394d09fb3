#pragma once

// Verification harness: named suites of identity checks over fixed parameter
// grids.  Jobs within a suite run concurrently; reports come back in the
// suite's own parameter order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloknot/knot_spec.hpp"
#include "cycloknot/report.hpp"

namespace cycloknot {

struct SuiteOptions {
  bool quick = false;                 // smaller grids
  std::optional<KnotSpec> knot;       // keep only jobs about this knot
  std::optional<std::int64_t> p;      // keep only jobs at this p
  bool exploratory = false;           // add report-only checks outside the proved range
  unsigned max_parallel = 0;          // 0: hardware concurrency
};

struct SuiteRun {
  std::string suite;
  std::vector<InvariantReport> reports;
  /// Every non-exploratory report passed.
  bool pass() const;
};

/// thm1-trunc, thm2, thm3, thm4-vs-conj, wrt-consistency, torus-T, appendix-t25, qtools-identities.
const std::vector<std::string>& suite_names();

/// One suite, or every suite for "all".  Unknown names throw std::invalid_argument.
std::vector<SuiteRun> run_suites(const std::string& name, const SuiteOptions& options);

}  // namespace cycloknot
