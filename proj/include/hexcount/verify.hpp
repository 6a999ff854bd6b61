#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexcount {

// Verification sweeps: each suite checks one identity over a parameter grid,
// comparing every applicable route (formula, LGV determinant, oracle).
enum class Suite {
  thm11,
  thm12,
  prop13,
  thm14,
  thm16,
  thm17,
  prop18,
  lemma22,
  det_K,
  det_A,
  conjA1,
  conjA2,
  factorization_2_5,
  mirror_hd,
};

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& s);
std::vector<Suite> all_suites();

struct GridRange {
  long lo = 0;
  long hi = 0;
};

struct Grid {
  std::map<std::string, GridRange> ranges;  // inclusive, cartesian product
  long max_size = -1;                       // conjecture suites: bound on m+y
  unsigned seed = 1;                        // lemma22 random lists
  int samples = 3;                          // lemma22 lists per grid point
};

enum class PointStatus { pass, fail, skip };

struct PointOutcome {
  std::string point;  // e.g. "(a,b,c)=(2,1,3)"
  PointStatus status = PointStatus::skip;
  std::string detail;  // on failure: every computed route's value
};

struct VerifyReport {
  std::string suite;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::optional<PointOutcome> first_counterexample;
  std::vector<PointOutcome> outcomes;  // grid order
  bool ok() const { return failed == 0; }
};

// jobs <= 1 runs serially; grid points are independent and pure, so parallel
// runs aggregate into the same (grid-ordered) report.
VerifyReport run_suite(Suite s, const Grid& grid, int jobs = 1);

}  // namespace hexcount
