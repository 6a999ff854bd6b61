#pragma once

#include <cstdint>
#include <vector>

#include "hexcount/exact.hpp"
#include "hexcount/regions.hpp"

namespace hexcount {

struct Tiling {
  std::vector<LozengePos> lozenges;  // sorted; a perfect cover of the region
  bool uses(const LozengePos& p) const;
};

// Exact number of lozenge tilings. 0 for untilable regions, 1 for the empty
// region. Throws OracleSizeError when the frontier exceeds the budget.
ExactInt count_tilings(const Region& r);

// Sum over tilings T of (1/2)^(number of marks occupied by T).
ExactRational count_weighted(const Region& r, const MarkSet& marks);

// Deterministic enumeration in lexicographic order of the sorted lozenge
// list; stops after `limit` tilings.
std::vector<Tiling> list_tilings(const Region& r, std::uint64_t limit);

// Frontier-width budget: defaults to 24 boundary segments per lattice line,
// overridden by the HEXCOUNT_ORACLE_LIMIT environment variable.
int oracle_limit();

struct OracleSizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hexcount
