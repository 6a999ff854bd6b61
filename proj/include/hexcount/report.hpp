#pragma once

#include "hexcount/exact.hpp"
#include "hexcount/regions.hpp"

#include <string>
#include <vector>

namespace hexcount {

enum class CountMethod { oracle, lgv, formula };
enum class WeightedMode { plain, star, substar, both };

std::string method_name(CountMethod m);
std::string weighted_name(WeightedMode w);

struct CountReport {
  std::string region;          // kind name
  std::vector<long> params;
  std::string method;          // oracle|lgv|formula
  std::string weighted;        // plain|star|substar|both
  std::string value;           // decimal integer or "p/q"
  long elapsed_ms = 0;

  bool operator==(const CountReport&) const = default;

  // Single-line JSON with fixed key order; parse/serialize round-trips
  // byte-identically.
  std::string to_json() const;
  static CountReport from_json(const std::string& json);
};

// Exact count of `spec` by the requested method/weighting; throws
// std::domain_error when the method does not cover the spec.
ExactRational compute_count(const RegionSpec& spec, CountMethod method, WeightedMode mode);

CountReport run_count(const RegionSpec& spec, CountMethod method, WeightedMode mode);

}  // namespace hexcount
