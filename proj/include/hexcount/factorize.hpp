#pragma once

#include "hexcount/exact.hpp"

#include <vector>

namespace hexcount {

struct PrimePower {
  ExactInt prime;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Complete factorization of n >= 1 (trial division, then Brent's variant of
// Pollard rho on the remaining cofactors). Deterministic. Primes ascending.
std::vector<PrimePower> factorize(const ExactInt& n);

// "2^3*13" style; "1" for n = 1.
std::string factorization_string(const std::vector<PrimePower>& f);

}  // namespace hexcount
