#pragma once

#include "hexcount/exact.hpp"

#include <vector>

namespace hexcount {

struct LatticePoint {
  long x = 0;
  long y = 0;
  bool operator==(const LatticePoint&) const = default;
};

// Number of east/north lattice paths from u to v (0 if unreachable).
ExactInt paths_free(LatticePoint u, LatticePoint v);

// Paths from u to v never touching the line y = x + offset, by Andre's
// reflection principle. Throws if u or v lies on or below the barrier.
ExactInt paths_above_barrier(LatticePoint u, LatticePoint v, long offset);

// K_n(x,y), entry (i,j) = (x+y+i+j-1)! / ((x+2i-j)! (y+2j-i)!), an entry
// being 0 whenever a lower factorial argument is negative.
ExactMatrix matrix_K(int n, long x, long y);

// The same matrix continued to arbitrary integer x,y via the binomial form
// (1/(x+2i-j)) * binom(x+y+i+j-1, y+2j-i); used by the determinant-identity
// checks where x is negative. Throws when some x+2i-j = 0.
ExactMatrix matrix_K_general(int n, long x, long y);

// A_n(x,y), entry (i,j) = binom(x+y+j, x-i+2j) - binom(x+y+j, x+i+2j).
ExactMatrix matrix_A(int n, long x, long y);

// Plain count of H_d(a,b,c) for b <= a <= c:
// entry (i,j) = binom(a+c-j+1, a-2j+i+1) - binom(a+c-j+1, a-2j-i+1); det = L.
ExactMatrix matrix_hd(long a, long b, long c);

// Weighted count of H_d(a,b,c), b <= a <= c: both-cuts weighting; det times
// hd_weighted_scale = L*_*.
ExactMatrix matrix_hd_weighted(long a, long b, long c);
ExactRational hd_weighted_scale(long a, long b, long c);  // 2^(-a)

// Northwestern-cut weighting of H_d(a,b,c) for a <= b <= c; det = L*.
ExactMatrix matrix_prop13(long a, long b, long c);

// Both-cuts weighting of H_a(a,b,c) for b >= a+c-1; det times
// ha_weighted_scale = L*_*.
ExactMatrix matrix_ha_weighted(long a, long b, long c);
ExactRational ha_weighted_scale(long a, long b, long c);  // 2^(-c)

// Dented-hexagon matrix, entry (i,j) = binom(m, l_j + i - 1); det = L(R(n,m,l)).
ExactMatrix matrix_R(int n, long m, const std::vector<long>& l);

// Pentagon-with-notch H_n(x, m+y, x+m-y). Plain: det = L. Weighted: det times
// hn_weighted_scale = L*_* (the scale is exactly 1; kept explicit).
ExactMatrix matrix_hn(long m, long y, long x);
ExactMatrix matrix_hn_weighted(long m, long y, long x);
ExactRational hn_weighted_scale(long m, long y, long x);

}  // namespace hexcount
