#include "hexcount/lgv.hpp"

#include <stdexcept>
#include <string>

namespace hexcount {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::domain_error(what);
}

ExactRational half_binom_pair(long top, long k_whole, long k_half) {
  // binom(top, k_whole) + (1/2) binom(top, k_half)
  ExactRational r(binomial(top, k_whole));
  r += ExactRational(binomial(top, k_half)) / 2;
  return r;
}

}  // namespace

ExactInt paths_free(LatticePoint u, LatticePoint v) {
  long east = v.x - u.x, north = v.y - u.y;
  if (east < 0 || north < 0) return 0;
  return binomial(east + north, north);
}

ExactInt paths_above_barrier(LatticePoint u, LatticePoint v, long offset) {
  // an endpoint on or below the barrier admits no avoiding path
  if (u.y <= u.x + offset || v.y <= v.x + offset) return 0;
  // reflect the start across y = x + offset
  LatticePoint ru{u.y - offset, u.x + offset};
  return paths_free(u, v) - paths_free(ru, v);
}

ExactMatrix matrix_K(int n, long x, long y) {
  require(n >= 1, "matrix_K: n >= 1 required");
  require(x >= 0 && y >= 0 && x + y > 0, "matrix_K: x,y >= 0 with x+y > 0 required");
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      long p = x + 2 * i - j, q = y + 2 * j - i;
      if (p < 0 || q < 0)
        m.at(i, j) = 0;
      else
        m.at(i, j) = make_rational(factorial(x + y + i + j - 1),
                                   factorial(p) * factorial(q));
    }
  return m;
}

ExactMatrix matrix_K_general(int n, long x, long y) {
  require(n >= 1, "matrix_K_general: n >= 1 required");
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      long d = x + 2 * i - j;
      require(d != 0, "matrix_K_general: entry denominator x+2i-j vanishes");
      m.at(i, j) = make_rational(binomial(x + y + i + j - 1, y + 2 * j - i), d);
    }
  return m;
}

ExactMatrix matrix_A(int n, long x, long y) {
  // The entries are binomials, total on the integers; negative x occurs in
  // A_b(a-2b-1, b+c+1) whenever a < 2b+1. Only the evaluation det = P_n(x,y)
  // is restricted to nonnegative x,y.
  require(n >= 1, "matrix_A: n >= 1 required");
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.at(i, j) = ExactRational(binomial(x + y + j, x - i + 2 * j) -
                                 binomial(x + y + j, x + i + 2 * j));
  return m;
}

ExactMatrix matrix_hd(long a, long b, long c) {
  require(b <= a && a <= c, "matrix_hd: b <= a <= c required");
  require(b >= 1, "matrix_hd: b >= 1 required");
  ExactMatrix m(static_cast<int>(b));
  for (long i = 1; i <= b; ++i)
    for (long j = 1; j <= b; ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          ExactRational(binomial(a + c - j + 1, a - 2 * j + i + 1) -
                        binomial(a + c - j + 1, a - 2 * j - i + 1));
  return m;
}

ExactMatrix matrix_hd_weighted(long a, long b, long c) {
  require(b <= a && a <= c, "matrix_hd_weighted: b <= a <= c required");
  require(b >= 1, "matrix_hd_weighted: b >= 1 required");
  ExactMatrix m(static_cast<int>(b));
  for (long i = 1; i <= b; ++i)
    for (long j = 1; j <= b; ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = half_binom_pair(
          a + c + 2 * i - j - 1, a - 2 * j + i + 1, a - 2 * j + i);
  return m;
}

ExactRational hd_weighted_scale(long a, long, long) {
  return make_rational(1, ExactInt(1) << a);
}

ExactMatrix matrix_prop13(long a, long b, long c) {
  require(a <= b && b <= c, "matrix_prop13: a <= b <= c required");
  require(a >= 1, "matrix_prop13: a >= 1 required");
  ExactMatrix m(static_cast<int>(a));
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= a; ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          half_binom_pair(b + c - 2 * a + i + j - 1, c - a + 2 * i - j - 1,
                          c - a + 2 * i - j);
  return m;
}

ExactMatrix matrix_ha_weighted(long a, long b, long c) {
  require(b >= a + c - 1, "matrix_ha_weighted: b >= a+c-1 required");
  require(a >= 1, "matrix_ha_weighted: a >= 1 required");
  // Last-step-split weighted path counts on the rotated ensemble with 2i-1
  // vertical steps prepended; the marked northwestern positions correspond
  // to a vertical last step, so that binomial carries the factor 1/2.
  ExactMatrix m(static_cast<int>(a));
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= a; ++j) {
      long top = b - a + c + 2 * i + j - 2;
      ExactRational v(binomial(top, c + i - j - 1));
      v += ExactRational(binomial(top, c + i - j)) / 2;
      m.at(static_cast<int>(i), static_cast<int>(j)) = v;
    }
  return m;
}

ExactRational ha_weighted_scale(long, long, long c) {
  return make_rational(1, ExactInt(1) << c);
}

ExactMatrix matrix_R(int n, long m, const std::vector<long>& l) {
  require(n >= 1, "matrix_R: n >= 1 required");
  require(static_cast<int>(l.size()) == n, "matrix_R: l must have length n");
  require(l[0] >= 0 && l[0] <= m, "matrix_R: 0 <= l_1 <= m required");
  for (size_t i = 1; i < l.size(); ++i)
    require(l[i - 1] > l[i], "matrix_R: l must be strictly decreasing");
  ExactMatrix mat(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      mat.at(i, j) = ExactRational(binomial(m, l[j - 1] + i - 1));
  return mat;
}

ExactMatrix matrix_hn(long m, long y, long x) {
  require(m >= 1 && y >= 0 && x >= y, "matrix_hn: m >= 1, 0 <= y <= x required");
  const long n = m + y;
  ExactMatrix mat(static_cast<int>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      ExactInt v = i <= m ? binomial(x + i, x - i + j)
                          : binomial(x + 2 * m - i + 1, m + y - 2 * i + j + 1);
      mat.at(static_cast<int>(i), static_cast<int>(j)) = ExactRational(v);
    }
  return mat;
}

ExactMatrix matrix_hn_weighted(long m, long y, long x) {
  require(m >= 1 && y >= 0 && x >= y, "matrix_hn_weighted: m >= 1, 0 <= y <= x required");
  const long n = m + y;
  ExactMatrix mat(static_cast<int>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      ExactRational v(0);
      if (i <= m) {
        long p = x - i + j, q = 2 * i - j;
        if (p >= 0 && q >= 0) {
          // (x+i-1)! (x + j/2) / ((x-i+j)! (2i-j)!)
          v = make_rational(factorial(x + i - 1), factorial(p) * factorial(q));
          v *= ExactRational(2 * x + j, 2);
        }
      } else {
        long p = m + y - 2 * i + j + 1, q = m + x - y + i - j;
        if (p >= 0 && q >= 0) {
          // (x+2m-i)! (3m/2 + x - y/2 - j/2 + 1/2) / (p! q!)
          v = make_rational(factorial(x + 2 * m - i), factorial(p) * factorial(q));
          v *= ExactRational(3 * m + 2 * x - y - j + 1, 2);
        }
      }
      mat.at(static_cast<int>(i), static_cast<int>(j)) = v;
    }
  return mat;
}

ExactRational hn_weighted_scale(long, long, long) { return ExactRational(1); }

}  // namespace hexcount
