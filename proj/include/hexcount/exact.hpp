#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hexcount {

// All counts and weights are exact. ExactInt/ExactRational are backed by GMP;
// rationals are kept canonical (gcd(|num|,den)=1, den>0) by construction.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

// Canonical rational from a (possibly uncanonical) num/den pair.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

// n! for n >= 0; negative n is a caller bug and throws std::domain_error.
ExactInt factorial(long n);

// Binomial coefficient as a total function on integers: 0 for k < 0, the
// usual value for n >= 0, and the polynomial extension
// (-1)^k * binomial(k-n-1, k) for n < 0.
ExactInt binomial(long n, long k);

// Shifted factorial (Pochhammer) (alpha)_k with the negative-index convention
//   (alpha)_k = alpha(alpha+1)...(alpha+k-1)        k > 0
//   (alpha)_0 = 1
//   (alpha)_k = 1/((alpha-1)(alpha-2)...(alpha+k))  k < 0
// A zero factor in the k<0 denominator throws std::domain_error naming it.
ExactRational shifted_factorial(const ExactRational& alpha, long k);

class ExactMatrix {
 public:
  ExactMatrix() : n_(0) {}
  explicit ExactMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  int order() const { return n_; }
  // 1-based accessors, matching the matrix builders' index conventions.
  ExactRational& at(int i, int j) { return e_[idx(i, j)]; }
  const ExactRational& at(int i, int j) const { return e_[idx(i, j)]; }

  bool operator==(const ExactMatrix&) const = default;

  ExactMatrix reversed_columns() const;
  ExactMatrix swapped_rows(int r1, int r2) const;

  // Text grid of "p/q" tokens, one row per line.
  std::string to_text() const;
  static ExactMatrix from_text(const std::string& text);

 private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("ExactMatrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") of order " + std::to_string(n_));
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<ExactRational> e_;
};

// Exact determinant via fraction-free Bareiss elimination on the
// denominator-cleared integer matrix. No floating point anywhere.
ExactRational det_exact(const ExactMatrix& m);

// Decimal string for integers, "p/q" (or "p" when q=1) for rationals.
std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& v);
ExactRational rational_from_string(const std::string& s);

}  // namespace hexcount
