#include "hexcount/factorize.hpp"

#include <map>
#include <stdexcept>

namespace hexcount {

namespace {

bool is_prime(const ExactInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Brent's cycle-finding variant of Pollard rho; deterministic constant seeds.
ExactInt pollard_brent(const ExactInt& n) {
  if (n % 2 == 0) return 2;
  for (long c = 1;; ++c) {
    ExactInt x(2), y(2), d(1), ys, q(1);
    long r = 1;
    const long m = 128;
    while (d == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && d == 1) {
        ys = y;
        long lim = std::min(m, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          ExactInt diff = x - y;
          mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
          q = q * diff % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {  // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        ExactInt diff = x - ys;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    // rare: retry with the next polynomial constant
  }
}

void factor_into(const ExactInt& n, std::map<ExactInt, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  ExactInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(ExactInt(n / d), out);
}

}  // namespace

std::vector<PrimePower> factorize(const ExactInt& n) {
  if (n < 1) throw std::domain_error("factorize expects n >= 1");
  std::map<ExactInt, int> acc;
  ExactInt rest = n;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (rest % p == 0) {
      acc[ExactInt(p)]++;
      rest /= p;
    }
  }
  for (long p = 41; p <= 100000 && rest > 1; p += 2) {
    if (ExactInt(p) * p > rest) break;
    while (rest % p == 0) {
      acc[ExactInt(p)]++;
      rest /= p;
    }
  }
  if (rest > 1) factor_into(rest, acc);
  std::vector<PrimePower> out;
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

std::string factorization_string(const std::vector<PrimePower>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += "*";
    s += to_string(f[i].prime);
    if (f[i].exponent > 1) s += "^" + std::to_string(f[i].exponent);
  }
  return s;
}

}  // namespace hexcount
