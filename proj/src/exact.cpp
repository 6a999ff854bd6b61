#include "hexcount/exact.hpp"

#include <sstream>

namespace hexcount {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

ExactInt factorial(long n) {
  if (n < 0)
    throw std::domain_error("factorial of negative integer " + std::to_string(n));
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt binomial(long n, long k) {
  if (k < 0) return 0;
  ExactInt r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
  }
  // binom(n,k) = (-1)^k binom(k-n-1, k) for n < 0
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1),
               static_cast<unsigned long>(k));
  return (k % 2 != 0) ? ExactInt(-r) : r;
}

ExactRational shifted_factorial(const ExactRational& alpha, long k) {
  ExactRational r(1);
  if (k >= 0) {
    for (long i = 0; i < k; ++i) r *= alpha + i;
    return r;
  }
  for (long i = 1; i <= -k; ++i) {
    ExactRational f = alpha - i;
    if (f == 0)
      throw std::domain_error("shifted_factorial(" + to_string(alpha) + ", " +
                              std::to_string(k) + "): factor alpha-" +
                              std::to_string(i) + " vanishes");
    r *= f;
  }
  return 1 / r;
}

ExactMatrix ExactMatrix::reversed_columns() const {
  ExactMatrix m(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m.at(i, j) = at(i, n_ + 1 - j);
  return m;
}

ExactMatrix ExactMatrix::swapped_rows(int r1, int r2) const {
  ExactMatrix m(*this);
  for (int j = 1; j <= n_; ++j) std::swap(m.at(r1, j), m.at(r2, j));
  return m;
}

std::string ExactMatrix::to_text() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) os << ' ';
      os << to_string(at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

ExactMatrix ExactMatrix::from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::vector<ExactRational>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<ExactRational> row;
    std::string tok;
    while (ls >> tok) row.push_back(rational_from_string(tok));
    rows.push_back(std::move(row));
  }
  ExactMatrix m(static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("matrix text is not square");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = rows[i][j];
  }
  return m;
}

ExactRational det_exact(const ExactMatrix& m) {
  const int n = m.order();
  if (n == 0) return ExactRational(1);

  // Clear denominators row by row so elimination runs over integers.
  std::vector<std::vector<ExactInt>> a(n, std::vector<ExactInt>(n));
  ExactRational scale(1);  // det(a) = scale * det(m)
  for (int i = 0; i < n; ++i) {
    ExactInt l(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i + 1, j + 1).get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      ExactRational v = m.at(i + 1, j + 1) * l;
      a[i][j] = v.get_num();  // denominator is 1 by construction
    }
    scale *= l;
  }

  // Bareiss: every division below is exact.
  int sign = 1;
  ExactInt prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return ExactRational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        ExactInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  ExactRational d(sign > 0 ? a[n - 1][n - 1] : ExactInt(-a[n - 1][n - 1]));
  d /= scale;
  return d;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

ExactRational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return ExactRational(ExactInt(s));
  return make_rational(ExactInt(s.substr(0, slash)), ExactInt(s.substr(slash + 1)));
}

}  // namespace hexcount
