#include "hexcount/formulas.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hexcount {

namespace {

// Accumulates an exact product and optionally records every term.
class Product {
 public:
  explicit Product(ProductTrace* tr) : tr_(tr) {}

  Product& mul_fact(long n) {
    record("fact(" + std::to_string(n) + ")");
    v_ *= factorial(n);
    return *this;
  }
  Product& div_fact(long n) {
    record("/fact(" + std::to_string(n) + ")");
    v_ /= factorial(n);
    return *this;
  }
  Product& mul_poch(const ExactRational& alpha, long k) {
    record("poch(" + hexcount::to_string(alpha) + "," + std::to_string(k) + ")");
    v_ *= shifted_factorial(alpha, k);
    return *this;
  }
  Product& div_poch(const ExactRational& alpha, long k) {
    record("/poch(" + hexcount::to_string(alpha) + "," + std::to_string(k) + ")");
    v_ /= shifted_factorial(alpha, k);
    return *this;
  }
  Product& mul_int(long n) {
    record("int(" + std::to_string(n) + ")");
    v_ *= n;
    return *this;
  }
  Product& div_int(long n) {
    record("/int(" + std::to_string(n) + ")");
    if (n == 0) throw std::domain_error("formula division by zero");
    v_ /= n;
    return *this;
  }
  Product& mul_ratio(long num, long den) {
    record("ratio(" + std::to_string(num) + "/" + std::to_string(den) + ")");
    if (den == 0) throw std::domain_error("formula division by zero");
    v_ *= make_rational(num, den);
    return *this;
  }
  Product& pow2(long e) {
    record("2^" + std::to_string(e));
    if (e >= 0)
      v_ *= ExactInt(1) << e;
    else
      v_ /= ExactInt(1) << (-e);
    return *this;
  }

  const ExactRational& value() const { return v_; }

  ExactInt integral(const std::string& who) const {
    if (v_.get_den() != 1)
      throw std::domain_error(who + ": product is not an integer (" +
                              hexcount::to_string(v_) + ")");
    return v_.get_num();
  }

 private:
  void record(std::string s) {
    if (tr_ != nullptr) tr_->terms.push_back(std::move(s));
  }
  ExactRational v_{1};
  ProductTrace* tr_;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::domain_error(what);
}

long floor_div(long num, long den) {
  long q = num / den, r = num % den;
  return (r != 0 && ((r < 0) != (den < 0))) ? q - 1 : q;
}
long ceil_div(long num, long den) { return -floor_div(-num, den); }

// half-integer helper: value/2 as a rational
ExactRational half(long twice) { return make_rational(twice, 2); }

// Products over all i >= 0 with index g(i) >= 0. All such indices in the
// appendix formulas decrease in i; `bound` is the stated analytic stopping
// point (i <= m+y covers every factor, a margin is harmless).
void prod_ge0(Product& p, bool divide, long bound,
              const std::function<ExactRational(long)>& f,
              const std::function<long(long)>& g) {
  for (long i = 0; i <= bound; ++i) {
    long gi = g(i);
    if (gi < 0) continue;
    if (divide)
      p.div_poch(f(i), gi);
    else
      p.mul_poch(f(i), gi);
  }
}

}  // namespace

std::string ProductTrace::to_text() const {
  std::ostringstream os;
  for (const std::string& t : terms) os << t << '\n';
  return os.str();
}

std::string formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::macmahon: return "macmahon";
    case FormulaId::proctor: return "proctor";
    case FormulaId::thm11: return "thm11";
    case FormulaId::thm12: return "thm12";
    case FormulaId::prop13: return "prop13";
    case FormulaId::thm14: return "thm14";
    case FormulaId::thm16: return "thm16";
    case FormulaId::thm17: return "thm17";
    case FormulaId::prop18: return "prop18";
    case FormulaId::lemma22: return "lemma22";
    case FormulaId::productP: return "productP";
    case FormulaId::productK: return "productK";
    case FormulaId::conjA1: return "conjA1";
    case FormulaId::conjA2: return "conjA2";
  }
  return "?";
}

std::optional<FormulaId> formula_from_name(const std::string& s) {
  static const std::map<std::string, FormulaId> m = {
      {"macmahon", FormulaId::macmahon}, {"proctor", FormulaId::proctor},
      {"thm11", FormulaId::thm11},       {"thm12", FormulaId::thm12},
      {"prop13", FormulaId::prop13},     {"thm14", FormulaId::thm14},
      {"thm16", FormulaId::thm16},       {"thm17", FormulaId::thm17},
      {"prop18", FormulaId::prop18},     {"lemma22", FormulaId::lemma22},
      {"productP", FormulaId::productP}, {"productK", FormulaId::productK},
      {"conjA1", FormulaId::conjA1},     {"conjA2", FormulaId::conjA2}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

ExactInt macmahon(long a, long b, long c, ProductTrace* tr) {
  require(a >= 0 && b >= 0 && c >= 0, "macmahon: a,b,c >= 0 required");
  Product p(tr);
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= b; ++j)
      for (long k = 1; k <= c; ++k) p.mul_ratio(i + j + k - 1, i + j + k - 2);
  return p.integral("macmahon");
}

ExactInt proctor(long a, long b, long c, ProductTrace* tr) {
  // b = a-1 is admitted as well: the factorization identity (the U^+ piece
  // with its forced row removed) evaluates the product there.
  require(0 <= a && a <= b + 1, "proctor: 0 <= a <= b required");
  require(c >= 0, "proctor: c >= 0 required");
  Product p(tr);
  for (long i = 1; i <= a; ++i) {
    for (long j = 1; j <= b - a + 1; ++j) p.mul_ratio(c + i + j - 1, i + j - 1);
    for (long j = b - a + 2; j <= b - a + i; ++j) p.mul_ratio(2 * c + i + j - 1, i + j - 1);
  }
  return p.integral("proctor");
}

ExactRational product_P(long n, long x, long y, ProductTrace* tr) {
  require(n >= 0, "product_P: n >= 0 required");
  Product p(tr);
  for (long j = 1; j <= n; ++j) {
    p.mul_fact(j - 1)
        .mul_fact(x + y + 2 * j)
        .mul_poch(ExactRational(x - y + 2 * j + 1), j)
        .mul_poch(ExactRational(x + 2 * y + 3 * j + 1), n - j)
        .div_fact(x + n + 2 * j)
        .div_fact(y + n - j);
  }
  return p.value();
}

ExactRational product_K(long n, long x, long y, ProductTrace* tr) {
  require(n >= 1, "product_K: n >= 1 required");
  require(x >= 0 && y >= 0 && x + y > 0, "product_K: x,y >= 0 with x+y > 0 required");
  Product p(tr);
  for (long j = 1; j <= n; ++j) {
    p.mul_fact(j - 1)
        .mul_fact(x + y + j)
        .mul_poch(ExactRational(2 * x + y + 2 * j + 1), j - 1)
        .mul_poch(ExactRational(x + 2 * y + 2 * j + 1), j - 1)
        .div_fact(x + 2 * j - 1)
        .div_fact(y + 2 * j - 1);
  }
  return p.value();
}

ExactInt f_thm11(long a, long b, long c, ProductTrace* tr) {
  require(1 <= b && b <= a && a <= c, "thm11: 1 <= b <= a <= c required");
  Product p(tr);
  p.mul_int((b * (b + 1) / 2) % 2 == 0 ? 1 : -1);
  ExactRational v = p.value() * product_P(b, a - 2 * b - 1, b + c + 1, tr);
  if (v.get_den() != 1 || v < 0)
    throw std::domain_error("thm11: result is not a nonnegative integer");
  return v.get_num();
}

ExactRational f_thm12(long a, long b, long c, ProductTrace* tr) {
  require(1 <= b && b <= a && a <= c, "thm12: 1 <= b <= a <= c required");
  Product p(tr);
  p.pow2(-a - b);
  for (long j = 1; j <= b; ++j) {
    p.mul_fact(j - 1)
        .mul_fact(a + c - b + 2 * j - 1)
        .mul_poch(ExactRational(c - a + 3 * j - 1), b - j)
        .mul_poch(ExactRational(a + 2 * c + 3 * j - 1), b - j + 1)
        .div_fact(b + c + j - 1)
        .div_fact(a - b + 2 * j - 1);
  }
  return p.value();
}

ExactRational f_prop13(long a, long b, long c, ProductTrace* tr) {
  require(1 <= a && a <= b && b <= c, "prop13: 1 <= a <= b <= c required");
  Product p(tr);
  p.pow2(-a);
  for (long j = 1; j <= a; ++j) {
    p.mul_fact(j - 1)
        .mul_int(b + 2 * c - 3 * a + 3 * j)
        .mul_fact(b + c - 2 * a + j)
        .div_fact(c - a + 2 * j - 1)
        .mul_poch(ExactRational(b + 2 * c - 3 * a + 2 * j + 1), j - 1)
        .mul_poch(ExactRational(2 * b + c - 3 * a + 2 * j + 1), j - 1)
        .div_fact(b - a + 2 * j - 1);
  }
  return p.value();
}

ExactRational f_thm14(long a, long b, long c, ProductTrace* tr) {
  require(0 <= a && a <= b, "thm14: 0 <= a <= b required");
  require(c >= 0, "thm14: c >= 0 required");
  Product p(tr);
  p.pow2(-a);
  for (long i = 1; i <= a; ++i) {
    for (long j = 1; j <= b - a; ++j) p.mul_ratio(c + i + j - 1, i + j - 1);
    for (long j = b - a + i; j <= b; ++j) p.mul_ratio(2 * c + i + j - 1, i + j - 1);
  }
  return p.value();
}

ExactInt f_thm16(long a, long b, long c, ProductTrace* tr) {
  require(a >= 1 && c >= 1 && b >= a + c - 1, "thm16: b >= a+c-1 required");
  ExactRational v = product_P(a, b - a, c, tr);
  if (v.get_den() != 1 || v < 0)
    throw std::domain_error("thm16: result is not a nonnegative integer");
  return v.get_num();
}

ExactRational f_thm17(long a, long b, long c, ProductTrace* tr) {
  require(a >= 1 && c >= 1 && b >= a + c - 1, "thm17: b >= a+c-1 required");
  Product p(tr);
  p.pow2(-c - a)
      .mul_poch(ExactRational(b + 2 * c - a + 2), a)
      .div_poch(ExactRational(a + b - c + 2), a);
  for (long j = 1; j <= a; ++j) {
    p.mul_fact(j - 1)
        .mul_fact(b + c - a + 2 * j - 1)
        .mul_poch(ExactRational(b - a - c + 2 * j + 2), j)
        .mul_poch(ExactRational(b + 2 * c - a + 3 * j + 2), a - j)
        .div_fact(b + 2 * j - 1)
        .div_fact(c + a - j);
  }
  return p.value();
}

ExactInt f_prop18(long a, long b, ProductTrace* tr) {
  require(a >= 0 && b >= 0, "prop18: a,b >= 0 required");
  Product p(tr);
  for (long i = 0; i < a; ++i) p.mul_int(b + 1);
  return p.integral("prop18");
}

ExactInt f_lemma22(long n, long m, const std::vector<long>& l, ProductTrace* tr) {
  require(n >= 1, "lemma22: n >= 1 required");
  require(static_cast<long>(l.size()) == n, "lemma22: l must have length n");
  for (size_t i = 1; i < l.size(); ++i)
    require(l[i - 1] > l[i], "lemma22: l must be strictly decreasing");
  Product p(tr);
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = i + 1; j < l.size(); ++j) p.mul_int(l[i] - l[j]);
  for (long i = 1; i <= n; ++i) p.mul_fact(m + i - 1);
  for (long li : l) {
    p.div_fact(li + n - 1);
    p.div_fact(m - li);
  }
  return p.integral("lemma22");
}

ExactRational f_conjA1(long x, long m, long y, ProductTrace* tr) {
  require(m >= 1 && y >= 0 && x >= y, "conjA1: m >= 1, 0 <= y <= x required");
  Product p(tr);
  const long bound = m + y + 4;
  for (long i = 1; i <= m; ++i)
    p.mul_fact(x + i).div_fact(x - i + m + y + 1).div_fact(2 * i - 1);
  for (long i = m + 1; i <= m + y; ++i)
    p.mul_fact(x + 2 * m - i + 1).div_fact(2 * m + 2 * y - 2 * i + 1).div_fact(m + x - y + i - 1);
  p.pow2(m * (m - 1) / 2 + y * (y - 1) / 2);
  for (long i = 1; i <= m - 1; ++i) p.mul_fact(i);
  for (long i = 1; i <= y - 1; ++i) p.mul_fact(i);
  prod_ge0(p, false, bound, [&](long i) -> ExactRational { return ExactRational(x + i) + half(3); },
           [&](long i) { return m - 2 * i - 1; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational { return ExactRational(x - y + 3 * i) + half(5); },
           [&](long i) { return floor_div(3 * y - 9 * i, 2) - 2; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational {
             return ExactRational(x - y + ceil_div(3 * i, 2)) + half(3 * m + 3);
           },
           [&](long i) { return 3 * ceil_div(y, 2) - ceil_div(9 * i, 2) - 2; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational {
             return ExactRational(x - y + floor_div(3 * i, 2) + 2) + half(3 * m);
           },
           [&](long i) { return 3 * floor_div(y, 2) - floor_div(9 * i, 2) - 1; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational { return ExactRational(x + m - floor_div(y, 2) + i + 1); },
           [&](long i) { return 2 * floor_div(y, 2) - m - 2 * i; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational { return ExactRational(x + floor_div(y, 2) + i + 2); },
           [&](long i) { return m - 2 * floor_div(y, 2) - 2 * i - 2; });
  for (long i = 0; i <= y; ++i)
    p.mul_poch(ExactRational(x - y + 3 * i + 1), m + 2 * y - 4 * i);
  for (long i = 0; i <= ceil_div(y, 2) - 1; ++i)
    p.mul_poch(ExactRational(x + m - y + i + 1), 3 * y - m - 4 * i);
  prod_ge0(p, true, bound,
           [&](long i) -> ExactRational { return ExactRational(x + i + 1) + half(m - y); },
           [&](long i) { return y - 2 * i; });
  prod_ge0(p, true, bound,
           [&](long i) -> ExactRational { return ExactRational(x + i) + half(m - y + 3); },
           [&](long i) { return y - 2 * i - 1; });
  for (long i = 0; i <= y; ++i) p.mul_poch(ExactRational(x + i + 2), 2 * m - 2 * i - 1);
  p.div_poch(ExactRational(x + y + 2), m - y - 1);
  p.div_poch(ExactRational(m + x - y + 1), m + y);
  return p.value();
}

ExactRational f_conjA2(long x, long m, long y, ProductTrace* tr) {
  require(m >= 1 && y >= 0 && x >= y, "conjA2: m >= 1, 0 <= y <= x required");
  Product p(tr);
  const long bound = m + y + 4;
  for (long i = 1; i <= m; ++i)
    p.mul_fact(x + i - 1).div_fact(x - i + m + y + 1).div_fact(2 * i - 1);
  for (long i = m + 1; i <= m + y; ++i)
    p.mul_fact(x + 2 * m - i).div_fact(2 * m + 2 * y - 2 * i + 1).div_fact(m + x - y + i - 1);
  p.pow2(m * (m - 1) / 2 + y * (y - 1) / 2);
  for (long i = 1; i <= m - 1; ++i) p.mul_fact(i);
  for (long i = 1; i <= y - 1; ++i) p.mul_fact(i);
  prod_ge0(p, false, bound, [&](long i) -> ExactRational { return ExactRational(x + i) + half(3); },
           [&](long i) { return m - 2 * i - 1; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational { return ExactRational(x - y + 3 * i + 3) + half(1); },
           [&](long i) { return ceil_div(3 * y - 9 * i, 2) - 4; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational {
             return ExactRational(x - y + floor_div(3 * i, 2)) + half(3 * m + 3);
           },
           [&](long i) { return 3 * ceil_div(y, 2) - floor_div(9 * i, 2) - 1; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational {
             return ExactRational(x - y + ceil_div(3 * i, 2) + 1) + half(3 * m);
           },
           [&](long i) { return 3 * floor_div(y, 2) - ceil_div(9 * i, 2) + 1; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational { return ExactRational(x + m - floor_div(y, 2) + i + 1); },
           [&](long i) { return 2 * floor_div(y, 2) - m - 2 * i; });
  prod_ge0(p, false, bound,
           [&](long i) -> ExactRational { return ExactRational(x + floor_div(y, 2) + i + 2); },
           [&](long i) { return m - 2 * floor_div(y, 2) - 2 * i - 2; });
  p.mul_poch(ExactRational(x - y) + half(1), floor_div(m, 2) + 2 * y);
  p.mul_poch(ExactRational(x + m - y), y + 1);
  for (long i = 0; i <= y; ++i) p.mul_poch(ExactRational(x + i + 1), 2 * m - 2 * i);
  p.div_poch(ExactRational(x) + half(m - y + 1), floor_div(3 * y, 2));
  p.div_poch(ExactRational(x + 1) + half(3 * m - y), y + 1);
  p.div_poch(ExactRational(x + 1) + half(m + y), ceil_div(y - 2, 2));
  for (long i = 0; i <= y; ++i)
    p.mul_poch(ExactRational(x - y + 3 * i + 1), m + 2 * y - 4 * i);
  for (long i = 0; i <= ceil_div(y, 2) - 1; ++i)
    p.mul_poch(ExactRational(x + m - y + i + 1), 3 * y - m - 4 * i);
  p.div_poch(ExactRational(m + x - y), m + y + 1);
  p.div_poch(ExactRational(x + y + ceil_div(m, 2)), floor_div(m, 2) - y + 1);
  for (long i = 0; i <= ceil_div(y, 2) - 1; ++i) p.div_int(x - y + 1 + 3 * i);
  prod_ge0(p, true, bound,
           [&](long i) -> ExactRational { return ExactRational(x + i + 1) + half(m - y); },
           [&](long i) { return y - 2 * i; });
  prod_ge0(p, true, bound,
           [&](long i) -> ExactRational { return ExactRational(x + i) + half(m - y + 3); },
           [&](long i) { return y - 2 * i - 1; });
  return p.value();
}

}  // namespace hexcount
