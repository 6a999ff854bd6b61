#pragma once

#include "hexcount/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hexcount {

// Identifiers for the closed-form products. Each maps to one equation.
enum class FormulaId {
  macmahon,
  proctor,
  thm11,
  thm12,
  prop13,
  thm14,
  thm16,
  thm17,
  prop18,
  lemma22,
  productP,
  productK,
  conjA1,
  conjA2,
};

std::string formula_name(FormulaId id);
std::optional<FormulaId> formula_from_name(const std::string& s);

// When supplied, evaluators append one line per multiplicative term
// ("fact(7)", "poch(5/2,3)", "2^4", ...); golden tests freeze these lists so
// the transcription is reviewed once and then pinned.
struct ProductTrace {
  std::vector<std::string> terms;
  std::string to_text() const;
};

ExactInt macmahon(long a, long b, long c, ProductTrace* tr = nullptr);
ExactInt proctor(long a, long b, long c, ProductTrace* tr = nullptr);

// P_n(x,y): the product giving det A_n(x,y).
ExactRational product_P(long n, long x, long y, ProductTrace* tr = nullptr);
// The product giving det K_n(x,y).
ExactRational product_K(long n, long x, long y, ProductTrace* tr = nullptr);

ExactInt f_thm11(long a, long b, long c, ProductTrace* tr = nullptr);       // L(hd), b<=a<=c
ExactRational f_thm12(long a, long b, long c, ProductTrace* tr = nullptr);  // L*_*(hd)
ExactRational f_prop13(long a, long b, long c, ProductTrace* tr = nullptr); // L*(hd), a<=b<=c
ExactRational f_thm14(long a, long b, long c, ProductTrace* tr = nullptr);  // L*(h1), a<=b
ExactInt f_thm16(long a, long b, long c, ProductTrace* tr = nullptr);       // L(ha), b>=a+c-1
ExactRational f_thm17(long a, long b, long c, ProductTrace* tr = nullptr);  // L*_*(ha)
ExactInt f_prop18(long a, long b, ProductTrace* tr = nullptr);              // L(ho(a,b,a))
ExactInt f_lemma22(long n, long m, const std::vector<long>& l,
                   ProductTrace* tr = nullptr);                             // L(R(n,m,l))
ExactRational f_conjA1(long x, long m, long y, ProductTrace* tr = nullptr); // L(hn)
ExactRational f_conjA2(long x, long m, long y, ProductTrace* tr = nullptr); // L*_*(hn)

}  // namespace hexcount
