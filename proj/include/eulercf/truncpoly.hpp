#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eulercf/rational.hpp"

namespace eulercf {

// Multivariate polynomial with exact rational coefficients, truncated at a
// total-degree cap. Monomials above the cap are discarded on every operation,
// so a TruncPoly represents a residue mod total degree > cap. Canonical form:
// no stored zero coefficients, no stored monomial above the cap.
class TruncPoly {
 public:
  using Exponents = std::vector<unsigned>;  // parallel to vars()

  TruncPoly(std::vector<std::string> vars, unsigned degree_cap);

  static TruncPoly constant(std::vector<std::string> vars, unsigned degree_cap,
                            const Rational& value);
  static TruncPoly variable(std::vector<std::string> vars, unsigned degree_cap,
                            std::size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  unsigned degree_cap() const { return degree_cap_; }
  const std::map<Exponents, Rational>& coefficients() const { return coeffs_; }

  Rational coeff(const Exponents& exponents) const;  // 0 when absent
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const Exponents& exponents, const Rational& value);

  // Binary operations require identical variable lists; the result's cap is
  // the smaller of the operands' caps. Equality compares vars and
  // coefficients only (two residues with different caps can still be equal).
  TruncPoly operator+(const TruncPoly& rhs) const;
  TruncPoly operator-(const TruncPoly& rhs) const;
  TruncPoly operator*(const TruncPoly& rhs) const;
  TruncPoly operator*(const Rational& scalar) const;
  TruncPoly operator-() const;
  bool operator==(const TruncPoly& rhs) const;
  bool operator!=(const TruncPoly& rhs) const { return !(*this == rhs); }

  // Copy with monomials above `degree_cap` dropped.
  TruncPoly truncated(unsigned degree_cap) const;

  Rational eval(const std::vector<Rational>& values) const;

  // Deterministic graded-lex rendering, e.g. "1 - 2*a*b + 1/3*b^2".
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  unsigned degree_cap_;
  std::map<Exponents, Rational> coeffs_;
};

// Product truncated at an explicit total-degree cap.
TruncPoly poly_mul_trunc(const TruncPoly& p, const TruncPoly& q, unsigned degree_cap);

// Multiplicative inverse of p mod total degree > degree_cap; requires a
// nonzero constant term.
TruncPoly poly_inverse_trunc(const TruncPoly& p, unsigned degree_cap);

}  // namespace eulercf
