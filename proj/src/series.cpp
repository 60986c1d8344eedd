#include "eulercf/series.hpp"

namespace eulercf {

Rational letter(unsigned j, const SeriesParams& p) {
  return p.a + Rational(j) * p.b;
}

Rational term(unsigned k, const SeriesParams& p) {
  Rational prod(1);
  for (unsigned j = 0; j < k; ++j) prod *= letter(j, p);
  return (k % 2 == 0) ? prod : -prod;
}

const std::vector<std::string>& formal_vars_ab() {
  static const std::vector<std::string> vars{"a", "b"};
  return vars;
}

TruncPoly formal_const(const Rational& value, unsigned degree_cap) {
  return TruncPoly::constant(formal_vars_ab(), degree_cap, value);
}

TruncPoly formal_a(unsigned degree_cap) {
  return TruncPoly::variable(formal_vars_ab(), degree_cap, 0);
}

TruncPoly formal_b(unsigned degree_cap) {
  return TruncPoly::variable(formal_vars_ab(), degree_cap, 1);
}

BinomialTailSeries gtail_formal(unsigned r, unsigned s, unsigned count) {
  BinomialTailSeries out;
  out.r = r;
  out.s = s;
  const unsigned cap = count > 0 ? count - 1 : 0;
  TruncPoly prod = formal_const(Rational(1), cap);  // prod_{j<k} (a + (s+j) b)
  for (unsigned k = 0; k < count; ++k) {
    Rational weight(binomial(static_cast<unsigned long>(k) + r, r));
    if (k % 2 == 1) weight = -weight;
    out.terms.push_back(prod * weight);
    prod = prod * (formal_a(cap) + formal_b(cap) * Rational(s + k));
  }
  return out;
}

std::vector<Rational> gtail_values(unsigned r, unsigned s, unsigned count,
                                   const SeriesParams& p) {
  std::vector<Rational> out;
  out.reserve(count);
  Rational prod(1);
  for (unsigned k = 0; k < count; ++k) {
    Rational weight(binomial(static_cast<unsigned long>(k) + r, r));
    if (k % 2 == 1) weight = -weight;
    out.push_back(prod * weight);
    prod *= p.a + Rational(s + k) * p.b;
  }
  return out;
}

}  // namespace eulercf
