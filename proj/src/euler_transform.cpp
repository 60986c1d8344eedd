#include "eulercf/euler_transform.hpp"

#include "eulercf/errors.hpp"
#include "eulercf/truncpoly.hpp"

namespace eulercf {

Rational euler_cf_coefficient(const SeriesParams& p, unsigned k) {
  if (k == 0) throw PreconditionError("coefficient index is 1-based");
  const unsigned i = k / 2;
  if (k % 2 == 0) return Rational(i) * p.b;
  return p.a + Rational(i) * p.b;
}

TruncPoly euler_cf_coefficient_formal(unsigned k, unsigned degree_cap) {
  if (k == 0) throw PreconditionError("coefficient index is 1-based");
  const unsigned i = k / 2;
  TruncPoly ib = formal_b(degree_cap) * Rational(i);
  if (k % 2 == 0) return ib;
  return formal_a(degree_cap) + ib;
}

SeriesParams params_from_mnx(const Rational& m, const Rational& n, const Rational& x) {
  if (x.is_zero()) throw PreconditionError("x must be nonzero");
  return SeriesParams{m * x, n * x};
}

EulerCF build_cf(const SeriesParams& p) {
  auto rule = [p](unsigned k) -> CFPair {
    if (k == 1) return {Rational(1), Rational(1)};
    return {euler_cf_coefficient(p, k - 1), Rational(1)};
  };
  return EulerCF{p, ContinuedFraction(Rational(0), rule)};
}

ContinuedFraction build_reciprocal_cf(const SeriesParams& p) {
  auto rule = [p](unsigned k) -> CFPair {
    return {euler_cf_coefficient(p, k), Rational(1)};
  };
  return ContinuedFraction(Rational(1), rule);
}

ContinuedFraction build_contracted(const SeriesParams& p) {
  auto rule = [p](unsigned k) -> CFPair {
    Rational kb = Rational(k) * p.b;
    Rational num = -(kb * (p.a + Rational(k - 1) * p.b));
    Rational den = Rational(1) + p.a + Rational(2) * kb;
    return {num, den};
  };
  return ContinuedFraction(Rational(1) + p.a, rule);
}

unsigned correspondence_order(const Rational& m, const Rational& n, unsigned depth,
                              unsigned degree_cap) {
  if (depth < 1) throw PreconditionError("correspondence needs depth >= 1");
  const unsigned cap = degree_cap > 0 ? degree_cap : depth + 2;
  const std::vector<std::string> vars{"x"};
  const TruncPoly one = TruncPoly::constant(vars, cap, Rational(1));
  const TruncPoly x = TruncPoly::variable(vars, cap, 0);

  // Convergent of the fraction truncated at `depth` coefficients: that is
  // pair-depth depth+1 counting the leading (1, 1) pair of the S-form. With
  // a = m x and b = n x every coefficient is (numeric coefficient) * x.
  TruncPoly h_prev = one, h = TruncPoly::constant(vars, cap, Rational(0));
  TruncPoly k_prev = h, k = one;
  const SeriesParams numeric{m, n};
  for (unsigned j = 1; j <= depth + 1; ++j) {
    TruncPoly num = (j == 1) ? one : x * euler_cf_coefficient(numeric, j - 1);
    TruncPoly h_next = h + num * h_prev;  // all partial denominators are 1
    TruncPoly k_next = k + num * k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  TruncPoly expansion = poly_mul_trunc(h, poly_inverse_trunc(k, cap), cap);

  // Series coefficients: x^j carries (-1)^j m(m+n)...(m+(j-1)n).
  unsigned order = 0;
  Rational prod(1);
  Rational sign(1);
  while (order < cap) {
    const unsigned j = order + 1;
    prod *= m + Rational(j - 1) * n;
    sign = -sign;
    if (expansion.coeff({j}) != sign * prod) break;
    order = j;
  }
  return order;
}

}  // namespace eulercf
