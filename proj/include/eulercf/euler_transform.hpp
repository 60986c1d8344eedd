#pragma once

#include "eulercf/contfrac.hpp"
#include "eulercf/series.hpp"

namespace eulercf {

// The continued-fraction coefficient sequence the series (a, b) transforms
// into: c_1 = a, then c_{2i} = i*b, c_{2i+1} = a + i*b  (a, b, a+b, 2b, a+2b,
// 3b, ...). k is 1-based.
Rational euler_cf_coefficient(const SeriesParams& p, unsigned k);

// Same coefficient as a formal degree-<=1 polynomial in (a, b).
TruncPoly euler_cf_coefficient_formal(unsigned k, unsigned degree_cap);

// Series parameters induced by the (m, n, x) form: a = m*x, b = n*x.
// Requires x != 0.
SeriesParams params_from_mnx(const Rational& m, const Rational& n, const Rational& x);

// The transformed fraction for the series S:
//   S = 1/(1 + a/(1 + b/(1 + (a+b)/(1 + 2b/(1 + ...)))))
// encoded with lead 0 and first pair (1, 1), so depth d consumes d pairs and
// depths 1, 2, 3 give 1, 1/(1+a), (1+b)/(1+a+b).
struct EulerCF {
  SeriesParams params;
  ContinuedFraction cf;
};
EulerCF build_cf(const SeriesParams& p);

// The reciprocal-form fraction 1 + a/(1 + b/(1 + (a+b)/(...))) (value 1/S):
// lead 1, every partial denominator 1, partial numerators c_1, c_2, ....
// This is the shape contract_even() consumes.
ContinuedFraction build_reciprocal_cf(const SeriesParams& p);

// Even contraction of the reciprocal form in closed form:
//   lead 1 + a, pair k = (-k b (a + (k-1) b), 1 + a + 2 k b).
// Its value is 1/S; convergent d equals convergent 2d+1 of the reciprocal
// form, hence the exact product identity with build_cf at depth 2d+2.
ContinuedFraction build_contracted(const SeriesParams& p);

// Order of agreement between the fraction truncated at `depth` coefficients
// (c_1..c_depth) and the power series sum_k (-1)^k m(m+n)...(m+(k-1)n) x^k:
// the largest N <= degree_cap with all coefficients of x^0..x^N equal.
// degree_cap 0 selects the default depth + 2. Requires depth >= 1.
unsigned correspondence_order(const Rational& m, const Rational& n, unsigned depth,
                              unsigned degree_cap = 0);

}  // namespace eulercf
