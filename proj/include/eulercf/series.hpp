#pragma once

#include <vector>

#include "eulercf/rational.hpp"
#include "eulercf/truncpoly.hpp"

namespace eulercf {

// Parameters of the alternating factorial-like series
//   1 - a + a(a+b) - a(a+b)(a+2b) + ...
// whose k-th term is (-1)^k prod_{j<k} (a + j b).
struct SeriesParams {
  Rational a;
  Rational b;
};

// The j-th linear factor a + j*b.
Rational letter(unsigned j, const SeriesParams& p);

// (-1)^k prod_{j<k} letter(j, p); term(0) = 1.
Rational term(unsigned k, const SeriesParams& p);

// Shared formal-polynomial helpers in the variables (a, b).
const std::vector<std::string>& formal_vars_ab();
TruncPoly formal_const(const Rational& value, unsigned degree_cap);
TruncPoly formal_a(unsigned degree_cap);
TruncPoly formal_b(unsigned degree_cap);

// Binomial-weighted tail family:
//   term k = (-1)^k C(k+r, r) prod_{j<k} (a + (s+j) b),
// represented formally; term k is homogeneous of total degree exactly k.
struct BinomialTailSeries {
  unsigned r = 0;
  unsigned s = 0;
  std::vector<TruncPoly> terms;
};

// First `count` terms, built with degree cap count-1 (the largest degree
// present), so sums and products of these stay inside the same window.
BinomialTailSeries gtail_formal(unsigned r, unsigned s, unsigned count);

// Same terms evaluated at concrete parameters.
std::vector<Rational> gtail_values(unsigned r, unsigned s, unsigned count,
                                   const SeriesParams& p);

}  // namespace eulercf
