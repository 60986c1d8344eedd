#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eulercf/errors.hpp"
#include "eulercf/rational.hpp"

namespace eulercf {

// One level of a continued fraction: the pair (num_k, den_k) in
//   lead + num_1/(den_1 + num_2/(den_2 + ...)).
struct CFPair {
  Rational num;
  Rational den;
};

// Generalized continued fraction, either a finite list of pairs or an
// infinite pure rule k -> pair (k is 1-based). Rules must be pure: pair(k)
// may be re-evaluated any number of times. Immutable after construction.
class ContinuedFraction {
 public:
  using PairRule = std::function<CFPair(unsigned)>;

  ContinuedFraction(Rational lead, std::vector<CFPair> pairs);
  ContinuedFraction(Rational lead, PairRule rule);                    // infinite
  ContinuedFraction(Rational lead, PairRule rule, std::optional<unsigned> length);

  const Rational& lead() const { return lead_; }
  std::optional<unsigned> length() const { return length_; }  // nullopt: infinite

  // 1-based pair access; throws PreconditionError when k == 0, beyond a
  // finite length, or when the materialized den_k is zero.
  CFPair pair(unsigned k) const;

 private:
  Rational lead_;
  PairRule rule_;
  std::optional<unsigned> length_;
};

// Exact convergent h_d / k_d of the canonical three-term recurrence
//   h_d = den_d h_{d-1} + num_d h_{d-2},  h_{-1} = 1, h_0 = lead
//   k_d = den_d k_{d-1} + num_d k_{d-2},  k_{-1} = 0, k_0 = 1.
struct Convergent {
  unsigned depth = 0;
  Rational h;
  Rational k;
  Rational value;  // h/k, reduced
};

// Convergents at depths 0..depth inclusive (depth 0 is the lead alone).
// Throws DegenerateDepthError when some k_d vanishes.
std::vector<Convergent> convergents(const ContinuedFraction& cf, unsigned depth);

// Exact enclosure formed by two consecutive convergents.
struct Bracket {
  Rational lo;
  Rational hi;
  unsigned depth = 0;
  bool contains(const Rational& value) const { return lo <= value && value <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Enclosure [min, max] of convergents depth-1 and depth. Requires depth >= 2
// and positive pairs up to depth; a zero partial numerator legitimately
// terminates the fraction (the bracket collapses onto the stabilized value),
// while negative numerators or nonpositive denominators are refused because
// the alternation argument no longer applies.
Bracket bracket(const ContinuedFraction& cf, unsigned depth);

// (convergent(depth-1) + convergent(depth)) / 2; requires depth >= 1. Unlike
// bracket(), defined for sign-mixed fractions too.
Rational midpoint(const ContinuedFraction& cf, unsigned depth);

// Evaluates lead + num_1/(den_1 + ... + num_depth/(den_depth + tail))
// bottom-up. A zero division at nesting level L throws DegenerateDepthError
// naming L.
Rational eval_backward(const ContinuedFraction& cf, unsigned depth, const Rational& tail);

// Even contraction of a fraction in the shape lead 1, all partial
// denominators 1, partial numerators c_1, c_2, ...:
//   output lead 1 + c_1, output pair k = (-c_{2k-1} c_{2k}, 1 + c_{2k} + c_{2k+1}).
// Convergent d of the output equals convergent 2d+1 of the input. Shape
// violations throw PreconditionError (for rule-backed inputs, detected when
// the offending pair is materialized).
ContinuedFraction contract_even(const ContinuedFraction& cf);

}  // namespace eulercf
