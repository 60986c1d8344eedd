#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eulercf/contfrac.hpp"
#include "eulercf/rational.hpp"

namespace eulercf {

// Strictly increasing sequence of positive rationals 0 < r_1 < r_2 < ...,
// either an explicit list (validated up front) or a pure 1-based rule
// (validated on each access). Immutable.
class RSequence {
 public:
  using Rule = std::function<Rational(unsigned)>;

  static RSequence from_list(std::vector<Rational> values);
  static RSequence from_rule(Rule rule);  // infinite
  static RSequence odds();                // 1, 3, 5, ...
  static RSequence naturals();            // 1, 2, 3, ...

  // 1-based; throws PreconditionError on a rule that breaks positivity or
  // strict increase, or on k == 0 / k beyond a finite length.
  Rational at(unsigned k) const;
  std::optional<unsigned> length() const { return length_; }
  std::vector<Rational> materialize(unsigned count) const;

 private:
  RSequence(Rule rule, std::optional<unsigned> length, bool prevalidated);
  Rule rule_;
  std::optional<unsigned> length_;
  bool prevalidated_;
};

// The fraction whose convergents telescope the alternating sum
// sum_k (-1)^{k+1} / r_k exactly:
//   lead 0, pair 1 = (1, r_1), pair k+1 = (r_k^2, r_{k+1} - r_k).
// Convergent at depth d equals the d-term partial sum.
ContinuedFraction cf_from_r(const RSequence& r);

// Partial sums of sum_k (-1)^{k+1} / r_k for d = 1..terms (exact).
std::vector<Rational> series_sum_from_r(const RSequence& r, unsigned terms);

// One telescoping level: P_k = r_k + r_k^2 / (P_{k+1} - r_k), which satisfies
// 1/P_k = 1/r_k - 1/P_{k+1}.
struct TelescopeStep {
  unsigned k = 0;
  Rational r;
  // Value of P_k induced by the continuation P_{k+1}; p_next must differ
  // from r (zero nesting denominator) and from 0.
  Rational part_value(const Rational& p_next) const;
  bool identity_holds(const Rational& p_next) const;
};

// Inverse reading of cf_from_r. Recovery: r_k is the exact rational square
// root of num_{k+1}; den_k is cross-checked against r_k - r_{k-1} (den_1
// against r_1), and the final element comes from the last denominator. A
// fraction that fails any of this is "not of telescoping type": the result
// is a rejection value naming the first offending pair index, never a throw.
struct DetectRejection {
  unsigned index = 0;
  std::string reason;
};
using DetectResult = std::variant<RSequence, DetectRejection>;

// pair_count 0 means "full length" and is only valid for finite fractions;
// rule-backed fractions need an explicit materialization count.
DetectResult detect_r(const ContinuedFraction& cf, unsigned pair_count = 0);

}  // namespace eulercf
