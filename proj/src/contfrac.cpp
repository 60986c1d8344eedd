#include "eulercf/contfrac.hpp"

#include <algorithm>
#include <utility>

namespace eulercf {

ContinuedFraction::ContinuedFraction(Rational lead, std::vector<CFPair> pairs)
    : lead_(std::move(lead)), length_(static_cast<unsigned>(pairs.size())) {
  rule_ = [stored = std::move(pairs)](unsigned k) { return stored[k - 1]; };
}

ContinuedFraction::ContinuedFraction(Rational lead, PairRule rule)
    : lead_(std::move(lead)), rule_(std::move(rule)), length_(std::nullopt) {}

ContinuedFraction::ContinuedFraction(Rational lead, PairRule rule,
                                     std::optional<unsigned> length)
    : lead_(std::move(lead)), rule_(std::move(rule)), length_(length) {}

CFPair ContinuedFraction::pair(unsigned k) const {
  if (k == 0) throw PreconditionError("pair index is 1-based");
  if (length_ && k > *length_)
    throw PreconditionError("pair index " + std::to_string(k) +
                            " beyond fraction length " + std::to_string(*length_));
  CFPair p = rule_(k);
  if (p.den.is_zero())
    throw PreconditionError("zero partial denominator at pair " + std::to_string(k));
  return p;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, unsigned depth) {
  std::vector<Convergent> out;
  out.reserve(depth + 1);
  Rational h_prev(1), h = cf.lead();
  Rational k_prev(0), k(1);
  out.push_back({0, h, k, h});
  for (unsigned d = 1; d <= depth; ++d) {
    CFPair p = cf.pair(d);
    Rational h_next = p.den * h + p.num * h_prev;
    Rational k_next = p.den * k + p.num * k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    if (k.is_zero())
      throw DegenerateDepthError("zero canonical denominator at depth " + std::to_string(d), d);
    out.push_back({d, h, k, h / k});
  }
  return out;
}

Bracket bracket(const ContinuedFraction& cf, unsigned depth) {
  if (depth < 2) throw PreconditionError("bracket needs depth >= 2");
  // Positivity gives the alternating enclosure; a zero partial numerator cuts
  // the fraction off, freezing every later convergent at the same value.
  std::optional<unsigned> cut;
  for (unsigned k = 1; k <= depth; ++k) {
    CFPair p = cf.pair(k);
    if (p.num.sign() < 0 || p.den.sign() <= 0)
      throw PreconditionError(
          "bracket requires positive partial numerators and denominators "
          "(violated at pair " + std::to_string(k) + ")");
    if (p.num.is_zero()) {
      cut = k;
      break;
    }
  }
  if (cut) {
    Rational v = convergents(cf, *cut - 1).back().value;
    return Bracket{v, v, depth};
  }
  auto conv = convergents(cf, depth);
  Rational x = conv[depth - 1].value;
  Rational y = conv[depth].value;
  if (y < x) std::swap(x, y);
  return Bracket{x, y, depth};
}

Rational midpoint(const ContinuedFraction& cf, unsigned depth) {
  if (depth < 1) throw PreconditionError("midpoint needs depth >= 1");
  auto conv = convergents(cf, depth);
  return (conv[depth - 1].value + conv[depth].value) / 2;
}

Rational eval_backward(const ContinuedFraction& cf, unsigned depth, const Rational& tail) {
  if (depth < 1) throw PreconditionError("eval_backward needs depth >= 1");
  // Fold lead + num_1/(den_1 + ... + num_depth/(den_depth + tail)) from the
  // innermost level outward; acc is the denominator the level above divides by.
  Rational acc = cf.pair(depth).den + tail;
  for (unsigned k = depth; k >= 2; --k) {
    if (acc.is_zero())
      throw DegenerateDepthError("zero denominator while folding level " + std::to_string(k), k);
    acc = cf.pair(k - 1).den + cf.pair(k).num / acc;
  }
  if (acc.is_zero())
    throw DegenerateDepthError("zero denominator while folding level 1", 1);
  return cf.lead() + cf.pair(1).num / acc;
}

ContinuedFraction contract_even(const ContinuedFraction& cf) {
  if (cf.lead() != Rational(1))
    throw PreconditionError("even contraction expects lead 1");
  auto length = cf.length();
  if (length && *length < 1)
    throw PreconditionError("even contraction expects at least one pair");
  // c_j fetches the j-th partial numerator, insisting on unit denominators.
  auto fetch = [cf](unsigned j) {
    CFPair p = cf.pair(j);
    if (p.den != Rational(1))
      throw PreconditionError("even contraction expects all partial denominators 1 "
                              "(violated at pair " + std::to_string(j) + ")");
    return p.num;
  };
  if (length)
    for (unsigned j = 1; j <= *length; ++j) fetch(j);  // eager shape check
  Rational out_lead = Rational(1) + fetch(1);
  auto rule = [fetch](unsigned k) {
    Rational c_odd = fetch(2 * k - 1);
    Rational c_even = fetch(2 * k);
    Rational c_next = fetch(2 * k + 1);
    return CFPair{-(c_odd * c_even), Rational(1) + c_even + c_next};
  };
  std::optional<unsigned> out_length;
  if (length) out_length = (*length - 1) / 2;
  return ContinuedFraction(out_lead, rule, out_length);
}

}  // namespace eulercf
