#include "eulercf/brouncker.hpp"

#include <utility>

namespace eulercf {

namespace {

// Exact square root of a nonnegative rational, or nullopt when either the
// numerator or the denominator is not a perfect square.
std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v.sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.num().get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(v.den().get_mpz_t()) == 0) return std::nullopt;
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), v.num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), v.den().get_mpz_t());
  return Rational(num_root, den_root);
}

}  // namespace

RSequence::RSequence(Rule rule, std::optional<unsigned> length, bool prevalidated)
    : rule_(std::move(rule)), length_(length), prevalidated_(prevalidated) {}

RSequence RSequence::from_list(std::vector<Rational> values) {
  if (values.empty()) throw PreconditionError("sequence must not be empty");
  if (values.front().sign() <= 0)
    throw PreconditionError("sequence must start positive");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1])
      throw PreconditionError("sequence must be strictly increasing (violated at element " +
                              std::to_string(i + 1) + ")");
  auto length = static_cast<unsigned>(values.size());
  return RSequence([stored = std::move(values)](unsigned k) { return stored[k - 1]; },
                   length, /*prevalidated=*/true);
}

RSequence RSequence::from_rule(Rule rule) {
  return RSequence(std::move(rule), std::nullopt, /*prevalidated=*/false);
}

RSequence RSequence::odds() {
  return from_rule([](unsigned k) { return Rational(2 * static_cast<long>(k) - 1); });
}

RSequence RSequence::naturals() {
  return from_rule([](unsigned k) { return Rational(static_cast<long>(k)); });
}

Rational RSequence::at(unsigned k) const {
  if (k == 0) throw PreconditionError("sequence index is 1-based");
  if (length_ && k > *length_)
    throw PreconditionError("sequence index " + std::to_string(k) + " beyond length " +
                            std::to_string(*length_));
  Rational value = rule_(k);
  if (!prevalidated_) {
    if (k == 1) {
      if (value.sign() <= 0) throw PreconditionError("sequence must start positive");
    } else if (value <= rule_(k - 1)) {
      throw PreconditionError("sequence must be strictly increasing (violated at element " +
                              std::to_string(k) + ")");
    }
  }
  return value;
}

std::vector<Rational> RSequence::materialize(unsigned count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (unsigned k = 1; k <= count; ++k) out.push_back(at(k));
  return out;
}

ContinuedFraction cf_from_r(const RSequence& r) {
  auto rule = [r](unsigned k) -> CFPair {
    if (k == 1) return {Rational(1), r.at(1)};
    Rational prev = r.at(k - 1);
    return {prev * prev, r.at(k) - prev};
  };
  return ContinuedFraction(Rational(0), rule, r.length());
}

std::vector<Rational> series_sum_from_r(const RSequence& r, unsigned terms) {
  std::vector<Rational> out;
  out.reserve(terms);
  Rational acc(0);
  for (unsigned k = 1; k <= terms; ++k) {
    Rational piece = r.at(k).reciprocal();
    acc += (k % 2 == 1) ? piece : -piece;
    out.push_back(acc);
  }
  return out;
}

Rational TelescopeStep::part_value(const Rational& p_next) const {
  if (p_next == r) throw PreconditionError("telescope continuation equals r (zero nesting)");
  return r + (r * r) / (p_next - r);
}

bool TelescopeStep::identity_holds(const Rational& p_next) const {
  if (p_next.is_zero() || p_next == r || r.is_zero()) return false;
  Rational p_k = part_value(p_next);
  if (p_k.is_zero()) return false;
  return p_k.reciprocal() == r.reciprocal() - p_next.reciprocal();
}

DetectResult detect_r(const ContinuedFraction& cf, unsigned pair_count) {
  unsigned limit = pair_count;
  if (limit == 0) {
    if (!cf.length())
      throw PreconditionError("detect_r on a rule-backed fraction needs an explicit pair count");
    limit = *cf.length();
  } else if (cf.length() && limit > *cf.length()) {
    limit = *cf.length();
  }
  if (limit < 1) return DetectRejection{0, "fraction has no pairs"};
  if (!cf.lead().is_zero())
    return DetectRejection{0, "lead must be 0, got " + cf.lead().to_string()};

  std::vector<CFPair> pairs;
  pairs.reserve(limit);
  for (unsigned k = 1; k <= limit; ++k) pairs.push_back(cf.pair(k));

  if (pairs[0].num != Rational(1))
    return DetectRejection{1, "first partial numerator must be 1, got " + pairs[0].num.to_string()};

  // r_k = sqrt(num_{k+1}) for k < limit; denominators are the cross-check.
  std::vector<Rational> r;
  r.reserve(limit);
  for (unsigned k = 1; k < limit; ++k) {
    auto root = exact_sqrt(pairs[k].num);
    if (!root)
      return DetectRejection{k + 1, "partial numerator " + pairs[k].num.to_string() +
                                        " is not a perfect rational square"};
    if (root->is_zero())
      return DetectRejection{k + 1, "partial numerator must be positive"};
    r.push_back(*root);
  }
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] <= r[i - 1])
      return DetectRejection{static_cast<unsigned>(i + 2),
                             "recovered r sequence is not strictly increasing"};

  if (!r.empty()) {
    if (pairs[0].den != r[0])
      return DetectRejection{1, "requires r_1 = " + r[0].to_string() + ", got " +
                                    pairs[0].den.to_string()};
  } else if (pairs[0].den.sign() <= 0) {
    return DetectRejection{1, "r_1 must be positive, got " + pairs[0].den.to_string()};
  }
  for (std::size_t i = 1; i < r.size(); ++i) {
    Rational expected = r[i] - r[i - 1];
    if (pairs[i].den != expected)
      return DetectRejection{static_cast<unsigned>(i + 1),
                             "requires r_" + std::to_string(i + 1) + " - r_" + std::to_string(i) +
                                 " = " + expected.to_string() + ", got " + pairs[i].den.to_string()};
  }

  // The last element only shows up through its denominator.
  Rational last = r.empty() ? pairs[0].den : r.back() + pairs[limit - 1].den;
  if (!r.empty() && last <= r.back())
    return DetectRejection{limit, "final denominator must be positive, got " +
                                      pairs[limit - 1].den.to_string()};
  r.push_back(last);
  return RSequence::from_list(std::move(r));
}

}  // namespace eulercf
