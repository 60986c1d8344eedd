#include <doctest.h>

#include <set>

#include "eulercf/contfrac.hpp"
#include "eulercf/euler_transform.hpp"
#include "test_support.hpp"

using eulercf::Bracket;
using eulercf::bracket;
using eulercf::build_cf;
using eulercf::CFPair;
using eulercf::ContinuedFraction;
using eulercf::contract_even;
using eulercf::convergents;
using eulercf::DegenerateDepthError;
using eulercf::eval_backward;
using eulercf::midpoint;
using eulercf::PreconditionError;
using eulercf::Rational;
using eulercf::SeriesParams;

namespace {

const char* kGompertz40 = "0.5963473623231940743410784993692793760742";
const char* kPiOver4_40 = "0.7853981633974483096156608458198757210493";

ContinuedFraction odds_cf() {
  // 1/(1 + 1/(2 + 9/(2 + 25/(2 + ...))))
  return ContinuedFraction(Rational(0), [](unsigned k) -> CFPair {
    if (k == 1) return {Rational(1), Rational(1)};
    long q = 2 * static_cast<long>(k) - 3;
    return {Rational(q * q), Rational(2)};
  });
}

// Random all-positive fraction for the alternation/nesting properties.
ContinuedFraction random_positive_cf(eulercf::test::RationalGen& gen, unsigned pairs) {
  std::vector<CFPair> list;
  for (unsigned k = 0; k < pairs; ++k) list.push_back({gen.positive(9), gen.positive(9)});
  return ContinuedFraction(Rational(gen.index(0, 1)), std::move(list));
}

}  // namespace

TEST_CASE("convergent basics") {
  ContinuedFraction constant(Rational(5), std::vector<CFPair>{});
  auto only = convergents(constant, 0);
  REQUIRE(only.size() == 1);
  CHECK(only[0].value == Rational(5));

  auto cf = build_cf(SeriesParams{Rational(1), Rational(1)}).cf;
  auto conv = convergents(cf, 3);
  CHECK(conv[1].value == Rational(1));
  CHECK(conv[2].value == Rational(1, 2));
  CHECK(conv[3].value == Rational(2, 3));

  auto odds = convergents(odds_cf(), 3);
  CHECK(odds[3].value == Rational(13, 15));

  CHECK_THROWS_AS(convergents(constant, 1), PreconditionError);  // beyond length
}

TEST_CASE("degenerate canonical denominator names its depth") {
  ContinuedFraction cf(Rational(0),
                       std::vector<CFPair>{{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}});
  try {
    convergents(cf, 2);
    FAIL("expected DegenerateDepthError");
  } catch (const DegenerateDepthError& e) {
    CHECK(e.depth == 2);
  }
}

TEST_CASE("zero partial denominator is refused at materialization") {
  ContinuedFraction cf(Rational(0), std::vector<CFPair>{{Rational(1), Rational(0)}});
  CHECK_THROWS_AS(cf.pair(1), PreconditionError);
}

TEST_CASE("bracket encloses the value between consecutive convergents") {
  auto cf = build_cf(SeriesParams{Rational(1), Rational(1)}).cf;
  Bracket br = bracket(cf, 4);
  CHECK(br.lo == Rational(4, 7));
  CHECK(br.hi == Rational(2, 3));
  CHECK(br.contains(Rational::from_decimal(kGompertz40)));

  Bracket odds = bracket(odds_cf(), 10);
  CHECK(odds.contains(Rational::from_decimal(kPiOver4_40)));

  CHECK_THROWS_AS(bracket(cf, 1), PreconditionError);
}

TEST_CASE("a zero partial numerator collapses the bracket") {
  auto cf = build_cf(SeriesParams{Rational(1), Rational(0)}).cf;
  Bracket br = bracket(cf, 3);
  CHECK(br.lo == Rational(1, 2));
  CHECK(br.hi == Rational(1, 2));
  CHECK(br.width().is_zero());
}

TEST_CASE("negative entries are refused by bracket") {
  ContinuedFraction cf(Rational(0),
                       std::vector<CFPair>{{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}});
  CHECK_THROWS_AS(bracket(cf, 2), PreconditionError);
}

TEST_CASE("backward evaluation") {
  auto stalled = build_cf(SeriesParams{Rational(1), Rational(0)}).cf;
  for (unsigned depth = 2; depth <= 5; ++depth)
    CHECK(eval_backward(stalled, depth, Rational(0)) == Rational(1, 2));

  auto cf = build_cf(SeriesParams{Rational(1), Rational(1)}).cf;
  Rational target = Rational::from_decimal(kGompertz40);
  CHECK((eval_backward(cf, 100, Rational(1)) - target).abs() < Rational(1, 1000000));

  Rational pi4 = Rational::from_decimal(kPiOver4_40);
  CHECK((eval_backward(odds_cf(), 500, Rational(2)) - pi4).abs() < Rational(1, 1000));
}

TEST_CASE("backward evaluation names the level that divides by zero") {
  ContinuedFraction cf(Rational(0),
                       std::vector<CFPair>{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  try {
    eval_backward(cf, 2, Rational(0));
    FAIL("expected DegenerateDepthError");
  } catch (const DegenerateDepthError& e) {
    CHECK(e.depth == 1);
  }
}

TEST_CASE("convergents agree with backward evaluation with zero tail") {
  eulercf::test::RationalGen gen(0x5eed0020);
  for (int iter = 0; iter < 8; ++iter) {
    auto cf = random_positive_cf(gen, 50);
    auto conv = convergents(cf, 50);
    for (unsigned d = 1; d <= 50; ++d)
      CHECK(conv[d].value == eval_backward(cf, d, Rational(0)));
  }
}

TEST_CASE("consecutive convergent differences alternate in sign") {
  eulercf::test::RationalGen gen(0x5eed0021);
  for (int iter = 0; iter < 8; ++iter) {
    auto cf = random_positive_cf(gen, 51);
    auto conv = convergents(cf, 51);
    int expected = (conv[1].value - conv[0].value).sign();
    REQUIRE(expected != 0);
    for (unsigned d = 1; d <= 50; ++d) {
      int s = (conv[d + 1].value - conv[d].value).sign();
      CHECK(s == -expected);
      expected = s;
    }
  }
}

TEST_CASE("brackets nest") {
  eulercf::test::RationalGen gen(0x5eed0022);
  for (int iter = 0; iter < 6; ++iter) {
    SeriesParams p{gen.positive(6), gen.positive(6)};
    auto cf = build_cf(p).cf;
    for (unsigned d = 2; d + 2 <= 52; ++d) {
      Bracket outer = bracket(cf, d);
      Bracket inner = bracket(cf, d + 2);
      CHECK(outer.lo <= inner.lo);
      CHECK(inner.hi <= outer.hi);
    }
  }
}

TEST_CASE("midpoint averages the last two convergents") {
  auto cf = build_cf(SeriesParams{Rational(1), Rational(1)}).cf;
  CHECK(midpoint(cf, 4) == (Rational(2, 3) + Rational(4, 7)) / 2);
  CHECK(midpoint(cf, 4) == bracket(cf, 4).midpoint());
  CHECK_THROWS_AS(midpoint(cf, 0), PreconditionError);
}

TEST_CASE("even contraction of an explicit fraction") {
  // lead 1, numerators 2, 3, 5, 7, 11, 13, 17, all denominators 1
  std::vector<CFPair> pairs;
  for (long c : {2, 3, 5, 7, 11, 13, 17}) pairs.push_back({Rational(c), Rational(1)});
  ContinuedFraction cf(Rational(1), pairs);
  ContinuedFraction contracted = contract_even(cf);
  REQUIRE(contracted.length().has_value());
  CHECK(*contracted.length() == 3);
  CHECK(contracted.lead() == Rational(3));
  CHECK(contracted.pair(1).num == Rational(-6));
  CHECK(contracted.pair(1).den == Rational(9));
  CHECK(contracted.pair(2).num == Rational(-35));
  CHECK(contracted.pair(2).den == Rational(19));
  CHECK(contracted.pair(3).num == Rational(-143));
  CHECK(contracted.pair(3).den == Rational(31));

  // output convergent d = input convergent 2d+1
  auto inner = convergents(cf, 7);
  auto outer = convergents(contracted, 3);
  for (unsigned d = 0; d <= 3; ++d) CHECK(outer[d].value == inner[2 * d + 1].value);
}

TEST_CASE("contraction with a zero first numerator") {
  std::vector<CFPair> pairs{{Rational(0), Rational(1)},
                            {Rational(3), Rational(1)},
                            {Rational(4), Rational(1)}};
  ContinuedFraction cf(Rational(1), pairs);
  ContinuedFraction contracted = contract_even(cf);
  CHECK(contracted.lead() == Rational(1));
  CHECK(convergents(contracted, 1)[1].value == convergents(cf, 3)[3].value);
}

TEST_CASE("contraction refuses wrong shapes") {
  ContinuedFraction bad_lead(Rational(2), std::vector<CFPair>{{Rational(1), Rational(1)}});
  CHECK_THROWS_AS(contract_even(bad_lead), PreconditionError);

  ContinuedFraction bad_den(Rational(1),
                            std::vector<CFPair>{{Rational(1), Rational(1)},
                                                {Rational(1), Rational(2)},
                                                {Rational(1), Rational(1)}});
  CHECK_THROWS_AS(contract_even(bad_den), PreconditionError);

  // rule-backed input: the shape violation surfaces at materialization
  ContinuedFraction lazy(Rational(1), [](unsigned k) -> CFPair {
    return {Rational(1), Rational(k == 2 ? 2 : 1)};
  });
  ContinuedFraction out = contract_even(lazy);
  CHECK_THROWS_AS(out.pair(1), PreconditionError);
}

TEST_CASE("every contracted convergent is an original convergent (random streams)") {
  eulercf::test::RationalGen gen(0x5eed0023);
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<CFPair> pairs;
    for (unsigned k = 0; k < 31; ++k) pairs.push_back({gen.positive(9), Rational(1)});
    ContinuedFraction cf(Rational(1), pairs);
    auto inner = convergents(cf, 31);
    std::set<Rational> seen;
    for (const auto& c : inner) seen.insert(c.value);
    ContinuedFraction contracted = contract_even(cf);
    auto outer = convergents(contracted, 15);
    for (unsigned d = 0; d <= 15; ++d) {
      CHECK(outer[d].value == inner[2 * d + 1].value);
      CHECK(seen.count(outer[d].value) == 1);
    }
  }
}
