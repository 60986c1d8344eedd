#pragma once

#include <optional>
#include <vector>

#include "eulercf/errors.hpp"
#include "eulercf/series.hpp"
#include "eulercf/truncpoly.hpp"

namespace eulercf {

// The two ladder identities behind the series-to-fraction rewrite, with
// G(r, s) denoting the formal sum of the binomial tail family:
//   I1:  G(r, r)   = G(r, r+1)   + (r+1) b     G(r+1, r+1)
//   I2:  G(r, r+1) = G(r+1, r+1) + (a+(r+1)b)  G(r+1, r+2)
enum class IdentityKind { I1, I2 };

// First failing monomial of an identity check, in graded-lex order.
struct Discrepancy {
  TruncPoly::Exponents exponents;  // over (a, b)
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  IdentityKind kind = IdentityKind::I1;
  unsigned r = 0;
  unsigned term_cap = 0;
  bool holds = false;
  std::optional<Discrepancy> first_discrepancy;
};

// Graded-lex-first coefficient difference between two polynomials over the
// same variables; nullopt when equal.
std::optional<Discrepancy> first_difference(const TruncPoly& lhs, const TruncPoly& rhs);

// Checks one identity with each G-sum truncated to `term_cap` terms; the
// comparison window is total degree 0..term_cap-1, where both sides are
// complete. Requires term_cap >= 2.
IdentityReport verify_identity(IdentityKind kind, unsigned r, unsigned term_cap);

// Raised by verify_chain when a step fails; carries the failing report when
// the step maps to an I1/I2 instance.
struct IdentityError : Error {
  IdentityError(const std::string& what, std::optional<IdentityReport> report_arg)
      : Error(what), report(std::move(report_arg)) {}
  std::optional<IdentityReport> report;
};

// Replays the rewrite that turns the series into its fraction: the split
// 1/G(0,0) = 1 + a G(0,1)/G(0,0) emits a, then I1 at r = i emits (i+1) b and
// I2 at r = i emits a + (i+1) b, alternating. Every step is verified at
// `term_cap` before its numerator is emitted.
struct ChainTrace {
  unsigned depth = 0;
  std::vector<TruncPoly> emitted_numerators;  // degree <= 1 in (a, b)
};
ChainTrace verify_chain(unsigned depth, unsigned term_cap);

}  // namespace eulercf
