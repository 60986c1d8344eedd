#include "eulercf/derivation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eulercf {

namespace {

// Formal sum of the first `count` tail terms; window = total degree <= count-1.
TruncPoly g_sum(unsigned r, unsigned s, unsigned count) {
  auto family = gtail_formal(r, s, count);
  TruncPoly acc = formal_const(Rational(0), count > 0 ? count - 1 : 0);
  for (const auto& t : family.terms) acc = acc + t;
  return acc;
}

bool graded_lex_less(const TruncPoly::Exponents& x, const TruncPoly::Exponents& y) {
  unsigned dx = std::accumulate(x.begin(), x.end(), 0u);
  unsigned dy = std::accumulate(y.begin(), y.end(), 0u);
  if (dx != dy) return dx < dy;
  return x < y;
}

}  // namespace

std::optional<Discrepancy> first_difference(const TruncPoly& lhs, const TruncPoly& rhs) {
  if (lhs.vars() != rhs.vars())
    throw PreconditionError("polynomial variable lists differ");
  std::set<TruncPoly::Exponents, decltype(&graded_lex_less)> keys(&graded_lex_less);
  for (const auto& [e, c] : lhs.coefficients()) keys.insert(e);
  for (const auto& [e, c] : rhs.coefficients()) keys.insert(e);
  for (const auto& e : keys) {
    Rational cl = lhs.coeff(e), cr = rhs.coeff(e);
    if (cl != cr) return Discrepancy{e, cl, cr};
  }
  return std::nullopt;
}

IdentityReport verify_identity(IdentityKind kind, unsigned r, unsigned term_cap) {
  if (term_cap < 2)
    throw PreconditionError("identity check needs at least two terms");
  TruncPoly lhs = formal_const(Rational(0), term_cap - 1);
  TruncPoly rhs = lhs;
  if (kind == IdentityKind::I1) {
    lhs = g_sum(r, r, term_cap);
    rhs = g_sum(r, r + 1, term_cap) +
          formal_b(term_cap - 1) * Rational(r + 1) * g_sum(r + 1, r + 1, term_cap);
  } else {
    lhs = g_sum(r, r + 1, term_cap);
    rhs = g_sum(r + 1, r + 1, term_cap) +
          (formal_a(term_cap - 1) + formal_b(term_cap - 1) * Rational(r + 1)) *
              g_sum(r + 1, r + 2, term_cap);
  }
  IdentityReport report;
  report.kind = kind;
  report.r = r;
  report.term_cap = term_cap;
  report.first_discrepancy = first_difference(lhs, rhs);
  report.holds = !report.first_discrepancy.has_value();
  return report;
}

ChainTrace verify_chain(unsigned depth, unsigned term_cap) {
  if (depth < 1) throw PreconditionError("chain needs depth >= 1");
  if (term_cap < 2)
    throw PreconditionError("chain check needs at least two terms");
  ChainTrace trace;
  trace.depth = depth;

  // Step 1, the reciprocal split 1/G(0,0) = 1 + a G(0,1)/G(0,0), rests on
  // 1 - G(0,0) - a G(0,1) = 0; check it on the shared window before emitting.
  {
    TruncPoly window_one = formal_const(Rational(1), term_cap - 1);
    TruncPoly residue =
        window_one - g_sum(0, 0, term_cap) - formal_a(term_cap - 1) * g_sum(0, 1, term_cap);
    if (!residue.is_zero())
      throw IdentityError("reciprocal split failed: residue " + residue.to_string(),
                          std::nullopt);
  }
  trace.emitted_numerators.push_back(formal_a(1));

  // Alternate I1 (emits (i+1) b) and I2 (emits a + (i+1) b) until `depth`
  // numerators are out.
  unsigned i = 0;
  bool next_is_i1 = true;
  while (trace.emitted_numerators.size() < depth) {
    IdentityKind kind = next_is_i1 ? IdentityKind::I1 : IdentityKind::I2;
    IdentityReport report = verify_identity(kind, i, term_cap);
    if (!report.holds)
      throw IdentityError("chain step failed at r = " + std::to_string(i), report);
    if (next_is_i1) {
      trace.emitted_numerators.push_back(formal_b(1) * Rational(i + 1));
    } else {
      trace.emitted_numerators.push_back(formal_a(1) + formal_b(1) * Rational(i + 1));
      ++i;
    }
    next_is_i1 = !next_is_i1;
  }
  return trace;
}

}  // namespace eulercf
