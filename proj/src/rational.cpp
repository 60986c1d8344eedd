#include "eulercf/rational.hpp"

#include <cctype>
#include <ostream>

#include "eulercf/errors.hpp"

namespace eulercf {

namespace {

mpz_class pow10(unsigned long k) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
  return t;
}

mpz_class parse_integer(std::string_view text, std::string_view context) {
  if (text.empty()) throw PreconditionError("empty integer in " + std::string(context));
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size())
    throw PreconditionError("sign without digits in " + std::string(context));
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw PreconditionError("invalid integer '" + std::string(text) + "' in " +
                              std::string(context));
  // mpz_set_str takes a '-' sign but not a '+'
  mpz_class magnitude(std::string(text.substr(start)), 10);
  return text[0] == '-' ? mpz_class(-magnitude) : magnitude;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, "rational"), mpz_class(1));
  mpz_class num = parse_integer(text.substr(0, slash), "rational numerator");
  mpz_class den = parse_integer(text.substr(slash + 1), "rational denominator");
  return Rational(num, den);
}

Rational Rational::from_decimal(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos)
    return Rational(parse_integer(text, "decimal"), mpz_class(1));
  std::string_view head = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.empty()) throw PreconditionError("decimal ends with '.'");
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw PreconditionError("invalid decimal '" + std::string(text) + "'");
  bool negative = !head.empty() && head[0] == '-';
  std::string_view int_part = head;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) int_part = head.substr(1);
  mpz_class whole = int_part.empty() ? mpz_class(0) : parse_integer(int_part, "decimal");
  mpz_class scale = pow10(frac.size());
  mpz_class num = whole * scale + mpz_class(std::string(frac), 10);
  if (negative) num = -num;
  return Rational(num, scale);
}

Rational Rational::from_double(double value) {
  Rational r;
  r.value_ = mpq_class(value);  // exact binary expansion
  return r;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw PreconditionError("reciprocal of zero");
  return Rational(den(), num());
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  if (significant_digits < 1)
    throw PreconditionError("to_decimal needs at least one significant digit");
  if (is_zero()) return "0";
  const unsigned sig = static_cast<unsigned>(significant_digits);
  mpz_class p = ::abs(num());
  mpz_class q = den();

  // Decimal exponent e with 10^e <= p/q < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
  auto cmp_pow10 = [&](long k) {
    mpz_class lhs = p, rhs = q;
    if (k >= 0)
      rhs *= pow10(static_cast<unsigned long>(k));
    else
      lhs *= pow10(static_cast<unsigned long>(-k));
    return cmp(lhs, rhs);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;

  // D = round(p/q * 10^(sig-1-e)), round half away from zero.
  long shift = static_cast<long>(sig) - 1 - e;
  mpz_class numv = p, denv = q;
  if (shift >= 0)
    numv *= pow10(static_cast<unsigned long>(shift));
  else
    denv *= pow10(static_cast<unsigned long>(-shift));
  mpz_class digits_value, rem;
  mpz_fdiv_qr(digits_value.get_mpz_t(), rem.get_mpz_t(), numv.get_mpz_t(), denv.get_mpz_t());
  if (2 * rem >= denv) ++digits_value;
  if (digits_value == pow10(sig)) {
    digits_value /= 10;
    ++e;
  }

  std::string digits = digits_value.get_str();
  std::string prefix = sign() < 0 ? "-" : "";
  if (e < 0) return prefix + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  if (e >= static_cast<long>(sig) - 1)
    return prefix + digits + std::string(static_cast<std::size_t>(e - sig + 1), '0');
  auto point = static_cast<std::size_t>(e + 1);
  return prefix + digits.substr(0, point) + "." + digits.substr(point);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace eulercf
