#include "eulercf/truncpoly.hpp"

#include <numeric>
#include <sstream>

#include "eulercf/errors.hpp"

namespace eulercf {

namespace {

unsigned total_degree(const TruncPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

void require_same_vars(const TruncPoly& a, const TruncPoly& b) {
  if (a.vars() != b.vars())
    throw PreconditionError("polynomial variable lists differ");
}

}  // namespace

TruncPoly::TruncPoly(std::vector<std::string> vars, unsigned degree_cap)
    : vars_(std::move(vars)), degree_cap_(degree_cap) {}

TruncPoly TruncPoly::constant(std::vector<std::string> vars, unsigned degree_cap,
                              const Rational& value) {
  TruncPoly p(std::move(vars), degree_cap);
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

TruncPoly TruncPoly::variable(std::vector<std::string> vars, unsigned degree_cap,
                              std::size_t index) {
  TruncPoly p(std::move(vars), degree_cap);
  if (index >= p.vars_.size())
    throw PreconditionError("variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Rational TruncPoly::coeff(const Exponents& exponents) const {
  auto it = coeffs_.find(exponents);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncPoly::add_term(const Exponents& exponents, const Rational& value) {
  if (exponents.size() != vars_.size())
    throw PreconditionError("exponent tuple length does not match variables");
  if (value.is_zero() || total_degree(exponents) > degree_cap_) return;
  auto [it, inserted] = coeffs_.emplace(exponents, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TruncPoly TruncPoly::operator+(const TruncPoly& rhs) const {
  require_same_vars(*this, rhs);
  TruncPoly out(vars_, std::min(degree_cap_, rhs.degree_cap_));
  for (const auto& [e, c] : coeffs_) out.add_term(e, c);
  for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, c);
  return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly& rhs) const {
  return *this + (-rhs);
}

TruncPoly TruncPoly::operator*(const TruncPoly& rhs) const {
  return poly_mul_trunc(*this, rhs, std::min(degree_cap_, rhs.degree_cap_));
}

TruncPoly TruncPoly::operator*(const Rational& scalar) const {
  TruncPoly out(vars_, degree_cap_);
  if (scalar.is_zero()) return out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, c * scalar);
  return out;
}

TruncPoly TruncPoly::operator-() const {
  return *this * Rational(-1);
}

bool TruncPoly::operator==(const TruncPoly& rhs) const {
  return vars_ == rhs.vars_ && coeffs_ == rhs.coeffs_;
}

TruncPoly TruncPoly::truncated(unsigned degree_cap) const {
  TruncPoly out(vars_, degree_cap);
  for (const auto& [e, c] : coeffs_) out.add_term(e, c);
  return out;
}

Rational TruncPoly::eval(const std::vector<Rational>& values) const {
  if (values.size() != vars_.size())
    throw PreconditionError("eval arity does not match variables");
  Rational acc(0);
  for (const auto& [e, c] : coeffs_) {
    Rational monomial = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned j = 0; j < e[i]; ++j) monomial *= values[i];
    acc += monomial;
  }
  return acc;
}

std::string TruncPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  // graded lex: sort keys by (total degree, exponent tuple)
  std::vector<const std::pair<const Exponents, Rational>*> items;
  items.reserve(coeffs_.size());
  for (const auto& kv : coeffs_) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [](const auto* x, const auto* y) {
    unsigned dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx < dy;
    return x->first < y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* kv : items) {
    const auto& [e, c] = *kv;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(e) > 0;
    bool unit = mag == Rational(1);
    if (!unit || !has_vars) os << mag.to_string();
    bool lead_done = !unit || !has_vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (lead_done) os << "*";
      lead_done = true;
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

TruncPoly poly_mul_trunc(const TruncPoly& p, const TruncPoly& q, unsigned degree_cap) {
  if (p.vars() != q.vars())
    throw PreconditionError("polynomial variable lists differ");
  TruncPoly out(p.vars(), degree_cap);
  for (const auto& [ep, cp] : p.coefficients()) {
    for (const auto& [eq, cq] : q.coefficients()) {
      TruncPoly::Exponents e(ep.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

TruncPoly poly_inverse_trunc(const TruncPoly& p, unsigned degree_cap) {
  TruncPoly::Exponents zero(p.vars().size(), 0);
  Rational c0 = p.coeff(zero);
  if (c0.is_zero())
    throw PreconditionError("inverse of a polynomial with zero constant term");
  // p = c0 (1 - q) with q having no constant term, so
  // 1/p = (1 + q + q^2 + ... + q^cap) / c0 -- q^k starts at degree k.
  Rational inv_c0 = c0.reciprocal();
  TruncPoly q = (TruncPoly::constant(p.vars(), degree_cap, Rational(1)) -
                 p.truncated(degree_cap) * inv_c0);
  TruncPoly acc = TruncPoly::constant(p.vars(), degree_cap, Rational(1));
  TruncPoly power = TruncPoly::constant(p.vars(), degree_cap, Rational(1));
  for (unsigned k = 1; k <= degree_cap; ++k) {
    power = poly_mul_trunc(power, q, degree_cap);
    if (power.is_zero()) break;
    acc = acc + power;
  }
  return acc * inv_c0;
}

}  // namespace eulercf
