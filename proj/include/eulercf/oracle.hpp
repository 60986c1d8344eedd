#pragma once

#include <string>
#include <string_view>

#include "eulercf/rational.hpp"

namespace eulercf {

enum class OracleMethod { quadrature, closed_form, constant };

std::string_view to_string(OracleMethod method);

struct OracleValue {
  std::string decimal;     // >= 30 significant digits of the carried value
  double approx = 0.0;     // double rendering of `decimal`
  OracleMethod method = OracleMethod::quadrature;
  double error_estimate = 0.0;  // 0 only for exact closed forms / constants
};

// Independent numeric value of the series via its integral representation
//   integral_0^inf e^-t (1 + n x t)^(-m/n) dt        (n > 0)
// and the exact closed form 1/(1 + m x) when n = 0. Requires m > 0, n >= 0,
// x > 0, tol > 0. Two independent double-exponential schemes are run and
// must agree within tol, else ToleranceError (carrying the best value).
OracleValue borel_integral(const Rational& m, const Rational& n, const Rational& x,
                           double tol);

// The two schemes individually (exposed so tests can measure their
// agreement). Each returns its value and writes its own error estimate.
double borel_quadrature_exp_sinh(double m, double n, double x, double* error_estimate);
double borel_quadrature_tanh_sinh(double m, double n, double x, double* error_estimate);

// Stored reference constants: "pi_over_4", "ln2", "euler_hypergeometric"
// (the a=b=1 integral above). 40 significant digits; unknown names throw
// PreconditionError.
OracleValue reference_value(std::string_view name);

}  // namespace eulercf
