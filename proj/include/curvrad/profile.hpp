#pragma once

#include <string>

#include "curvrad/expression.hpp"

namespace curvrad {

// Coefficients of the sub-Riemannian length functional on admissible curves.
//
// constant (a, b):  integrand √(a²|γ̇|² + b²|D_tR|²) / |R|
// radial (a(r), b(r)) with r = |R|:  integrand √(a(r)²|γ̇|² + b(r)²|D_tR|²)
//
// A constant profile is the radial profile with a(r) = a/r, b(r) = b/r.
class MetricProfile {
 public:
  static MetricProfile constant(double a, double b);
  // Expressions in the variable r.
  static MetricProfile radial(const std::string& a, const std::string& b);
  // "const:a=0,b=1" or "radial:a=0,b=1" (radial entries may be expressions
  // in r, e.g. "radial:a=0,b=1+1/r"). Throws Error(Config).
  static MetricProfile parse(const std::string& spec);

  bool is_constant() const { return constant_; }
  // Coefficients multiplying |γ̇| and |D_tR| at radius r.
  double a_at(double r) const;
  double b_at(double r) const;
  // Raw constants of a constant profile.
  double a() const { return a0_; }
  double b() const { return b0_; }

  std::string str() const;

 private:
  bool constant_ = true;
  double a0_ = 0.0;
  double b0_ = 1.0;
  Expression a_expr_;
  Expression b_expr_;
};

}  // namespace curvrad
