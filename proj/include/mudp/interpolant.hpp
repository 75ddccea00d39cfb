#pragma once

#include <vector>

#include "mudp/periodic_function.hpp"

namespace mudp {

enum class InterpKind { trig, spline };

// One-period interpolant of a PeriodicFunction, evaluable anywhere on R
// (arguments are reduced mod 1). The trigonometric interpolant is the
// band-limited one matching the spectral calculus (Nyquist term is the pure
// cosine); the alternate is the periodic cubic spline.
class Interpolant {
 public:
  Interpolant(const PeriodicFunction& f, InterpKind kind);

  double value(double x) const;
  void value_and_slope(double x, double& value, double& slope) const;

  InterpKind kind() const { return kind_; }
  int size() const { return n_; }

 private:
  void trig_eval(double x, double* v, double* s) const;
  void spline_eval(double x, double* v, double* s) const;

  InterpKind kind_;
  int n_;
  // trig: cosine/sine coefficients for modes 0..n/2.
  std::vector<double> cos_c_, sin_c_;
  // spline: node values and second-derivative moments.
  std::vector<double> nodes_, moments_;
};

// Values of the interpolant of f at arbitrary points (wrapped mod 1).
std::vector<double> evaluate(const PeriodicFunction& f, std::span<const double> points,
                             InterpKind kind = InterpKind::trig);

}  // namespace mudp
