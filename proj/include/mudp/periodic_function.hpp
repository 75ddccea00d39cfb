#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mudp {

// Thrown when an operation produces or receives non-finite sample values.
// The time steppers map it to a solver_failure termination.
struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real-valued function on S1 = R/Z sampled on the uniform grid x_j = j/n.
// Immutable after construction. n must be even and >= 8 so that spectral
// differentiation (Nyquist handling) is unambiguous.
class PeriodicFunction {
 public:
  explicit PeriodicFunction(std::vector<double> values);

  static PeriodicFunction zero(int n);
  static PeriodicFunction constant(int n, double c);

  // Sample f(j/n) for j = 0..n-1.
  template <class F>
  static PeriodicFunction sample(int n, F&& f) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = f(static_cast<double>(j) / n);
    return PeriodicFunction(std::move(v));
  }

  int size() const { return n_; }
  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[static_cast<size_t>(j)]; }

  PeriodicFunction& operator+=(const PeriodicFunction& g);
  PeriodicFunction& operator-=(const PeriodicFunction& g);
  PeriodicFunction& operator*=(double c);

 private:
  int n_;
  std::vector<double> values_;
};

PeriodicFunction operator+(PeriodicFunction f, const PeriodicFunction& g);
PeriodicFunction operator-(PeriodicFunction f, const PeriodicFunction& g);
PeriodicFunction operator-(const PeriodicFunction& f);
PeriodicFunction operator*(PeriodicFunction f, double c);
PeriodicFunction operator*(double c, PeriodicFunction f);
PeriodicFunction operator+(PeriodicFunction f, double c);
// Pointwise product and quotient on the grid.
PeriodicFunction operator*(const PeriodicFunction& f, const PeriodicFunction& g);
PeriodicFunction operator/(const PeriodicFunction& f, const PeriodicFunction& g);

enum class DiffScheme { spectral, finite_difference };

// Uniform-grid average (1/n) sum f_j; exact mean for band-limited data.
double mean(const PeriodicFunction& f);

// d^order/dx^order, order in {1,2,3}. Spectral: multiply mode k by (2*pi*i*k)^order
// with the Nyquist mode zeroed for odd orders. finite_difference: centered
// second-order periodic stencils.
PeriodicFunction derivative(const PeriodicFunction& f, int order,
                            DiffScheme scheme = DiffScheme::spectral);

double sup_norm(const PeriodicFunction& f);
double sup_diff(const PeriodicFunction& f, const PeriodicFunction& g);

}  // namespace mudp
