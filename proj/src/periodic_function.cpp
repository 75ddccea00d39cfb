#include "mudp/periodic_function.hpp"

#include <algorithm>
#include <numbers>

#include "mudp/fft.hpp"

namespace mudp {

namespace {

void check_same_size(const PeriodicFunction& f, const PeriodicFunction& g, const char* op) {
  if (f.size() != g.size())
    throw std::invalid_argument(std::string(op) + ": grid sizes differ (" +
                                std::to_string(f.size()) + " vs " + std::to_string(g.size()) + ")");
}

std::vector<double> checked(std::vector<double> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw NonFiniteError("PeriodicFunction: non-finite sample value");
  return v;
}

}  // namespace

PeriodicFunction::PeriodicFunction(std::vector<double> values)
    : n_(static_cast<int>(values.size())), values_(checked(std::move(values))) {
  if (n_ < 8 || n_ % 2 != 0)
    throw std::invalid_argument("PeriodicFunction: grid size must be even and >= 8, got " +
                                std::to_string(n_));
}

PeriodicFunction PeriodicFunction::zero(int n) {
  return PeriodicFunction(std::vector<double>(static_cast<size_t>(n), 0.0));
}

PeriodicFunction PeriodicFunction::constant(int n, double c) {
  return PeriodicFunction(std::vector<double>(static_cast<size_t>(n), c));
}

PeriodicFunction& PeriodicFunction::operator+=(const PeriodicFunction& g) {
  check_same_size(*this, g, "operator+");
  for (int j = 0; j < n_; ++j) values_[static_cast<size_t>(j)] += g[j];
  for (double x : values_)
    if (!std::isfinite(x)) throw NonFiniteError("PeriodicFunction: non-finite sum");
  return *this;
}

PeriodicFunction& PeriodicFunction::operator-=(const PeriodicFunction& g) {
  check_same_size(*this, g, "operator-");
  for (int j = 0; j < n_; ++j) values_[static_cast<size_t>(j)] -= g[j];
  for (double x : values_)
    if (!std::isfinite(x)) throw NonFiniteError("PeriodicFunction: non-finite difference");
  return *this;
}

PeriodicFunction& PeriodicFunction::operator*=(double c) {
  for (double& x : values_) x *= c;
  for (double x : values_)
    if (!std::isfinite(x)) throw NonFiniteError("PeriodicFunction: non-finite scale");
  return *this;
}

PeriodicFunction operator+(PeriodicFunction f, const PeriodicFunction& g) { return f += g; }
PeriodicFunction operator-(PeriodicFunction f, const PeriodicFunction& g) { return f -= g; }
PeriodicFunction operator-(const PeriodicFunction& f) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x = -x;
  return PeriodicFunction(std::move(v));
}
PeriodicFunction operator*(PeriodicFunction f, double c) { return f *= c; }
PeriodicFunction operator*(double c, PeriodicFunction f) { return f *= c; }
PeriodicFunction operator+(PeriodicFunction f, double c) {
  return f += PeriodicFunction::constant(f.size(), c);
}

PeriodicFunction operator*(const PeriodicFunction& f, const PeriodicFunction& g) {
  check_same_size(f, g, "pointwise product");
  std::vector<double> v(static_cast<size_t>(f.size()));
  for (int j = 0; j < f.size(); ++j) v[static_cast<size_t>(j)] = f[j] * g[j];
  return PeriodicFunction(std::move(v));
}

PeriodicFunction operator/(const PeriodicFunction& f, const PeriodicFunction& g) {
  check_same_size(f, g, "pointwise quotient");
  std::vector<double> v(static_cast<size_t>(f.size()));
  for (int j = 0; j < f.size(); ++j) v[static_cast<size_t>(j)] = f[j] / g[j];
  return PeriodicFunction(std::move(v));
}

double mean(const PeriodicFunction& f) {
  double s = 0.0;
  for (double x : f.values()) s += x;
  return s / f.size();
}

namespace {

PeriodicFunction fd_derivative(const PeriodicFunction& f, int order) {
  const int n = f.size();
  const double h = 1.0 / n;
  std::vector<double> v(static_cast<size_t>(n));
  auto at = [&](int j) { return f[((j % n) + n) % n]; };
  for (int j = 0; j < n; ++j) {
    double d = 0.0;
    switch (order) {
      case 1: d = (at(j + 1) - at(j - 1)) / (2.0 * h); break;
      case 2: d = (at(j + 1) - 2.0 * at(j) + at(j - 1)) / (h * h); break;
      case 3: d = (at(j + 2) - 2.0 * at(j + 1) + 2.0 * at(j - 1) - at(j - 2)) / (2.0 * h * h * h); break;
      default: break;
    }
    v[static_cast<size_t>(j)] = d;
  }
  return PeriodicFunction(std::move(v));
}

}  // namespace

PeriodicFunction derivative(const PeriodicFunction& f, int order, DiffScheme scheme) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("derivative: order must be 1, 2 or 3, got " + std::to_string(order));
  if (scheme == DiffScheme::finite_difference) return fd_derivative(f, order);

  const int n = f.size();
  const int half = n / 2;
  auto modes = fft::forward(f.values());
  for (int k = 0; k <= half; ++k) {
    const double w = 2.0 * std::numbers::pi * k;
    auto& m = modes[static_cast<size_t>(k)];
    switch (order) {
      case 1:
        m = (k == half) ? std::complex<double>(0.0) : std::complex<double>(0.0, w) * m;
        break;
      case 2:
        m *= -w * w;
        break;
      case 3:
        m = (k == half) ? std::complex<double>(0.0) : std::complex<double>(0.0, -w * w * w) * m;
        break;
      default:
        break;
    }
  }
  return PeriodicFunction(fft::inverse(modes, n));
}

double sup_norm(const PeriodicFunction& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

double sup_diff(const PeriodicFunction& f, const PeriodicFunction& g) {
  check_same_size(f, g, "sup_diff");
  double m = 0.0;
  for (int j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j] - g[j]));
  return m;
}

}  // namespace mudp
