#include "mudp/interpolant.hpp"

#include <cmath>
#include <numbers>

#include "mudp/fft.hpp"
#include "mudp/kernels.hpp"

namespace mudp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Cyclic tridiagonal solve for the periodic spline moments:
//   M_{j-1} + 4 M_j + M_{j+1} = r_j  (indices mod n)
// via the Sherman-Morrison rank-one correction of a plain Thomas sweep.
std::vector<double> solve_cyclic_144(const std::vector<double>& r) {
  const int n = static_cast<int>(r.size());
  const double alpha = 1.0, beta = 1.0, b = 4.0;
  const double gamma = -b;

  std::vector<double> diag(static_cast<size_t>(n), b);
  diag[0] = b - gamma;
  diag[static_cast<size_t>(n - 1)] = b - alpha * beta / gamma;

  // Plain Thomas sweep for the (modified-diagonal) tridiagonal system with
  // unit off-diagonals.
  auto thomas_plain = [&](const std::vector<double>& rhs) {
    std::vector<double> c_prime(static_cast<size_t>(n), 0.0);
    std::vector<double> d_prime(static_cast<size_t>(n), 0.0);
    c_prime[0] = 1.0 / diag[0];
    d_prime[0] = rhs[0] / diag[0];
    for (int j = 1; j < n; ++j) {
      const double denom = diag[static_cast<size_t>(j)] - c_prime[static_cast<size_t>(j - 1)];
      c_prime[static_cast<size_t>(j)] = 1.0 / denom;
      d_prime[static_cast<size_t>(j)] =
          (rhs[static_cast<size_t>(j)] - d_prime[static_cast<size_t>(j - 1)]) / denom;
    }
    std::vector<double> x(static_cast<size_t>(n));
    x[static_cast<size_t>(n - 1)] = d_prime[static_cast<size_t>(n - 1)];
    for (int j = n - 2; j >= 0; --j)
      x[static_cast<size_t>(j)] =
          d_prime[static_cast<size_t>(j)] - c_prime[static_cast<size_t>(j)] * x[static_cast<size_t>(j + 1)];
    return x;
  };

  std::vector<double> u(static_cast<size_t>(n), 0.0);
  u[0] = gamma;
  u[static_cast<size_t>(n - 1)] = alpha;

  const std::vector<double> y = thomas_plain(r);
  const std::vector<double> z = thomas_plain(u);

  const double fact = (y[0] + beta * y[static_cast<size_t>(n - 1)] / gamma) /
                      (1.0 + z[0] + beta * z[static_cast<size_t>(n - 1)] / gamma);
  std::vector<double> x(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    x[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] - fact * z[static_cast<size_t>(j)];
  return x;
}

}  // namespace

Interpolant::Interpolant(const PeriodicFunction& f, InterpKind kind) : kind_(kind), n_(f.size()) {
  if (kind_ == InterpKind::trig) {
    const int half = n_ / 2;
    auto modes = fft::forward(f.values());
    cos_c_.resize(static_cast<size_t>(half + 1));
    sin_c_.resize(static_cast<size_t>(half + 1));
    cos_c_[0] = modes[0].real();
    sin_c_[0] = 0.0;
    for (int k = 1; k < half; ++k) {
      cos_c_[static_cast<size_t>(k)] = 2.0 * modes[static_cast<size_t>(k)].real();
      sin_c_[static_cast<size_t>(k)] = -2.0 * modes[static_cast<size_t>(k)].imag();
    }
    cos_c_[static_cast<size_t>(half)] = modes[static_cast<size_t>(half)].real();
    sin_c_[static_cast<size_t>(half)] = 0.0;
  } else {
    nodes_.assign(f.values().begin(), f.values().end());
    const int n = n_;
    const double h = 1.0 / n;
    std::vector<double> r(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double fm = nodes_[static_cast<size_t>((j - 1 + n) % n)];
      const double f0 = nodes_[static_cast<size_t>(j)];
      const double fp = nodes_[static_cast<size_t>((j + 1) % n)];
      r[static_cast<size_t>(j)] = 6.0 * (fp - 2.0 * f0 + fm) / (h * h);
    }
    moments_ = solve_cyclic_144(r);
  }
}

void Interpolant::trig_eval(double x, double* v, double* s) const {
  const double t = x - std::floor(x);
  const double theta = kTwoPi * t;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const int half = n_ / 2;

  double val = cos_c_[0];
  double slope = 0.0;
  double ck = 1.0, sk = 0.0;  // cos(k*theta), sin(k*theta)
  for (int k = 1; k <= half; ++k) {
    if ((k & 15) == 0) {
      // resync the rotation recurrence to bound drift
      ck = std::cos(theta * k);
      sk = std::sin(theta * k);
    } else {
      const double c_next = ck * ct - sk * st;
      const double s_next = sk * ct + ck * st;
      ck = c_next;
      sk = s_next;
    }
    const double a = cos_c_[static_cast<size_t>(k)];
    const double b = sin_c_[static_cast<size_t>(k)];
    val += a * ck + b * sk;
    if (s != nullptr) slope += kTwoPi * k * (b * ck - a * sk);
  }
  if (v != nullptr) *v = val;
  if (s != nullptr) *s = slope;
}

void Interpolant::spline_eval(double x, double* v, double* s) const {
  const double t = x - std::floor(x);
  const int n = n_;
  const double h = 1.0 / n;
  int i = static_cast<int>(t * n);
  if (i >= n) i = n - 1;
  const double xl = i * h;
  const double dl = t - xl;       // distance from left node
  const double dr = h - dl;       // distance to right node
  const double ml = moments_[static_cast<size_t>(i)];
  const double mr = moments_[static_cast<size_t>((i + 1) % n)];
  const double fl = nodes_[static_cast<size_t>(i)];
  const double fr = nodes_[static_cast<size_t>((i + 1) % n)];
  if (v != nullptr)
    *v = ml * dr * dr * dr / (6.0 * h) + mr * dl * dl * dl / (6.0 * h) +
         (fl - ml * h * h / 6.0) * dr / h + (fr - mr * h * h / 6.0) * dl / h;
  if (s != nullptr)
    *s = -ml * dr * dr / (2.0 * h) + mr * dl * dl / (2.0 * h) + (fr - fl) / h -
         (mr - ml) * h / 6.0;
}

double Interpolant::value(double x) const {
  double v = 0.0;
  if (kind_ == InterpKind::trig)
    trig_eval(x, &v, nullptr);
  else
    spline_eval(x, &v, nullptr);
  return v;
}

void Interpolant::value_and_slope(double x, double& value, double& slope) const {
  if (kind_ == InterpKind::trig)
    trig_eval(x, &value, &slope);
  else
    spline_eval(x, &value, &slope);
}

std::vector<double> evaluate(const PeriodicFunction& f, std::span<const double> points,
                             InterpKind kind) {
  Interpolant interp(f, kind);
  std::vector<double> out(points.size());
  kernels::eval_many(interp, points, out);
  return out;
}

}  // namespace mudp
