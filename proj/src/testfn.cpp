#include "lowzero/testfn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lowzero/constants.hpp"
#include "lowzero/quadrature.hpp"

namespace lowzero {

double f_eval(double x) {
  const double ax = std::abs(x);
  if (ax > 1.0) return 0.0;
  return (1.0 - ax) * std::cos(kPi * ax) + (3.0 / kPi) * std::sin(kPi * ax);
}

double f_T_eval(double x, double T) {
  if (!(T > 0.0)) throw std::domain_error("f_T_eval: T must be positive");
  return f_eval(x / T);
}

double fhat_closed(double u) {
  const double au = std::abs(u);
  const double pi2 = kPi * kPi;
  const double shape = 2.0 * (2.0 - u * u / pi2);
  double h;  // 2 pi cos(u/2) / (pi^2 - u^2)
  if (std::abs(u * u - pi2) < 1e-6 * pi2) {
    // cos(u/2)/(pi^2 - u^2) = sin(eps/2) / (eps (2 pi + eps)), eps = |u| - pi;
    // sin(eps/2)/eps = 1/2 - eps^2/48 + eps^4/3840 - eps^6/645120 + ...
    const double eps = au - kPi;
    const double e2 = eps * eps;
    const double s = 0.5 - e2 / 48.0 + e2 * e2 / 3840.0 - e2 * e2 * e2 / 645120.0;
    h = 2.0 * kPi * s / (2.0 * kPi + eps);
  } else {
    h = 2.0 * kPi * std::cos(0.5 * u) / (pi2 - u * u);
  }
  return shape * h * h;
}

double fhat_T(double u, double T) {
  if (!(T > 0.0)) throw std::domain_error("fhat_T: T must be positive");
  return T * fhat_closed(T * u);
}

double fhat_numeric(double u, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("fhat_numeric: tol must be positive");
  const auto integrand = [u](double x) { return f_eval(x) * std::cos(u * x); };
  const QuadratureResult r = integrate(integrand, 0.0, 1.0, 0.5 * tol);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "fhat_numeric: quadrature did not converge, achieved error " << 2.0 * r.error;
    throw std::runtime_error(msg.str());
  }
  return 2.0 * r.value;
}

SupNormResult sup_norm_F() {
  // coarse grid
  double best_x = 0.0;
  double best = std::abs(f_eval(0.0));
  const double step = 1e-4;
  for (int i = 1; i <= 10000; ++i) {
    const double x = i * step;
    const double v = std::abs(f_eval(x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  // golden-section refinement of |F| on the bracketing interval
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(0.0, best_x - step);
  double b = std::min(1.0, best_x + step);
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = std::abs(f_eval(x1));
  double f2 = std::abs(f_eval(x2));
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(f_eval(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(f_eval(x1));
    }
  }
  SupNormResult r;
  r.argmax = 0.5 * (a + b);
  r.max = std::abs(f_eval(r.argmax));
  return r;
}

}  // namespace lowzero
