#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace lowzero {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // achieved estimate
  bool converged = false;
  int subdivisions = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kK15Weights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss weights attach to the even-indexed nodes 0, 2, 4, 6.
inline constexpr double kG7Weights[4] = {0.417959183673469, 0.381830050505119,
                                         0.279705391489277, 0.129484966168870};

template <class F>
void gk15(const F& f, double a, double b, double* value, double* error) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double k15 = kK15Weights[0] * f0;
  double g7 = kG7Weights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double fi = f(mid + dx) + f(mid - dx);
    k15 += kK15Weights[i] * fi;
    if (i % 2 == 0) g7 += kG7Weights[i / 2] * fi;
  }
  k15 *= half;
  g7 *= half;
  const double diff = std::abs(k15 - g7);
  // QUADPACK-style sharpened estimate, floored near machine precision
  double err = diff;
  if (diff > 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
  err = std::max(err, 5e-17 * std::abs(k15));
  *value = k15;
  *error = err;
}

}  // namespace detail

// Globally adaptive bisection: always splits the subinterval with the
// largest error estimate until the total estimate meets abs_tol.
template <class F>
QuadratureResult integrate(const F& f, double a, double b, double abs_tol,
                           int max_subdivisions = 10000) {
  struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
  };
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::priority_queue<Interval> queue;
  Interval whole{a, b, 0.0, 0.0};
  detail::gk15(f, a, b, &whole.value, &whole.error);
  double total_value = whole.value;
  double total_error = whole.error;
  queue.push(whole);
  int splits = 0;
  while (total_error > abs_tol && splits < max_subdivisions) {
    const Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution, keep its estimate
      total_value = worst.value;
      total_error = worst.error;
      for (std::priority_queue<Interval> rest = queue; !rest.empty(); rest.pop()) {
        total_value += rest.top().value;
        total_error += rest.top().error;
      }
      queue.push(worst);
      break;
    }
    Interval left{worst.a, mid, 0.0, 0.0};
    Interval right{mid, worst.b, 0.0, 0.0};
    detail::gk15(f, left.a, left.b, &left.value, &left.error);
    detail::gk15(f, right.a, right.b, &right.value, &right.error);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  // re-accumulate to shed the incremental-update rounding
  {
    double v = 0.0, e = 0.0;
    for (; !queue.empty(); queue.pop()) {
      v += queue.top().value;
      e += queue.top().error;
    }
    total_value = v;
    total_error = e;
  }
  result.value = total_value;
  result.error = total_error;
  result.converged = total_error <= abs_tol;
  result.subdivisions = splits;
  return result;
}

}  // namespace lowzero
