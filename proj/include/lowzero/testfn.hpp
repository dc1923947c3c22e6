#pragma once

namespace lowzero {

// The compactly supported even test function
//   F(x) = (1 - |x|) cos(pi x) + (3/pi) sin(pi |x|)   on |x| <= 1, 0 outside,
// its scaled family F_T(x) = F(x/T), and its Fourier transform
//   Fhat(u) = 2 (2 - u^2/pi^2) [2 pi cos(u/2) / (pi^2 - u^2)]^2
// in the angular-frequency convention Fhat(u) = int F(x) e^{iux} dx.

double f_eval(double x);
double f_T_eval(double x, double T);  // T > 0

/// Closed form of Fhat; the removable singularity at |u| = pi is evaluated
/// through a series for cos(u/2)/(pi^2 - u^2) inside a narrow guard band.
double fhat_closed(double u);
double fhat_T(double u, double T);  // T * Fhat(T u), T > 0

/// Independent oracle: adaptive quadrature of 2 * int_0^1 F(x) cos(ux) dx.
/// Throws if the requested tolerance is not reached (message carries the
/// achieved estimate).
double fhat_numeric(double u, double tol);

struct SupNormResult {
  double argmax = 0.0;
  double max = 0.0;
};

/// Global maximum of |F| on [0,1]: dense grid (step 1e-4) plus
/// golden-section refinement to 1e-10.
SupNormResult sup_norm_F();

}  // namespace lowzero
