#include "lowzero/gamma.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lowzero/constants.hpp"
#include "lowzero/quadrature.hpp"
#include "lowzero/summation.hpp"

namespace lowzero {
namespace {

using cplx = std::complex<double>;

// B_{2k}/(2k (2k-1)) for k = 1..10, the Stirling correction coefficients.
constexpr double kStirling[10] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

cplx log_gamma_upper_half(cplx z) {
  // shift until |z + m| >= 10 so the series through B_20 reaches ~1e-19
  double m = 0.0;
  const double im2 = z.imag() * z.imag();
  if (im2 < 100.0) {
    const double need = std::sqrt(100.0 - im2) - z.real();
    if (need > 0.0) m = std::ceil(need);
  } else if (z.real() < 0.0) {
    m = std::ceil(-z.real());  // keep Re(z + m) >= 0 for the principal logs
  }
  const cplx zs = z + m;
  const cplx log_zs = std::log(zs);
  cplx result = (zs - 0.5) * log_zs - zs + 0.5 * kLog2Pi;
  const cplx inv2 = 1.0 / (zs * zs);
  cplx pow = 1.0 / zs;
  for (double c : kStirling) {
    result += c * pow;
    pow *= inv2;
  }
  for (double j = 0.0; j < m; ++j) {
    const cplx zj = z + j;
    if (std::abs(zj) < 1e-12)
      throw std::domain_error("log_gamma: argument at or too close to a pole");
    result -= std::log(zj);
  }
  return result;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() < 0.0) return std::conj(log_gamma_upper_half(std::conj(z)));
  return log_gamma_upper_half(z);
}

std::complex<double> gamma_complex(std::complex<double> z) { return std::exp(log_gamma(z)); }

namespace {

// Gamma(z,x) = e^{-x} int_0^inf (x+s)^{z-1} e^{-s} ds: the shifted contour
// integrand oscillates at rate |Im z|/x <= ~1.2 in the zone where it is
// used, so adaptive Gauss-Kronrod resolves it cheaply.
cplx gamma_upper_contour(cplx z, double x) {
  const double upper = 45.0 + 2.0 * std::log1p(x);
  const double scale =
      z.real() <= 1.0 ? std::pow(x, z.real() - 1.0) : std::pow(x + upper, z.real() - 1.0);
  StableSum re_acc;  // accumulate across panels
  StableSum im_acc;
  // fixed panels keep the oscillation per panel bounded
  const double panel = std::max(2.0, x / std::max(1.0, std::abs(z.imag())));
  double lo = 0.0;
  while (lo < upper) {
    const double hi = std::min(upper, lo + panel);
    const auto re_f = [&](double s) {
      const cplx v = std::exp((z - 1.0) * std::log(x + s) - s);
      return v.real();
    };
    const auto im_f = [&](double s) {
      const cplx v = std::exp((z - 1.0) * std::log(x + s) - s);
      return v.imag();
    };
    const QuadratureResult r_re = integrate(re_f, lo, hi, 1e-16 * scale, 4000);
    const QuadratureResult r_im = integrate(im_f, lo, hi, 1e-16 * scale, 4000);
    if (!r_re.converged || !r_im.converged)
      throw std::runtime_error("gamma_upper: contour quadrature failed to converge");
    re_acc.add(r_re.value);
    im_acc.add(r_im.value);
    lo = hi;
  }
  return std::exp(-x) * cplx(re_acc.value(), im_acc.value());
}

}  // namespace

std::complex<double> gamma_upper(std::complex<double> z, double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_upper: x must be positive");
  constexpr int kMaxIter = 500;
  // the continued fraction loses accuracy for x below ~2|Im z|, the lower
  // series beyond ~0.9|Im z|; the contour integral covers the gap
  const double series_limit = std::max(z.real() + 1.0, 0.9 * std::abs(z.imag()));
  const double cf_limit = std::max(z.real() + 1.0, 2.2 * std::abs(z.imag()));
  if (x > series_limit && x < cf_limit) return gamma_upper_contour(z, x);
  if (x <= series_limit) {
    // lower series: gamma(z,x) = x^z e^{-x} sum_k x^k / (z (z+1) ... (z+k));
    // here |Gamma(z)| is never small against gamma(z,x), so the subtraction
    // Gamma(z) - gamma(z,x) keeps full precision.
    cplx term = 1.0 / z;
    cplx sum = term;
    int k = 1;
    for (; k <= kMaxIter; ++k) {
      term *= x / (z + static_cast<double>(k));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    if (k > kMaxIter) {
      std::ostringstream msg;
      msg << "gamma_upper: series did not converge at z=(" << z.real() << "," << z.imag()
          << "), x=" << x << ", last relative term " << std::abs(term) / std::abs(sum);
      throw std::runtime_error(msg.str());
    }
    const cplx lower = std::exp(z * std::log(x) - x) * sum;
    return gamma_complex(z) - lower;
  }

  // modified Lentz on Gamma(z,x) = e^{-x} x^z / (x+1-z - 1(1-z)/(x+3-z - ...))
  constexpr double kTiny = 1e-290;
  cplx b = x + 1.0 - z;
  cplx c = 1.0 / kTiny;
  cplx d = 1.0 / b;
  cplx h = d;
  int i = 1;
  double delta_err = 1.0;
  for (; i <= kMaxIter; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - z);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const cplx delta = d * c;
    h *= delta;
    delta_err = std::abs(delta - 1.0);
    if (delta_err < 1e-16) break;
  }
  if (i > kMaxIter && delta_err > 1e-10) {
    std::ostringstream msg;
    msg << "gamma_upper: continued fraction stalled at z=(" << z.real() << "," << z.imag()
        << "), x=" << x << ", achieved accuracy " << delta_err;
    throw std::runtime_error(msg.str());
  }
  return std::exp(-x + z * std::log(x)) * h;
}

}  // namespace lowzero
