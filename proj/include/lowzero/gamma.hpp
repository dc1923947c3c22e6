#pragma once

#include <complex>

namespace lowzero {

/// log Gamma(z), the continuous branch with log Gamma real on the positive
/// real axis (NOT the principal branch of log of Gamma). Stirling series
/// with a recurrence shift; poles z = 0, -1, -2, ... are rejected.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma_complex(std::complex<double> z);

/// Upper incomplete gamma Gamma(z, x) = int_x^inf t^{z-1} e^{-t} dt for
/// x > 0, to ~1e-13 relative accuracy inside Re z in [-2, 5], |Im z| <= 100.
/// Lower power series for x <= max(Re z + 1, |Im z|), modified Lentz
/// continued fraction beyond.
std::complex<double> gamma_upper(std::complex<double> z, double x);

}  // namespace lowzero
