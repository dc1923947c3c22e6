#pragma once

#include <numbers>

namespace lowzero {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kSqrt2 = std::numbers::sqrt2_v<double>;
// Euler-Mascheroni constant, 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;
// log(2*pi), the archimedean constant block uses it together with 2*log 2.
inline constexpr double kLog2Pi = 1.8378770664093454836;

// Constants printed in the source theorems; evaluation uses these by
// default, the audit in bounds.hpp recomputes sharper versions.
struct BoundConstants {
  double linear = 1.2874;       // additive constant in log|d_K| <= ...
  double exponential = 5.4084;  // coefficient of e^{T/2}
  double exp_remark = 5.1561;   // sharper coefficient for large degree
  double order_coeff = 17.2;    // numerator of the central-order term, /pi^2
};

inline constexpr double kTheorem1AlphaThreshold = 6.6958;
inline constexpr double kRemarkAlphaThreshold = 6.4435;
inline constexpr double kTheorem2AlphaThreshold = 12.1048;
inline constexpr double kTheorem2LogDenominator = 10.8168;  // 2 * 5.4084
inline constexpr double kTau0 = 14.1347;                    // lowest zeta zero, 6 digits
inline constexpr double kRosserPsiSlope = 1.0389;           // Psi(x) <= 1.0389 x
inline constexpr double kPrimeSumCoeff = 1.2571;            // prime-ideal sum coefficient
inline constexpr double kSupFBound = 1.21;                  // printed sup|F| ceiling
inline constexpr double kJIntegralCoeff = 0.276;            // J(F_T) <= 0.276 e^{T/2}
inline constexpr double kIIntegralCoeff = 0.1034;           // I(F_T) >= -0.1034 e^{T/2}
inline constexpr double kTLowerThreshold = 0.314;           // T >= sqrt(2) pi / tau_0

}  // namespace lowzero
