#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lowzero/lfunctions.hpp"

namespace lowzero {

struct ZeroRecord {
  double gamma = 0.0;
  double bracket_width = 0.0;
};

struct ZeroScanResult {
  std::vector<ZeroRecord> zeros;  // strictly increasing ordinates
  double t_max = 0.0;
  double grid_step = 0.0;
  // ordinates of |Z| dips below 1e-4 * scale without a sign change:
  // suspected even-order zeros, never silently refined
  std::vector<double> suspected_even_order;
};

struct LowestZeroResult {
  enum class Status { found, none_below_ceiling, central_zero_detected };
  std::optional<double> tau;
  Status status = Status::none_below_ceiling;
  double central_value = 0.0;  // completed value at t = 0
};

/// Sign-change scan of the real completed function on a uniform grid with
/// bisection refinement of every bracket to width 1e-9 plus one secant
/// polish. grid_step <= 0.05, t_max <= 100.
ZeroScanResult scan_zeros(const LFunctionSpec& spec, double t_max, double grid_step);

/// First zero from an ascending early-exit scan; the initial interval
/// (0, 1] is walked at grid_step/4 to protect against very low zeros at
/// large conductor. Default grid_step 1/64.
LowestZeroResult lowest_zero(const LFunctionSpec& spec, double t_max,
                             double grid_step = 1.0 / 64.0);

/// tau(K) for the quadratic field of fundamental discriminant d:
/// min over the zeta and L(s, chi_d) lowest zeros. |d| <= 1e12.
LowestZeroResult tau_quadratic(std::int64_t d, double t_max);

/// Threshold rule shared by the central-zero paths.
bool central_zero_classification(double value, double scale);

/// True when |Lambda(1/2)| < 1e-8 * scale; second element is the value.
std::pair<bool, double> detect_central_zero(const LFunctionSpec& spec);

/// All ordinates in (0, height], multiplicity 1 assumed; throws if the scan
/// flags a suspected even-order zero.
std::vector<double> zero_list_for_explicit_formula(const LFunctionSpec& spec, double height);

}  // namespace lowzero
