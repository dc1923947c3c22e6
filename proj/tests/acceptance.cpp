// Acceptance harness: one line per criterion, nonzero exit on any failure.
// --slow additionally runs the two large-conductor lowest-zero columns.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "lowzero/bounds.hpp"
#include "lowzero/constants.hpp"
#include "lowzero/explicit_formula.hpp"
#include "lowzero/fields.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/testfn.hpp"
#include "lowzero/zeros.hpp"

using namespace lowzero;

namespace {

struct Row {
  const char* spec;
  double alpha;
  double tau;  // NaN when out of scope
  double bound;
  bool slow;
};

const Row kRows[] = {
    {"x^2+510510", 7.26472993307674, 0.195366057287247, 22.2098243056698, false},
    {"x^2+9699690", 8.73694942265996, 0.250485767971509, 6.93766313396318, false},
    {"x^2+223092870", 10.3046965306245, 0.282126995483731, 4.34561699877460, false},
    {"x^2+6469693230", 11.9883444456178, 0.223870166465309, 3.25543786648311, true},
    {"x^2+200560490130", 13.7053380478603, 0.0869456767128933, 2.67260773966497, true},
    {"x^3+30030", 7.97191372931969, std::nan(""), 10.4864035098435, false},
    {"x^4+30030", 9.11875848185292, std::nan(""), 6.00093283699129, false},
};

int failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string name, double budget_seconds)
      : number_(number), name_(std::move(name)), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) {
      problems_.push_back(detail);
    }
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    bool ok = problems_.empty();
    std::string note;
    if (elapsed > budget_) {
      ok = false;
      note = " [over budget " + std::to_string(budget_) + "s]";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number_, name_.c_str(),
                elapsed, note.c_str());
    for (const std::string& p : problems_) std::printf("       - %s\n", p.c_str());
    if (!ok) ++failures;
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void criterion_1_alpha() {
  Criterion c(1, "alpha column matches to 1e-9 relative", 1.0);
  for (const Row& row : kRows) {
    const NumberField f = parse_field_spec(row.spec);
    const double rel = std::abs(f.alpha - row.alpha) / row.alpha;
    c.expect(rel <= 1e-9, std::string(row.spec) + ": alpha " + fmt(f.alpha) + " vs " +
                              fmt(row.alpha) + " rel " + fmt(rel));
  }
  c.finish();
}

void criterion_2_bounds() {
  Criterion c(2, "first-theorem bound column matches to 1e-3 relative", 1.0);
  for (const Row& row : kRows) {
    const NumberField f = parse_field_spec(row.spec);
    const auto bound = theorem1_bound(f.alpha);
    if (!bound.has_value()) {
      c.expect(false, std::string(row.spec) + ": bound inapplicable");
      continue;
    }
    const double rel = std::abs(*bound - row.bound) / row.bound;
    c.expect(rel <= 1e-3, std::string(row.spec) + ": bound " + fmt(*bound) + " vs " +
                              fmt(row.bound) + " rel " + fmt(rel));
  }
  c.finish();
}

void criterion_3_tau(bool slow) {
  {
    Criterion c(3, "tau column rows 1-3 to 1e-6 absolute", 60.0);
    for (int i = 0; i < 3; ++i) {
      const Row& row = kRows[i];
      const NumberField f = parse_field_spec(row.spec);
      const LowestZeroResult r = tau_quadratic(f.disc.to_int64(), 2.0);
      if (!r.tau.has_value()) {
        c.expect(false, std::string(row.spec) + ": no zero found");
        continue;
      }
      const double err = std::abs(*r.tau - row.tau);
      c.expect(err <= 1e-6, std::string(row.spec) + ": tau " + fmt(*r.tau) + " vs " +
                                fmt(row.tau) + " abs " + fmt(err));
      c.expect(*r.tau < kTau0, std::string(row.spec) + ": tau above tau_0");
      const auto bound = theorem1_bound(f.alpha);
      c.expect(bound.has_value() && *r.tau < *bound,
               std::string(row.spec) + ": tau does not sit below the bound");
    }
    c.finish();
  }
  if (!slow) {
    std::printf("[SKIP] criterion 3 (slow part): rows 4-5 need --slow\n");
    return;
  }
  Criterion c(3, "tau column rows 4-5 to 1e-6 absolute (--slow)", 900.0);
  for (int i = 3; i < 5; ++i) {
    const Row& row = kRows[i];
    std::fprintf(stderr, "acceptance: locating lowest zero for %s\n", row.spec);
    const NumberField f = parse_field_spec(row.spec);
    const LowestZeroResult r = tau_quadratic(f.disc.to_int64(), 2.0);
    if (!r.tau.has_value()) {
      c.expect(false, std::string(row.spec) + ": no zero found");
      continue;
    }
    const double err = std::abs(*r.tau - row.tau);
    c.expect(err <= 1e-6, std::string(row.spec) + ": tau " + fmt(*r.tau) + " vs " + fmt(row.tau) +
                              " abs " + fmt(err));
  }
  c.finish();
}

void criterion_4_tau0() {
  Criterion c(4, "lowest zeta zero at 14.1347 +- 1e-4, bracket 1e-9", 10.0);
  const ZeroScanResult scan = scan_zeros(LFunctionSpec::zeta(), 15.0, 1.0 / 64.0);
  if (scan.zeros.empty()) {
    c.expect(false, "no zero below 15");
  } else {
    c.expect(std::abs(scan.zeros[0].gamma - 14.1347) <= 1e-4,
             "gamma " + fmt(scan.zeros[0].gamma));
    c.expect(scan.zeros[0].bracket_width <= 1e-9,
             "bracket " + fmt(scan.zeros[0].bracket_width));
  }
  c.finish();
}

void criterion_5_explicit_formula() {
  Criterion c(5, "explicit-formula identity closes two-sidedly", 120.0);
  const MangoldtTable table = MangoldtTable::build(1000);
  for (double T : {1.0, 2.0}) {
    const ExplicitFormulaBreakdown at100 =
        weil_residual(NumberField::rationals(), nullptr, T, 100.0, table);
    const ExplicitFormulaBreakdown at50 =
        weil_residual(NumberField::rationals(), nullptr, T, 50.0, table);
    c.expect(std::abs(at100.residual) <= 0.05,
             "Q T=" + fmt(T) + ": |residual| " + fmt(std::abs(at100.residual)));
    c.expect(std::abs(at100.residual) <= std::abs(at50.residual) + 1e-9,
             "Q T=" + fmt(T) + ": residual grew with zero height");
  }
  const KroneckerCharacter chi(-4);
  const NumberField gauss = parse_field_spec("x^2+1");
  const ExplicitFormulaBreakdown b = weil_residual(gauss, &chi, 2.0, 60.0, table);
  c.expect(std::abs(b.residual) <= 0.1, "d=-4 T=2: |residual| " + fmt(std::abs(b.residual)));
  c.finish();
}

void criterion_6_constants() {
  Criterion c(6, "constant audit: sup|F|, integral suprema, assembled constants", 60.0);
  const ConstantAudit audit = derive_inequality_constants(1e-8);
  c.expect(audit.sup_F >= 1.2095 && audit.sup_F <= 1.2100,
           "sup|F| " + fmt(audit.sup_F) + " outside [1.2095, 1.2100]");
  c.expect(audit.sup_F <= kSupFBound, "sup|F| exceeds the printed 1.21");
  c.expect(audit.j_const <= kJIntegralCoeff,
           "sup J e^{-T/2} " + fmt(audit.j_const) + " > 0.276");
  // with I(F_T) as defined (head plus tail) the scaled supremum sits far
  // inside the printed constant; the head-based audit value is reported too
  double sup_i_full = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double T = kTLowerThreshold * std::pow(30.0 / kTLowerThreshold, i / 600.0);
    sup_i_full = std::max(sup_i_full, -i_integral(T, 1e-10) * std::exp(-0.5 * T));
  }
  c.expect(sup_i_full <= kIIntegralCoeff,
           "sup -I e^{-T/2} " + fmt(sup_i_full) + " > 0.1034");
  c.expect(std::abs(audit.assembled_exp_const - 5.4084) <= 2e-3,
           "assembled exp " + fmt(audit.assembled_exp_const));
  c.expect(std::abs(audit.assembled_lin_const - 1.2874) <= 2e-3,
           "assembled lin " + fmt(audit.assembled_lin_const));
  c.finish();
  std::printf("       audit: j_const=%s i_const(head)=%s sup_i(full)=%s assembled=(%s, %s)\n",
              fmt(audit.j_const).c_str(), fmt(audit.i_const).c_str(), fmt(sup_i_full).c_str(),
              fmt(audit.assembled_exp_const).c_str(), fmt(audit.assembled_lin_const).c_str());
}

void criterion_7_inequalities() {
  Criterion c(7, "inequality suites: Lambda-sum bound, threshold lemma, transform oracle",
              120.0);
  const MangoldtTable table = MangoldtTable::build(100'000'000ull);
  for (double T = 0.5; T <= 18.5; T += 0.5) {
    if (std::exp(T) > 1e8) break;
    const double sum = lambda_weighted_sum(T, table);
    const double bound = kRosserPsiSlope * (2.0 * std::exp(0.5 * T) - 1.0);
    c.expect(sum <= bound, "T=" + fmt(T) + ": Lambda sum " + fmt(sum) + " > " + fmt(bound));
  }
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coeffs(0.01, 50.0);
  std::uniform_real_distribution<double> ts(0.001, 20.0);
  int done = 0;
  int violations = 0;
  while (done < 10000) {
    const double a = coeffs(rng);
    const double b = coeffs(rng);
    const double cc = coeffs(rng);
    if (!(cc > 2.0 * b)) continue;
    const double T = ts(rng);
    if (a * T + b * std::exp(0.5 * T) < cc) continue;
    if (T < lemma3_threshold(a, b, cc) - 1e-12) ++violations;
    ++done;
  }
  c.expect(violations == 0, "threshold lemma violations: " + std::to_string(violations));
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double u = 0.01 * i;
    worst = std::max(worst, std::abs(fhat_closed(u) - fhat_numeric(u, 1e-10)));
  }
  c.expect(worst <= 1e-8, "transform closed-numeric sup " + fmt(worst));
  c.finish();
}

void criterion_8_neugebauer() {
  Criterion c(8, "unconditional comparison bound clamps at 60 on every row", 1.0);
  for (const Row& row : kRows) {
    const NumberField f = parse_field_spec(row.spec);
    const double value = neugebauer_bound(f.alpha);
    c.expect(value == 60.0, std::string(row.spec) + ": " + fmt(value));
  }
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;

  criterion_1_alpha();
  criterion_2_bounds();
  criterion_3_tau(slow);
  criterion_4_tau0();
  criterion_5_explicit_formula();
  criterion_6_constants();
  criterion_7_inequalities();
  criterion_8_neugebauer();

  if (failures == 0) {
    std::printf("acceptance: all criteria passed%s\n",
                slow ? " (including --slow)" : " (rows 4-5 tau skipped without --slow)");
    return 0;
  }
  std::printf("acceptance: %d criterion group(s) failed\n", failures);
  return 1;
}
