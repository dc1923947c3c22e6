#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "lowzero/constants.hpp"
#include "lowzero/lfunctions.hpp"
#include "lowzero/quadrature.hpp"
#include "oracles.hpp"

using namespace lowzero;
using cplx = std::complex<double>;

TEST_CASE("zeta at closed-form points") {
  CHECK(zeta_em(cplx(2.0, 0.0), 1e-12).real() ==
        doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(zeta_em(cplx(2.0, 0.0), 1e-12).imag() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(zeta_em(cplx(0.5, 0.0), 1e-12).real() == doctest::Approx(-1.4603545088).epsilon(1e-9));
}

TEST_CASE("zeta against the eta-series oracle on the critical line") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ts(-30.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const double t = ts(rng);
    const cplx got = zeta_em(cplx(0.5, t), 1e-12);
    const cplx want = oracles::borwein_zeta(cplx(0.5, t));
    CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
  }
  // and off the line inside the envelope
  std::uniform_real_distribution<double> sigmas(0.1, 2.0);
  for (int i = 0; i < 50; ++i) {
    const cplx s(sigmas(rng), ts(rng));
    if (std::abs(s - cplx(1.0, 0.0)) < 0.05) continue;
    CHECK(std::abs(zeta_em(s, 1e-12) - oracles::borwein_zeta(s)) < 1e-10);
  }
}

TEST_CASE("zeta_em domain handling") {
  CHECK_THROWS_AS(zeta_em(cplx(1.0, 0.0), 1e-10), std::domain_error);
  CHECK_THROWS_AS(zeta_em(cplx(2.5, 0.0), 1e-10), std::domain_error);
  CHECK_THROWS_AS(zeta_em(cplx(0.5, 101.0), 1e-10), std::domain_error);
  CHECK_THROWS_AS(zeta_em(cplx(0.5, 1.0), 1e-22), std::runtime_error);
}

TEST_CASE("riemann_siegel_theta basics") {
  CHECK(riemann_siegel_theta(0.0) == 0.0);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ts(0.0, 90.0);
  for (int i = 0; i < 50; ++i) {
    const double t = ts(rng);
    CHECK(riemann_siegel_theta(-t) == doctest::Approx(-riemann_siegel_theta(t)).epsilon(1e-14));
  }
}

TEST_CASE("theta matches quadrature of its derivative") {
  // theta'(t) = Re psi(1/4 + it/2)/2 - ln(pi)/2 via the digamma oracle
  const auto theta_prime = [](double t) {
    return 0.5 * oracles::digamma(cplx(0.25, 0.5 * t)).real() - 0.5 * std::log(kPi);
  };
  const QuadratureResult r = integrate(theta_prime, 0.0, 20.0, 1e-11);
  REQUIRE(r.converged);
  CHECK(riemann_siegel_theta(20.0) == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("hardy Z for zeta") {
  const LFunctionSpec spec = LFunctionSpec::zeta();
  const CompletedValue at0 = hardy_z(spec, 0.0);
  CHECK(at0.lambda_value < 0.0);  // zeta(1/2) < 0, theta(0) = 0
  CHECK(at0.lambda_value == doctest::Approx(-1.4603545088).epsilon(1e-9));
  CHECK(at0.err_estimate < 1e-10);
  // near the first zero the modulus is tiny
  const CompletedValue near_zero = hardy_z(spec, 14.134725);
  CHECK(std::abs(near_zero.lambda_value) < 1e-5);
}

TEST_CASE("completed Lambda against the Hurwitz oracle at small conductor") {
  for (std::int64_t d : {-3, -4, 5, -8, 8, 12, -20, 21}) {
    const KroneckerCharacter chi(d);
    const LEvaluator eval(LFunctionSpec::dirichlet(chi));
    for (double t : {0.0, 0.35, 1.0, 2.5, 7.0, 13.0, 20.0}) {
      const CompletedValue got = eval(t, 1e-9);
      const cplx want = oracles::completed_l_hurwitz(t, chi);
      REQUIRE(std::abs(want.imag()) < 1e-9 * std::abs(want) + 1e-12);
      CHECK(std::abs(got.lambda_value - want.real()) <
            1e-10 * (std::abs(want.real()) + got.scale));
    }
  }
}

TEST_CASE("central value of the conductor-4 character is positive") {
  const KroneckerCharacter chi(-4);
  const CompletedValue v = hardy_z(LFunctionSpec::dirichlet(chi), 0.0);
  CHECK(v.lambda_value > 0.0);
  // (4/pi)^{3/4} Gamma(3/4) L(1/2, chi_-4) with L(1/2) = beta(1/2)
  const cplx oracle = oracles::completed_l_hurwitz(0.0, chi);
  CHECK(v.lambda_value == doctest::Approx(oracle.real()).epsilon(1e-10));
}

TEST_CASE("conjugate symmetry in t") {
  const KroneckerCharacter chi(-2042040);
  const LEvaluator eval(LFunctionSpec::dirichlet(chi));
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ts(0.0, 3.0);
  for (int i = 0; i < 8; ++i) {
    const double t = ts(rng);
    CHECK(eval(t).lambda_value == doctest::Approx(eval(-t).lambda_value).epsilon(1e-12));
  }
}

TEST_CASE("functional equation: swapped AFE roles agree") {
  for (std::int64_t d : {-4, 5, -2042040}) {
    const KroneckerCharacter chi(d);
    const LEvaluator eval(LFunctionSpec::dirichlet(chi));
    for (double t : {0.0, 0.2, 1.0, 5.0}) {
      const CompletedValue direct = eval(t, 1e-9);
      const CompletedValue swapped = eval.evaluate_swapped(t, 1e-9);
      CHECK(std::abs(direct.lambda_value - swapped.lambda_value) <=
            1e-10 * (std::abs(direct.lambda_value) + direct.scale));
    }
  }
}

TEST_CASE("imaginary residual across the t grid") {
  for (std::int64_t d : {-3, -4, 8, -2042040}) {
    const KroneckerCharacter chi(d);
    const LEvaluator eval(LFunctionSpec::dirichlet(chi));
    for (int i = 0; i <= 40; ++i) {
      const double t = 0.5 * i;
      const CompletedValue v = eval(t, 1e-9);
      CHECK(v.err_estimate <= 1e-10 * (std::abs(v.lambda_value) + v.scale));
    }
  }
}

TEST_CASE("AFE truncation self-consistency") {
  for (std::int64_t d : {-4, -2042040}) {
    const KroneckerCharacter chi(d);
    const LEvaluator eval(LFunctionSpec::dirichlet(chi));
    for (double t : {0.0, 1.0, 9.0}) {
      const CompletedValue base = eval(t, 1e-9);
      const CompletedValue extended = eval.evaluate_extended(t, 1e-9, 0.0);
      CHECK(std::abs(base.lambda_value - extended.lambda_value) <= 1e-12 * base.scale);
      CHECK(extended.n_terms >= base.n_terms);
    }
  }
}

TEST_CASE("character coefficient cache") {
  const KroneckerCharacter chi(-4);
  const auto cache = char_coefficient_cache(chi, 8);
  CHECK(cache[1] == 1);
  CHECK(cache[2] == 0);
  CHECK(cache[3] == -1);
  CHECK(cache[5] == 1);
  CHECK(cache[7] == -1);
  CHECK_THROWS_AS(char_coefficient_cache(chi, 20'000'000u), std::invalid_argument);
  // multiplicativity spot checks across many fundamental discriminants
  std::mt19937_64 rng(53);
  int tested = 0;
  while (tested < 100) {
    const std::int64_t d = static_cast<std::int64_t>(rng() % 4000) - 2000;
    if (!is_fundamental_discriminant(d)) continue;
    const KroneckerCharacter c(d);
    const auto values = c.values_up_to(6);
    CHECK(values[6] == values[2] * values[3]);
    ++tested;
  }
}

TEST_CASE("spec construction rules") {
  const LFunctionSpec z = LFunctionSpec::zeta();
  CHECK(z.conductor == 1);
  CHECK(z.has_pole);
  CHECK(z.parity == 0);
  const KroneckerCharacter chi(-8);
  const LFunctionSpec l = LFunctionSpec::dirichlet(chi);
  CHECK(l.conductor == 8);
  CHECK(l.parity == 1);
  CHECK_FALSE(l.has_pole);
  CHECK(l.root_number == 1);
  CHECK_THROWS_AS(hardy_z(l, 101.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(hardy_z(l, 1.0, 1e-11), std::domain_error);
}
