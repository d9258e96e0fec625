#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dwt/analytic.hpp"
#include "dwt/fixtures.hpp"
#include "dwt/units.hpp"

using namespace dwt;

namespace {
constexpr double kLn10 = std::numbers::ln10;

double period_ms(int n, int p) {
  namespace rb = fixtures::rb87;
  return (resonance_period(n, p, rb::kZeta, rb::kInteractionNanoKelvin) *
          LogScalar::from_double(PhysicalUnits::ms_per_natural_time()))
      .to_double();
}
}  // namespace

TEST_CASE("regime classification") {
  CHECK(classify_regime(7, 0.1, 1.0).kind == RegimeTag::Kind::kFock);
  CHECK(classify_regime(7, 0.2, 1.0).kind == RegimeTag::Kind::kFock);
  CHECK(classify_regime(7, 0.21, 1.0).kind == RegimeTag::Kind::kIntermediate);
  CHECK(classify_regime(10, 50.0, 1.0).kind == RegimeTag::Kind::kJosephson);
  CHECK(classify_regime(10, 49.0, 1.0).kind == RegimeTag::Kind::kIntermediate);
  CHECK(classify_regime(10, 1.0, 0.0).kind == RegimeTag::Kind::kJosephson);
  CHECK(classify_regime(10, 0.1, -1.0).zeta == doctest::Approx(0.1));
}

TEST_CASE("noninteracting closed forms") {
  CHECK(noninteracting_p0(3, 1.0, 0.0) == 1.0);
  CHECK(noninteracting_p0(3, 1.0, std::numbers::pi / 2) == doctest::Approx(0.0));
  CHECK(noninteracting_p0(50, 1.0, 0.1) == doctest::Approx(0.606024077).epsilon(1e-8));

  const AmplitudeFrequency af = tilted_amplitude_frequency(100, 1.0, 2.0);
  CHECK(af.amplitude == doctest::Approx(50.0));
  CHECK(*af.frequency == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(tilted_amplitude_frequency(10, 1.0, 0.0).amplitude == doctest::Approx(10.0));
  const AmplitudeFrequency frozen = tilted_amplitude_frequency(10, 0.0, 1.0);
  CHECK(frozen.amplitude == 0.0);
  CHECK_FALSE(frozen.frequency);
  CHECK(suppression_threshold_noninteracting(100, 1.0) == doctest::Approx(2.0 * std::sqrt(99.0)));
}

TEST_CASE("Josephson envelope") {
  CHECK(josephson_mean(10, 100.0, 1.0, 0.0) == doctest::Approx(0.0));
  const EnvelopeTimes env = half_time_and_revival(10, 1.0);
  CHECK(*env.half_time == doctest::Approx(0.387452170).epsilon(1e-8));
  CHECK(env.revival_period == doctest::Approx(std::numbers::pi));
  CHECK(std::pow(std::cos(*env.half_time), 9) == doctest::Approx(0.5));
  CHECK_FALSE(half_time_and_revival(1, 1.0).half_time);
  CHECK_THROWS_AS(half_time_and_revival(10, 0.0), std::domain_error);
}

TEST_CASE("perturbative splittings") {
  CHECK(splitting_symmetric(1, 0.3, 2.0).to_double() == doctest::Approx(2.0 * 0.3 * 2.0));  // 2J
  CHECK(splitting_symmetric(5, 0.1, 1.0).to_double() == doctest::Approx(2.6041666666666667e-7));
  CHECK(splitting_symmetric(5, 0.1, -1.0).to_double() == doctest::Approx(2.6041666666666667e-7));
  CHECK(splitting_resonance(5, 2, 0.1, 1.0).to_double() == doctest::Approx(2.3717082451262844e-3));
  CHECK(splitting_resonance(5, 0, 0.1, 1.0) == splitting_symmetric(5, 0.1, 1.0));
  CHECK_THROWS_AS(splitting_resonance(5, 5, 0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(splitting_resonance(5, -1, 0.1, 1.0), std::domain_error);
  CHECK(resonance_tilt(3, 0.5) == 3.0);
  CHECK(resonance_mean_occupation(5, 2, 0.1, std::numbers::pi / 0.1) == doctest::Approx(3.0));
  CHECK(suppression_window(5, 2, 0.1, 1.0).to_double() ==
        doctest::Approx(2.0 * 2.3717082451262844e-3 / 3.0));
}

TEST_CASE("87Rb worked example in physical units") {
  namespace rb = fixtures::rb87;
  CHECK(period_ms(1, 0) == doctest::Approx(467.03).epsilon(1e-4));
  CHECK(period_ms(2, 0) == doctest::Approx(4844.7).epsilon(1e-4));
  CHECK(period_ms(3, 0) == doctest::Approx(134017.6).epsilon(1e-4));
  CHECK(period_ms(200, 197) == doctest::Approx(116.94).epsilon(1e-4));
  CHECK(period_ms(200, 198) == doctest::Approx(34.343).epsilon(1e-4));
  CHECK(period_ms(200, 199) == doctest::Approx(33.024).epsilon(1e-4));

  const LogScalar t200 = resonance_period(200, 0, rb::kZeta, rb::kInteractionNanoKelvin) *
                         LogScalar::from_double(PhysicalUnits::ms_per_natural_time());
  CHECK(t200.log10_magnitude() == doctest::Approx(635.038).epsilon(1e-5));
  CHECK_THROWS(t200.to_double());

  CHECK(resonance_tilt(197, rb::kInteractionNanoKelvin) == doctest::Approx(209.998).epsilon(1e-5));
  CHECK(resonance_tilt(199, rb::kInteractionNanoKelvin) == doctest::Approx(212.13).epsilon(1e-5));
  CHECK(suppression_window(200, 197, rb::kZeta, rb::kInteractionNanoKelvin).to_double() ==
        doctest::Approx(0.2736).epsilon(1e-3));
  CHECK(suppression_window(200, 198, rb::kZeta, rb::kInteractionNanoKelvin).to_double() ==
        doctest::Approx(1.3974).epsilon(1e-3));
  CHECK(suppression_window(200, 199, rb::kZeta, rb::kInteractionNanoKelvin).to_double() ==
        doctest::Approx(2.9065).epsilon(1e-3));
  CHECK(suppression_window(200, 0, rb::kZeta, rb::kInteractionNanoKelvin).log10_magnitude() ==
        doctest::Approx(-635.357).epsilon(1e-5));
}

TEST_CASE("relative tunneling time tau") {
  CHECK(log_tau_exact(7, 0, 0.1) == doctest::Approx(0.0));
  CHECK(log_tau_exact(7, 2, 0.1) / kLn10 == doctest::Approx(-4.594).epsilon(1e-3));
  CHECK(log_tau_exact(200, 197, 0.0964) / kLn10 == doctest::Approx(-632.97).epsilon(1e-4));
  // consistent with the ratio of the two worked-example periods
  CHECK(std::log10(period_ms(200, 197)) - resonance_period(200, 0, 0.0964, 0.53299).log10_magnitude() -
            std::log10(PhysicalUnits::ms_per_natural_time()) ==
        doctest::Approx(log_tau_exact(200, 197, 0.0964) / kLn10).epsilon(1e-9));
  // monotone in p
  for (int p = 1; p < 40; ++p) CHECK(log_tau_exact(40, p, 0.1) < log_tau_exact(40, p - 1, 0.1));
}

TEST_CASE("Stirling expansion of tau") {
  const double worst_allowed[] = {0.013, 0.0023, 0.0011};
  int i = 0;
  for (int q : fixtures::figure4::kNoonSizes) {
    double worst = 0.0;
    for (int n = 5 * q; n <= 10 * q; ++n) {
      const StirlingEstimate s = log_tau_stirling(n, q, 0.1);
      CHECK(s.in_domain);
      const double exact = log_tau_exact(n, n - q, 0.1);
      worst = std::max(worst, std::fabs(s.log_tau - exact) / std::fabs(exact));
    }
    CAPTURE(q);
    CHECK(worst <= worst_allowed[i++] * 1.05);
  }
  CHECK_FALSE(log_tau_stirling(10, 10, 0.1).in_domain);
  CHECK(log_tau_stirling(50, 10, 0.1).in_domain);
  CHECK_FALSE(log_tau_stirling(49, 10, 0.1).in_domain);
  CHECK_THROWS(log_tau_stirling(10, 11, 0.1));
  CHECK_THROWS(log_tau_stirling(10, 0, 0.1));
}

TEST_CASE("log binomial") {
  CHECK(log_binomial(10, 3) == doctest::Approx(std::log(120.0)));
  CHECK(log_binomial(10, 0) == doctest::Approx(0.0));
}

TEST_CASE("provenance names") {
  CHECK(std::string(to_string(Provenance::kExactDiagonalization)) == "ed");
  CHECK(std::string(to_string(RegimeTag::Kind::kFock)) == "fock");
}
