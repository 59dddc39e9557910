#include "powertriad/thevenin.hpp"

#include "powertriad/errors.hpp"
#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace powertriad;
using testutil::kPi;
using testutil::tone_grid;

namespace {

// z(t, tau) = R*delta(tau) - X*delta(tau - quarter period), sampled as weights
// divided by the tau step so the rectangle-rule transform reproduces R + jX
// exactly at the carrier.
ImpulseResponseTable delta_tap_table(double R, double X, double d_tau,
                                     std::size_t quarter_col, std::size_t n_t) {
  ImpulseResponseTable table;
  table.n_t = n_t;
  table.n_tau = quarter_col + 1;
  table.d_tau = d_tau;
  table.z.assign(table.n_t * table.n_tau, 0.0);
  for (std::size_t row = 0; row < n_t; ++row) {
    table.z[row * table.n_tau + 0] = R / d_tau;
    table.z[row * table.n_tau + quarter_col] = -X / d_tau;
  }
  return table;
}

} // namespace

TEST_CASE("fixed impedance drives the 3-4-5 power triangle", "[thevenin]") {
  const FixedImpedance z{3.0, 4.0};
  const double I = 1.0, phi = 0.2;
  const auto [grid, omega0] = tone_grid(256, 4);

  // Path one: synthesize the waveform pair and measure it.
  const DrivenPair pair = voltage_from_current(z, {I, phi, omega0}, grid);
  CHECK(pair.v.unit == Unit::volt);
  CHECK(pair.i.unit == Unit::ampere);
  const PowerSummary measured = power_summary(power_series(phase_split(pair.v),
                                                           phase_split(pair.i)));

  // Path two: closed construction straight from the impedance.
  const ImpedancePower direct = power_from_impedance(z, I, phi, omega0, grid);

  const double expected_angle = std::atan2(4.0, 3.0); // 0.92729521800161219
  for (const PowerSummary* s : {&measured, &direct.summary}) {
    CHECK(s->active_P == Catch::Approx(1.5).epsilon(1e-9));
    CHECK(s->nonactive_Q == Catch::Approx(2.0).epsilon(1e-9));
    CHECK(s->apparent_S == Catch::Approx(2.5).epsilon(1e-9));
    CHECK(s->power_factor == Catch::Approx(0.6).epsilon(1e-9));
    CHECK(s->power_angle == Catch::Approx(expected_angle).margin(1e-9));
  }
  CHECK(measured.active_P == Catch::Approx(direct.summary.active_P).epsilon(1e-9));
  CHECK(measured.nonactive_Q == Catch::Approx(direct.summary.nonactive_Q).epsilon(1e-9));
  CHECK(measured.apparent_S == Catch::Approx(direct.summary.apparent_S).epsilon(1e-9));

  SECTION("driven voltage has amplitude |Z| I and phase phi + arg Z") {
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.n_samples; ++k) {
      const double expected =
          z.magnitude() * I * std::cos(omega0 * grid.time(k) + phi + z.angle());
      worst = std::max(worst, std::abs(pair.v.samples[k] - expected));
    }
    CHECK(worst < 1e-12);
  }
  SECTION("capacitive sign flips the nonactive part only") {
    const ImpedancePower cap = power_from_impedance({3.0, -4.0}, I, phi, omega0, grid);
    CHECK(cap.summary.active_P == Catch::Approx(1.5).epsilon(1e-9));
    CHECK(cap.summary.nonactive_Q == Catch::Approx(-2.0).epsilon(1e-9));
    CHECK(cap.summary.apparent_S == Catch::Approx(2.5).epsilon(1e-9));
    CHECK(cap.summary.power_angle == Catch::Approx(-expected_angle).margin(1e-9));
    CHECK(cap.summary.power_factor == Catch::Approx(0.6).epsilon(1e-9));
  }
}

TEST_CASE("impedance power validates its arguments", "[thevenin]") {
  const auto [grid, omega0] = tone_grid(64, 2);
  CHECK_THROWS_AS(power_from_impedance(FixedImpedance{1.0, 0.0}, -1.0, 0.0, omega0, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(power_from_impedance(FixedImpedance{1.0, 0.0}, 1.0, 0.0, 0.0, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      power_from_impedance(FixedImpedance{1.0, 0.0}, 1.0, 0.0, grid.nyquist_omega(), grid),
      NumericValidityError);
}

TEST_CASE("constant carrier response reproduces the fixed-impedance path", "[thevenin]") {
  const auto [grid, omega0] = tone_grid(128, 4);
  const FixedImpedance fixed{3.0, 4.0};
  TimeVaryingImpedance tv;
  tv.response_at_carrier = std::vector<cplx>(grid.n_samples, fixed.z());

  const TvImpedancePower tv_power = power_from_impedance(tv, 1.0, 0.2, omega0, grid);
  const ImpedancePower fixed_power = power_from_impedance(fixed, 1.0, 0.2, omega0, grid);
  CHECK(testutil::max_abs_diff(tv_power.series.instantaneous,
                               fixed_power.series.instantaneous) < 1e-12);
  CHECK_FALSE(tv_power.bandwidth_warning);
  CHECK(tv_power.bandwidth_report.envelope_bandwidth == 0.0);

  const PowerSummary s = power_summary(tv_power.series);
  CHECK(s.active_P == Catch::Approx(1.5).epsilon(1e-12));
  CHECK(s.nonactive_Q == Catch::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("delta-tap impulse response reproduces R + jX at the carrier", "[thevenin]") {
  const auto [grid, omega0] = tone_grid(64, 4); // T0 = 0.02 s
  const double T0 = 2.0 * kPi / omega0;
  const double d_tau = T0 / 16.0;
  const ImpulseResponseTable table = delta_tap_table(3.0, 4.0, d_tau, 4, grid.n_samples);

  TimeVaryingImpedance tv;
  tv.impulse_response = table;

  const std::vector<cplx> zc = tv.carrier_response(omega0, grid);
  REQUIRE(zc.size() == grid.n_samples);
  for (const cplx& z : zc) REQUIRE(std::abs(z - cplx(3.0, 4.0)) < 1e-12);

  SECTION("both representations agree when supplied together") {
    tv.response_at_carrier = std::vector<cplx>(grid.n_samples, cplx(3.0, 4.0));
    const std::optional<double> mismatch = tv.representation_mismatch(omega0, grid);
    REQUIRE(mismatch.has_value());
    CHECK(*mismatch < 1e-12);
  }
  SECTION("mismatch is unavailable with a single representation") {
    CHECK_FALSE(tv.representation_mismatch(omega0, grid).has_value());
  }
  SECTION("carrier-response and direct-convolution voltages are identical") {
    const TvDrivenPair pair = voltage_from_current(tv, {1.0, 0.2, omega0}, grid);
    REQUIRE(pair.v_convolution.has_value());
    CHECK(testutil::max_abs_diff(pair.v_carrier.samples, pair.v_convolution->samples) <
          1e-12);
  }
  SECTION("power summary lands on the 3-4-5 triangle") {
    const TvImpedancePower p = power_from_impedance(tv, 1.0, 0.2, omega0, grid);
    const PowerSummary s = power_summary(p.series);
    CHECK(s.active_P == Catch::Approx(1.5).epsilon(1e-12));
    CHECK(s.nonactive_Q == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(s.apparent_S == Catch::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("carrier response rejects malformed inputs", "[thevenin]") {
  const auto [grid, omega0] = tone_grid(64, 2);
  const double T0 = 2.0 * kPi / omega0;

  SECTION("no representation at all") {
    TimeVaryingImpedance empty;
    CHECK_THROWS_AS(empty.carrier_response(omega0, grid), std::invalid_argument);
  }
  SECTION("tabulated response with the wrong length") {
    TimeVaryingImpedance tv;
    tv.response_at_carrier = std::vector<cplx>(grid.n_samples - 1, cplx(1.0, 0.0));
    CHECK_THROWS_AS(tv.carrier_response(omega0, grid), std::invalid_argument);
  }
  SECTION("impulse table rows must match the grid") {
    TimeVaryingImpedance tv;
    tv.impulse_response = delta_tap_table(1.0, 0.0, T0 / 16.0, 4, grid.n_samples - 1);
    CHECK_THROWS_AS(tv.carrier_response(omega0, grid), std::invalid_argument);
  }
  SECTION("tau grid coarser than an eighth period is a numeric-validity error") {
    TimeVaryingImpedance tv;
    tv.impulse_response = delta_tap_table(1.0, 0.0, T0 / 4.0, 1, grid.n_samples);
    CHECK_THROWS_AS(tv.carrier_response(omega0, grid), NumericValidityError);
  }
  SECTION("tau grid exactly at an eighth period is accepted") {
    TimeVaryingImpedance tv;
    tv.impulse_response = delta_tap_table(1.0, 0.0, T0 / 8.0, 2, grid.n_samples);
    CHECK_NOTHROW(tv.carrier_response(omega0, grid));
  }
}

TEST_CASE("slowly modulated impedance", "[thevenin]") {
  // 20 carrier periods so the 1/20-rate modulation closes exactly once.
  const auto [grid, omega0] = tone_grid(64, 20);
  const double omega_m = omega0 / 20.0;
  const cplx z0{3.0, 4.0};
  std::vector<cplx> zc(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    zc[k] = z0 * (1.0 + 0.25 * std::cos(omega_m * grid.time(k)));
  TimeVaryingImpedance tv;
  tv.response_at_carrier = zc;
  tv.declared_bandwidth = omega_m;

  const double I = 1.0, phi = 0.2;
  const TvImpedancePower p = power_from_impedance(tv, I, phi, omega0, grid);
  CHECK_FALSE(p.bandwidth_warning);
  CHECK(p.bandwidth_report.valid);
  CHECK(p.bandwidth_report.envelope_bandwidth == Catch::Approx(omega_m).epsilon(1e-9));
  CHECK(p.bandwidth_report.ratio == Catch::Approx(0.05).epsilon(1e-9));

  SECTION("instantaneous power equals the driven v*i pointwise") {
    const TvDrivenPair pair = voltage_from_current(tv, {I, phi, omega0}, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.n_samples; ++k)
      worst = std::max(worst, std::abs(p.series.instantaneous[k] -
                                       pair.v_carrier.samples[k] * pair.i.samples[k]));
    CHECK(worst < 1e-12 * 7.0);
  }
  SECTION("hermitian series tracks Z(t) I^2") {
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.n_samples; ++k)
      worst = std::max(worst, std::abs(p.series.hermitian[k] - zc[k] * I * I));
    CHECK(worst == 0.0);
  }
}

TEST_CASE("fast impedance variation raises the bandwidth warning", "[thevenin]") {
  const auto [grid, omega0] = tone_grid(64, 4);
  const double omega_fast = 1.5 * omega0; // 6 cycles over the 4-period record
  std::vector<cplx> zc(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    zc[k] = cplx(2.0, 0.0) * (1.0 + 0.5 * std::cos(omega_fast * grid.time(k)));
  TimeVaryingImpedance tv;
  tv.response_at_carrier = zc;

  const TvImpedancePower p = power_from_impedance(tv, 1.0, 0.0, omega0, grid);
  CHECK(p.bandwidth_warning);
  CHECK_FALSE(p.bandwidth_report.valid);
  CHECK(p.bandwidth_report.ratio >= 1.0);
  // The series itself is still produced for inspection.
  CHECK(p.series.instantaneous.size() == grid.n_samples);
}
