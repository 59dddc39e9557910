#include "powertriad/signals.hpp"

#include "powertriad/errors.hpp"
#include "powertriad/hilbert.hpp"
#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace powertriad;
using testutil::kPi;
using testutil::tone_grid;

TEST_CASE("sampling grid basics", "[signals]") {
  SamplingGrid grid{1000.0, 500, 0.25};
  CHECK(grid.dt() == 0.001);
  CHECK(grid.time(0) == 0.25);
  CHECK(grid.time(10) == Catch::Approx(0.26));
  CHECK(grid.duration() == Catch::Approx(0.5));
  CHECK(grid.nyquist_omega() == Catch::Approx(kPi * 1000.0));

  CHECK_THROWS_AS(validate_grid(SamplingGrid{0.0, 10, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_grid(SamplingGrid{100.0, 0, 0.0}), std::invalid_argument);
}

TEST_CASE("make_waveform validates samples", "[signals]") {
  SamplingGrid grid{100.0, 4, 0.0};
  CHECK_THROWS_AS(make_waveform(grid, {1.0, 2.0, 3.0}, Unit::volt), std::invalid_argument);
  CHECK_THROWS_AS(make_waveform(grid, {1.0, 2.0, std::nan(""), 4.0}, Unit::volt), DataError);
  const RealWaveform w = make_waveform(grid, {1.0, 2.0, 3.0, 4.0}, Unit::volt);
  CHECK(w.unit == Unit::volt);
}

TEST_CASE("sinusoid generator matches pointwise evaluation", "[signals]") {
  const auto [grid, omega0] = tone_grid(64, 3);
  SinusoidSpec spec{2.5, 0.7, omega0};
  const RealWaveform w = gen_sinusoid(spec, grid, Unit::volt);
  REQUIRE(w.samples.size() == grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    const double expected = 2.5 * std::cos(omega0 * grid.time(k) + 0.7);
    REQUIRE(w.samples[k] == expected); // same expression, bit-for-bit
  }

  SECTION("zero amplitude gives the zero waveform") {
    const RealWaveform z = gen_sinusoid({0.0, 0.3, omega0}, grid);
    CHECK(testutil::max_abs(z.samples) == 0.0);
  }
  SECTION("Nyquist violation is a numeric-validity error") {
    CHECK_THROWS_AS(gen_sinusoid({1.0, 0.0, grid.nyquist_omega()}, grid), NumericValidityError);
    CHECK_THROWS_AS(gen_sinusoid({1.0, 0.0, grid.nyquist_omega() * 1.5}, grid), NumericValidityError);
  }
  SECTION("negative amplitude rejected") {
    CHECK_THROWS_AS(gen_sinusoid({-1.0, 0.0, omega0}, grid), std::invalid_argument);
  }
}

TEST_CASE("harmonic generator", "[signals]") {
  const auto [grid, omega0] = tone_grid(128, 2);
  HarmonicSpec spec;
  spec.omega0 = omega0;
  spec.terms = {{1, 1.0, 0.2}, {3, 0.4, -1.1}, {5, 0.1, 2.0}};
  const RealWaveform w = gen_harmonic(spec, grid);
  for (std::size_t k = 0; k < grid.n_samples; k += 17) {
    const double t = grid.time(k);
    const double expected = 1.0 * std::cos(omega0 * t + 0.2) +
                            0.4 * std::cos(3.0 * omega0 * t - 1.1) +
                            0.1 * std::cos(5.0 * omega0 * t + 2.0);
    REQUIRE(w.samples[k] == Catch::Approx(expected).margin(1e-14));
  }

  SECTION("duplicate harmonic indices rejected") {
    spec.terms.push_back({3, 0.2, 0.0});
    CHECK_THROWS_AS(gen_harmonic(spec, grid), std::invalid_argument);
  }
  SECTION("harmonic above Nyquist rejected") {
    spec.terms.push_back({1000, 0.1, 0.0});
    CHECK_THROWS_AS(gen_harmonic(spec, grid), NumericValidityError);
  }
  SECTION("empty spec gives the zero waveform") {
    const RealWaveform z = gen_harmonic(HarmonicSpec{omega0, {}}, grid);
    CHECK(testutil::max_abs(z.samples) == 0.0);
  }
}

TEST_CASE("modulated generator uses tabulated envelope and phase", "[signals]") {
  const auto [grid, omega0] = tone_grid(64, 4);
  const double omega_m = 0.05 * omega0;
  const ModulatedSpec spec = tabulate_modulated(
      omega0, omega_m,
      [&](double t) { return 1.0 + 0.5 * std::cos(omega_m * t); },
      [](double) { return 0.3; }, grid);
  const RealWaveform w = gen_modulated(spec, grid);
  for (std::size_t k = 0; k < grid.n_samples; k += 13) {
    const double t = grid.time(k);
    const double expected = (1.0 + 0.5 * std::cos(omega_m * t)) * std::cos(omega0 * t + 0.3);
    REQUIRE(w.samples[k] == Catch::Approx(expected).margin(1e-14));
  }

  SECTION("table length must match the grid") {
    ModulatedSpec bad = spec;
    bad.envelope.pop_back();
    CHECK_THROWS_AS(gen_modulated(bad, grid), std::invalid_argument);
  }
  SECTION("non-finite envelope rejected") {
    ModulatedSpec bad = spec;
    bad.envelope[7] = std::nan("");
    CHECK_THROWS_AS(gen_modulated(bad, grid), DataError);
  }
}

TEST_CASE("complex demodulation of a clean carrier is constant", "[signals]") {
  const auto [grid, omega0] = tone_grid(96, 5);
  const RealWaveform x = gen_sinusoid({1.5, 0.4, omega0}, grid);
  const ComplexSeries env = complex_demodulate(phase_split(x), omega0);

  const cplx expected = std::polar(1.5, 0.4);
  double worst = 0.0;
  for (const cplx& z : env.samples) worst = std::max(worst, std::abs(z - expected));
  CHECK(worst < 1e-9 * 1.5); // constant within 1e-9 relative spread
}

TEST_CASE("quadrature demodulation matches the analytic-signal path", "[signals]") {
  // Keep the sample rate low enough that a 255-tap lowpass can separate the
  // envelope band from the 2*omega0 image comfortably.
  const auto [grid, omega0] = tone_grid(32, 40, 60.0);
  const double omega_m = 0.05 * omega0;
  const ModulatedSpec spec = tabulate_modulated(
      omega0, omega_m,
      [&](double t) { return 1.0 + 0.5 * std::cos(omega_m * t); },
      [](double) { return 0.25; }, grid);
  const RealWaveform x = gen_modulated(spec, grid);

  const QuadratureEnvelope quad = quadrature_demodulate(x, omega0, omega0 / 2.0);
  const ComplexSeries ref = complex_demodulate(phase_split(x), omega0);

  // Compare away from the filter transient (three time constants at least;
  // the reported transient is the full filter length, which is larger).
  REQUIRE(quad.transient_samples > 0);
  const std::size_t skip = quad.transient_samples;
  REQUIRE(grid.n_samples > 4 * skip);
  double err = 0.0, scale = 0.0;
  std::size_t count = 0;
  for (std::size_t k = skip; k + skip < grid.n_samples; ++k) {
    err += std::norm(quad.envelope.samples[k] - ref.samples[k]);
    scale += std::norm(ref.samples[k]);
    ++count;
  }
  REQUIRE(count > 0);
  CHECK(std::sqrt(err / scale) < 1e-3);

  SECTION("I - jQ sign convention matches complex_demodulate") {
    const RealWaveform tone = gen_sinusoid({2.0, 0.9, omega0}, grid);
    const QuadratureEnvelope qe = quadrature_demodulate(tone, omega0, omega0 / 2.0);
    const cplx mid = qe.envelope.samples[grid.n_samples / 2];
    CHECK(std::abs(mid - std::polar(2.0, 0.9)) < 2e-3 * 2.0);
  }
  SECTION("cutoff at or above the carrier is rejected") {
    CHECK_THROWS_AS(quadrature_demodulate(x, omega0, omega0), std::invalid_argument);
    CHECK_THROWS_AS(quadrature_demodulate(x, omega0, 2.0 * omega0), std::invalid_argument);
  }
  SECTION("even tap count is rejected") {
    CHECK_THROWS_AS(quadrature_demodulate(x, omega0, omega0 / 2.0, 64), std::invalid_argument);
  }
}
