#include "powertriad/hilbert.hpp"

#include "powertriad/signals.hpp"
#include "powertriad/windows.hpp"
#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

using namespace powertriad;
using testutil::kPi;
using testutil::tone_grid;

namespace {

// O(n^2) reference DFT, independent of the library's FFT path.
std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      out[k] += x[j] * std::polar(1.0, -2.0 * kPi * double(k) * double(j) / double(n));
  return out;
}

double energy(const std::vector<double>& x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

} // namespace

TEST_CASE("spectral Hilbert sends cos to sin and sin to -cos", "[hilbert]") {
  const auto [grid, omega0] = tone_grid(64, 4, 50.0, 0.125);
  const RealWaveform c = gen_sinusoid({1.0, 0.0, omega0}, grid);
  const RealWaveform h = hilbert_spectral(c);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    worst = std::max(worst, std::abs(h.samples[k] - std::sin(omega0 * grid.time(k))));
  CHECK(worst < 1e-12);

  // Involution: applying the transform twice negates the zero-mean signal.
  const RealWaveform hh = hilbert_spectral(h);
  double worst2 = 0.0;
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    worst2 = std::max(worst2, std::abs(hh.samples[k] + c.samples[k]));
  CHECK(worst2 < 1e-12);
}

TEST_CASE("spectral Hilbert kills DC and Nyquist content", "[hilbert]") {
  SamplingGrid grid{1000.0, 64, 0.0};
  SECTION("constant input maps to zero") {
    const RealWaveform x = make_waveform(grid, std::vector<double>(64, 3.0), Unit::volt);
    CHECK(testutil::max_abs(hilbert_spectral(x).samples) < 1e-13);
  }
  SECTION("alternating-sign (Nyquist) input maps to zero") {
    std::vector<double> s(64);
    for (std::size_t k = 0; k < 64; ++k) s[k] = (k % 2 == 0) ? 1.0 : -1.0;
    const RealWaveform x = make_waveform(grid, std::move(s), Unit::volt);
    CHECK(testutil::max_abs(hilbert_spectral(x).samples) < 1e-13);
  }
}

TEST_CASE("spectral Hilbert invariants on random periodic signals", "[hilbert]") {
  std::mt19937 rng(20260816);
  const SamplingGrid grid{64.0 * 50.0, 64 * 8, 0.0};
  for (int trial = 0; trial < 10; ++trial) {
    const RealWaveform x = testutil::random_periodic(grid, 50.0, rng);
    const RealWaveform h = hilbert_spectral(x);

    // Unitary on the zero-mean subspace: energy preserved.
    REQUIRE(std::abs(energy(h.samples) / energy(x.samples) - 1.0) < 1e-12);

    // Involution: H[H[x]] = -x.
    const RealWaveform hh = hilbert_spectral(h);
    double inv = 0.0;
    for (std::size_t k = 0; k < grid.n_samples; ++k)
      inv = std::max(inv, std::abs(hh.samples[k] + x.samples[k]));
    REQUIRE(inv < 1e-10 * testutil::max_abs(x.samples));

    // Analyticity: x + jH[x] has (numerically) empty negative-frequency half.
    const AnalyticWaveform a = phase_split(x);
    const std::vector<cplx> dft = naive_dft(a.samples);
    double neg = 0.0, total = 0.0;
    for (std::size_t k = 0; k < dft.size(); ++k) {
      const double e = std::norm(dft[k]);
      total += e;
      if (k > dft.size() / 2) neg += e;
    }
    REQUIRE(neg < 1e-10 * total);
  }
}

TEST_CASE("phase_split keeps the source samples bit-for-bit", "[hilbert]") {
  std::mt19937 rng(7);
  const SamplingGrid grid{3200.0, 256, -0.03};
  const RealWaveform x = testutil::random_periodic(grid, 50.0, rng);
  const AnalyticWaveform a = phase_split(x);
  REQUIRE(a.samples.size() == x.samples.size());
  CHECK(a.source_unit == x.unit);
  for (std::size_t k = 0; k < x.samples.size(); ++k)
    REQUIRE(a.samples[k].real() == x.samples[k]);
  const std::vector<double> im = a.imag_part();
  const RealWaveform h = hilbert_spectral(x);
  CHECK(testutil::max_abs_diff(im, h.samples) == 0.0);
}

TEST_CASE("FIR Hilbert design structure", "[hilbert]") {
  const std::size_t n_taps = 31;
  const HilbertFirDesign d = design_hilbert_fir(n_taps, Window::hamming);
  REQUIRE(d.coefficients.size() == n_taps);
  CHECK(d.group_delay() == 15);

  const std::vector<double> w = make_window(Window::hamming, n_taps);
  const std::ptrdiff_t c = 15;
  for (std::size_t k = 0; k < n_taps; ++k) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(k) - c;
    if (m % 2 == 0) {
      REQUIRE(d.coefficients[k] == 0.0); // even offsets identically zero
    } else {
      REQUIRE(d.coefficients[k] == w[k] * (2.0 / (kPi * double(m))));
    }
  }
  // Odd symmetry about the center tap.
  for (std::ptrdiff_t m = 1; m <= c; ++m)
    REQUIRE(d.coefficients[c + m] == -d.coefficients[c - m]);
  CHECK(std::abs(d.dc_leakage()) < 1e-12);

  CHECK_THROWS_AS(design_hilbert_fir(30), std::invalid_argument);
  CHECK_THROWS_AS(design_hilbert_fir(1), std::invalid_argument);
}

TEST_CASE("FIR Hilbert tracks the spectral transform away from the edges", "[hilbert]") {
  const HilbertFirDesign d = design_hilbert_fir(255, Window::hamming);
  // Mid-band tone: a quarter of Nyquist, where the windowed design is flattest.
  const auto [grid, omega0] = tone_grid(8, 200, 50.0);
  const RealWaveform x = gen_sinusoid({1.0, 0.4, omega0}, grid);
  const FirHilbertResult fir = hilbert_fir(x, d);
  REQUIRE(fir.transient_samples == d.group_delay());
  const RealWaveform ref = hilbert_spectral(x);

  double err = 0.0, scale = 0.0;
  for (std::size_t k = fir.transient_samples; k + fir.transient_samples < grid.n_samples; ++k) {
    err += (fir.waveform.samples[k] - ref.samples[k]) * (fir.waveform.samples[k] - ref.samples[k]);
    scale += ref.samples[k] * ref.samples[k];
  }
  CHECK(std::sqrt(err / scale) < 5e-3);

  SECTION("constant input leaks only the odd-symmetry rounding residue") {
    const RealWaveform dc = make_waveform(grid, std::vector<double>(grid.n_samples, 1.0),
                                          Unit::dimensionless);
    const FirHilbertResult r = hilbert_fir(dc, d);
    double interior = 0.0;
    for (std::size_t k = r.transient_samples; k + r.transient_samples < grid.n_samples; ++k)
      interior = std::max(interior, std::abs(r.waveform.samples[k]));
    CHECK(interior < 1e-12);
  }
}

TEST_CASE("FIR coefficient CSV lists signed tap offsets", "[hilbert]") {
  const HilbertFirDesign d = design_hilbert_fir(7);
  const std::string csv = fir_coefficients_csv(d);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "k,h");
  std::size_t rows = 0;
  std::ptrdiff_t expected_k = -3;
  while (std::getline(in, line)) {
    REQUIRE(line.substr(0, line.find(',')) == std::to_string(expected_k));
    ++expected_k;
    ++rows;
  }
  CHECK(rows == 7);
}

TEST_CASE("product-form analytic construction for a narrowband AM pair", "[hilbert]") {
  // 20 carrier periods at 50 Hz = 0.4 s, so the 2.5 Hz envelope completes exactly
  // one cycle: both factors are periodic on the record and the product
  // construction is exact.
  const auto [grid, omega0] = tone_grid(64, 20, 50.0);
  const double omega_m = 0.05 * omega0;
  std::vector<double> env(grid.n_samples), carrier(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    const double t = grid.time(k);
    env[k] = 1.0 + 0.5 * std::cos(omega_m * t);
    carrier[k] = std::cos(omega0 * t + 0.2);
  }
  const RealWaveform u = make_waveform(grid, env, Unit::dimensionless);
  const RealWaveform v = make_waveform(grid, carrier, Unit::dimensionless);

  // Both envelope lines sit far below the carrier, so the product construction
  // agrees with the direct analytic signal to FFT rounding.
  const BedrosianReport report = bedrosian_validate(u, v, omega0);
  CHECK(report.valid);
  CHECK(report.ratio == Catch::Approx(0.05).epsilon(1e-9));
  REQUIRE(report.rms_discrepancy.has_value());
  CHECK(*report.rms_discrepancy < 1e-12);

  SECTION("declared-bandwidth report matches the measured one") {
    const ModulatedSpec spec = tabulate_modulated(
        omega0, omega_m, [&](double t) { return 1.0 + 0.5 * std::cos(omega_m * t); },
        [](double) { return 0.0; }, grid);
    const BedrosianReport declared = bedrosian_check(spec);
    CHECK(declared.valid);
    CHECK(declared.carrier == omega0);
    CHECK(declared.envelope_bandwidth == omega_m);
  }
}

TEST_CASE("bandwidth estimator conventions", "[hilbert]") {
  const auto [grid, omega0] = tone_grid(64, 16, 50.0);
  SECTION("constant envelope has zero bandwidth") {
    std::vector<cplx> env(grid.n_samples, cplx(2.0, 0.0));
    CHECK(estimate_bandwidth(env, grid.sample_rate, 0.999) == 0.0);
  }
  SECTION("tone-modulated envelope reports the modulation frequency") {
    const double omega_m = 0.125 * omega0;
    std::vector<cplx> env(grid.n_samples);
    for (std::size_t k = 0; k < grid.n_samples; ++k)
      env[k] = 1.0 + 0.5 * std::cos(omega_m * grid.time(k));
    const double bw = estimate_bandwidth(env, grid.sample_rate, 0.999);
    CHECK(bw == Catch::Approx(omega_m).epsilon(1e-9));
  }
  SECTION("empty input and bad arguments throw") {
    std::vector<cplx> empty;
    CHECK_THROWS_AS(estimate_bandwidth(empty, 100.0), std::invalid_argument);
    std::vector<cplx> one(4, cplx(1.0, 0.0));
    CHECK_THROWS_AS(estimate_bandwidth(one, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(estimate_bandwidth(one, 100.0, 1.5), std::invalid_argument);
  }
}

TEST_CASE("one-sided spectral triplet of a single tone", "[hilbert]") {
  const auto [grid, omega0] = tone_grid(32, 8, 50.0);
  const double amp = 1.8, theta = -0.6;
  const RealWaveform x = gen_sinusoid({amp, theta, omega0}, grid);
  const SpectralTriplet triplet = spectral_representations(x);

  const std::vector<std::size_t> support = triplet.signal.support();
  REQUIRE(support.size() == 1);
  const std::size_t bin = support[0];
  CHECK(triplet.signal.omega[bin] == Catch::Approx(omega0).epsilon(1e-12));

  const cplx expected = 0.5 * std::polar(amp, theta); // record starts at t = 0
  CHECK(std::abs(triplet.signal.values[bin] - expected) < 1e-12);
  CHECK(std::abs(triplet.hilbert.values[bin] - cplx(0.0, -1.0) * expected) < 1e-12);
  CHECK(std::abs(triplet.analytic.values[bin] - 2.0 * expected) < 1e-12);
  CHECK(triplet.hilbert.dc == 0.0);
  CHECK(triplet.hilbert.nyquist == 0.0);

  SECTION("synthesis round-trips the signal spectrum") {
    const RealWaveform back = synthesize(triplet.signal, x.unit);
    CHECK(testutil::max_abs_diff(back.samples, x.samples) < 1e-10);
  }
  SECTION("zero record has empty support") {
    const RealWaveform z = make_waveform(grid, std::vector<double>(grid.n_samples, 0.0),
                                         Unit::volt);
    CHECK(spectrum_of(z).support().empty());
  }
}
