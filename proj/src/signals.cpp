#include "powertriad/signals.hpp"

#include "powertriad/errors.hpp"
#include "powertriad/waveform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace powertriad {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

void require_below_nyquist(double omega, const SamplingGrid& grid, const char* what) {
  if (!(omega < grid.nyquist_omega()))
    throw NumericValidityError(std::string(what) + ": frequency " + std::to_string(omega) +
                               " rad/s is at or above the Nyquist limit " +
                               std::to_string(grid.nyquist_omega()) + " rad/s");
}

/// Windowed-sinc lowpass, odd length, DC gain normalized to 1.
std::vector<double> design_lowpass(double cutoff, double sample_rate,
                                   std::size_t n_taps, Window window) {
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(n_taps - 1) / 2;
  const double wc = cutoff / sample_rate; // rad/sample
  std::vector<double> taps = make_window(window, n_taps);
  double sum = 0.0;
  for (std::size_t k = 0; k < n_taps; ++k) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(k) - c;
    const double ideal =
        (m == 0) ? wc / kPi : std::sin(wc * static_cast<double>(m)) / (kPi * static_cast<double>(m));
    taps[k] *= ideal;
    sum += taps[k];
  }
  for (double& h : taps) h /= sum;
  return taps;
}

/// Zero-padded linear convolution evaluated at the input grid, group-delay
/// compensated (filter center aligned with the output sample).
std::vector<double> apply_fir_centered(const std::vector<double>& x,
                                       const std::vector<double>& h) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(h.size() - 1) / 2;
  std::vector<double> y(x.size(), 0.0);
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(h.size()); ++m) {
      const std::ptrdiff_t idx = k + m - c;
      if (idx >= 0 && idx < n) acc += h[m] * x[idx];
    }
    y[k] = acc;
  }
  return y;
}

} // namespace

double SinusoidSpec::eval(double t) const {
  return amplitude * std::cos(omega0 * t + phase);
}

double HarmonicSpec::eval(double t) const {
  double acc = 0.0;
  for (const HarmonicTerm& term : terms)
    acc += term.amplitude * std::cos(static_cast<double>(term.index) * omega0 * t + term.phase);
  return acc;
}

double HarmonicSpec::max_omega() const {
  int max_index = 0;
  for (const HarmonicTerm& term : terms) max_index = std::max(max_index, term.index);
  return static_cast<double>(max_index) * omega0;
}

ModulatedSpec tabulate_modulated(double omega0, double envelope_bandwidth,
                                 const std::function<double(double)>& envelope,
                                 const std::function<double(double)>& phase_mod,
                                 const SamplingGrid& grid) {
  validate_grid(grid);
  ModulatedSpec spec;
  spec.omega0 = omega0;
  spec.envelope_bandwidth = envelope_bandwidth;
  spec.envelope.resize(grid.n_samples);
  spec.phase_mod.resize(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    spec.envelope[k] = envelope(grid.time(k));
    spec.phase_mod[k] = phase_mod(grid.time(k));
  }
  return spec;
}

RealWaveform gen_sinusoid(const SinusoidSpec& spec, const SamplingGrid& grid, Unit unit) {
  validate_grid(grid);
  require_finite(spec.amplitude, "sinusoid amplitude");
  require_finite(spec.phase, "sinusoid phase");
  require_finite(spec.omega0, "sinusoid omega0");
  if (spec.amplitude < 0.0) throw std::invalid_argument("sinusoid amplitude must be >= 0");
  if (!(spec.omega0 > 0.0)) throw std::invalid_argument("sinusoid omega0 must be > 0");
  require_below_nyquist(spec.omega0, grid, "gen_sinusoid");
  std::vector<double> samples(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) samples[k] = spec.eval(grid.time(k));
  return make_waveform(grid, std::move(samples), unit);
}

RealWaveform gen_harmonic(const HarmonicSpec& spec, const SamplingGrid& grid, Unit unit) {
  validate_grid(grid);
  if (!(spec.omega0 > 0.0)) throw std::invalid_argument("harmonic omega0 must be > 0");
  for (std::size_t a = 0; a < spec.terms.size(); ++a) {
    const HarmonicTerm& term = spec.terms[a];
    if (term.index < 1) throw std::invalid_argument("harmonic index must be >= 1");
    require_finite(term.amplitude, "harmonic amplitude");
    require_finite(term.phase, "harmonic phase");
    for (std::size_t b = a + 1; b < spec.terms.size(); ++b)
      if (spec.terms[b].index == term.index)
        throw std::invalid_argument("harmonic indices must be distinct (duplicate " +
                                    std::to_string(term.index) + ")");
  }
  if (!spec.terms.empty()) require_below_nyquist(spec.max_omega(), grid, "gen_harmonic");
  std::vector<double> samples(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) samples[k] = spec.eval(grid.time(k));
  return make_waveform(grid, std::move(samples), unit);
}

RealWaveform gen_modulated(const ModulatedSpec& spec, const SamplingGrid& grid, Unit unit) {
  validate_grid(grid);
  if (!(spec.omega0 > 0.0)) throw std::invalid_argument("modulated omega0 must be > 0");
  require_below_nyquist(spec.omega0, grid, "gen_modulated");
  if (spec.envelope.size() != grid.n_samples || spec.phase_mod.size() != grid.n_samples)
    throw std::invalid_argument("modulated spec: envelope/phase tables must match the grid");
  std::vector<double> samples(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    const double a = spec.envelope[k];
    const double th = spec.phase_mod[k];
    if (!std::isfinite(a) || !std::isfinite(th))
      throw DataError("modulated spec: non-finite envelope/phase at index " + std::to_string(k));
    samples[k] = a * std::cos(spec.omega0 * grid.time(k) + th);
  }
  return make_waveform(grid, std::move(samples), unit);
}

ComplexSeries complex_demodulate(const AnalyticWaveform& x, double omega0) {
  require_finite(omega0, "demodulation omega0");
  ComplexSeries out;
  out.grid = x.grid;
  out.samples.resize(x.samples.size());
  for (std::size_t k = 0; k < x.samples.size(); ++k) {
    const double t = x.grid.time(k);
    out.samples[k] = x.samples[k] * std::polar(1.0, -omega0 * t);
  }
  return out;
}

QuadratureEnvelope quadrature_demodulate(const RealWaveform& x, double omega0,
                                         double lowpass_cutoff, std::size_t n_taps,
                                         Window window) {
  validate_grid(x.grid);
  if (!(omega0 > 0.0)) throw std::invalid_argument("quadrature: omega0 must be > 0");
  if (!(lowpass_cutoff > 0.0))
    throw std::invalid_argument("quadrature: lowpass cutoff must be > 0");
  if (lowpass_cutoff >= omega0)
    throw std::invalid_argument("quadrature: lowpass cutoff must be below the carrier");
  if (n_taps < 3 || n_taps % 2 == 0)
    throw std::invalid_argument("quadrature: n_taps must be odd and >= 3");

  const std::size_t n = x.grid.n_samples;
  std::vector<double> xi(n), xq(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = x.grid.time(k);
    xi[k] = 2.0 * x.samples[k] * std::cos(omega0 * t);
    xq[k] = 2.0 * x.samples[k] * std::sin(omega0 * t);
  }
  const std::vector<double> h = design_lowpass(lowpass_cutoff, x.grid.sample_rate, n_taps, window);
  const std::vector<double> i_ch = apply_fir_centered(xi, h);
  const std::vector<double> q_ch = apply_fir_centered(xq, h);

  QuadratureEnvelope out;
  out.envelope.grid = x.grid;
  out.envelope.samples.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.envelope.samples[k] = cplx(i_ch[k], -q_ch[k]);
  out.transient_samples = n_taps; // conservative: full filter length at each end
  return out;
}

} // namespace powertriad
