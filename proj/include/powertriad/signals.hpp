#pragma once

#include "powertriad/waveform.hpp"
#include "powertriad/windows.hpp"

#include <functional>
#include <vector>

namespace powertriad {

struct AnalyticWaveform;

/// Single real sinusoid  A * cos(omega0 * t + phase).
struct SinusoidSpec {
  double amplitude = 1.0; ///< >= 0
  double phase = 0.0;     ///< radians
  double omega0 = 0.0;    ///< carrier, rad/s, > 0

  double eval(double t) const;
};

/// One harmonic line at index*omega0.
struct HarmonicTerm {
  int index = 1; ///< harmonic number m >= 1
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Finite sum  sum_m A_m * cos(m * omega0 * t + theta_m), distinct indices.
struct HarmonicSpec {
  double omega0 = 0.0;
  std::vector<HarmonicTerm> terms;

  double eval(double t) const;
  /// Highest harmonic frequency present (0 for empty spec).
  double max_omega() const;
};

/// Narrowband modulated carrier  A(t) * cos(omega0 * t + theta(t)) with the
/// envelope and phase tabulated on the target grid.
struct ModulatedSpec {
  double omega0 = 0.0;
  std::vector<double> envelope;  ///< A(t_k), one per grid sample
  std::vector<double> phase_mod; ///< theta(t_k), one per grid sample
  double envelope_bandwidth = 0.0; ///< declared two-sided envelope bandwidth, rad/s
};

/// Tabulates a ModulatedSpec from callables evaluated on the grid.
ModulatedSpec tabulate_modulated(double omega0, double envelope_bandwidth,
                                 const std::function<double(double)>& envelope,
                                 const std::function<double(double)>& phase_mod,
                                 const SamplingGrid& grid);

/// Generators. All validate the grid, require finite spec values, and reject
/// carriers at or above the Nyquist limit (NumericValidityError).
RealWaveform gen_sinusoid(const SinusoidSpec& spec, const SamplingGrid& grid,
                          Unit unit = Unit::dimensionless);
RealWaveform gen_harmonic(const HarmonicSpec& spec, const SamplingGrid& grid,
                          Unit unit = Unit::dimensionless);
RealWaveform gen_modulated(const ModulatedSpec& spec, const SamplingGrid& grid,
                           Unit unit = Unit::dimensionless);

/// Shifts an analytic signal to baseband: out[k] = x[k] * exp(-j*omega0*t_k).
/// For a clean carrier at omega0 the result is the constant complex envelope.
ComplexSeries complex_demodulate(const AnalyticWaveform& x, double omega0);

/// Complex envelope recovered without a Hilbert transform, as I - jQ with
/// I = lowpass(2*x*cos(omega0 t)) and Q = lowpass(2*x*sin(omega0 t)).
/// The sign convention matches complex_demodulate on the same signal.
struct QuadratureEnvelope {
  ComplexSeries envelope;
  std::size_t transient_samples = 0; ///< discard this many samples at each end
};

/// Lowpass is a linear-phase windowed-sinc FIR (odd n_taps), group-delay
/// compensated; edges are zero-padded, so each end of the output carries a
/// transient of n_taps samples (reported). Throws std::invalid_argument if
/// cutoff <= 0, cutoff >= omega0, or n_taps is even.
QuadratureEnvelope quadrature_demodulate(const RealWaveform& x, double omega0,
                                         double lowpass_cutoff,
                                         std::size_t n_taps = 255,
                                         Window window = Window::blackman);

} // namespace powertriad
