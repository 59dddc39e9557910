#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace powertriad {

using cplx = std::complex<double>;

/// Physical unit tag for sampled series.
enum class Unit { volt, ampere, watt, dimensionless };

const char* unit_name(Unit u);

/// Uniform sampling grid: sample k sits at t0 + k / sample_rate.
struct SamplingGrid {
  double sample_rate = 0.0; ///< samples per second, > 0
  std::size_t n_samples = 0;
  double t0 = 0.0;

  double dt() const { return 1.0 / sample_rate; }
  double time(std::size_t k) const { return t0 + static_cast<double>(k) / sample_rate; }
  double duration() const { return static_cast<double>(n_samples) / sample_rate; }
  /// Nyquist limit in rad/s; a carrier omega0 is representable iff omega0 < nyquist_omega().
  double nyquist_omega() const;

  bool operator==(const SamplingGrid&) const = default;
};

/// Throws std::invalid_argument unless sample_rate > 0 and n_samples > 0.
void validate_grid(const SamplingGrid& grid);

/// Real-valued sampled waveform. All samples finite (validated on construction
/// through make_waveform and by the file readers).
struct RealWaveform {
  SamplingGrid grid;
  std::vector<double> samples;
  Unit unit = Unit::dimensionless;
};

/// Builds a RealWaveform, checking grid validity, length, and finiteness.
/// Throws std::invalid_argument on grid/length problems, DataError on non-finite samples.
RealWaveform make_waveform(SamplingGrid grid, std::vector<double> samples, Unit unit);

/// Complex-valued sampled series (complex envelopes, power series components).
struct ComplexSeries {
  SamplingGrid grid;
  std::vector<cplx> samples;
};

/// Analytic signal x + j*H[x]: the real part is bit-for-bit the source waveform,
/// the imaginary part its Hilbert transform. For zero-mean periodic input the
/// negative-frequency half of the discrete spectrum is empty (energy <= 1e-10 of total).
struct AnalyticWaveform {
  SamplingGrid grid;
  std::vector<cplx> samples;
  Unit source_unit = Unit::dimensionless;

  std::vector<double> real_part() const;
  std::vector<double> imag_part() const;
};

/// Root-mean-square of a real series (0 for empty input).
double rms(const std::vector<double>& x);
/// Root-mean-square of |z| over a complex series (0 for empty input).
double rms(const std::vector<cplx>& z);

} // namespace powertriad
