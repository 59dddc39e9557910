#pragma once

#include "powertriad/waveform.hpp"

#include <cstddef>
#include <vector>

namespace powertriad {

/// One-sided line spectrum of a real record of N uniform samples.
///
/// values[k-1] holds the two-sided DFT coefficient c_k = DFT(x)[k] / N at the
/// positive bin omega[k-1] = 2*pi*sample_rate*k/N, k = 1 .. ceil(N/2)-1. DC and
/// (for even N) the Nyquist coefficient are kept out-of-band in their own fields
/// so the factor-2 one-sided synthesis never double-counts them:
///
///   x[n] = dc + sum_k 2*Re{ c_k * exp(j*2*pi*k*n/N) } + nyquist * cos(pi*n)
///
/// A cosine of amplitude A at a bin therefore appears with |c_k| = A/2; phases
/// are referenced to the start of the record (sample 0), not to absolute t=0.
struct Spectrum {
  double sample_rate = 0.0;
  std::size_t n_samples = 0;
  double t0 = 0.0;
  double dc = 0.0;
  double nyquist = 0.0; ///< 0 when n_samples is odd
  std::vector<double> omega;
  std::vector<cplx> values;

  std::size_t n_bins() const { return values.size(); }
  double magnitude(std::size_t bin) const;
  double phase(std::size_t bin) const;
  /// Bin indices whose magnitude exceeds rel_threshold * max magnitude
  /// (empty for an all-zero record).
  std::vector<std::size_t> support(double rel_threshold = 1e-9) const;
  /// True when the spectra live on the same grid (rate, length, origin).
  bool same_grid(const Spectrum& other) const;
};

/// Forward map (DFT/N with the one-sided split above).
Spectrum spectrum_of(const RealWaveform& x);

/// Inverse map; exact round trip up to FFT rounding. The result carries `unit`.
RealWaveform synthesize(const Spectrum& s, Unit unit = Unit::dimensionless);

} // namespace powertriad
