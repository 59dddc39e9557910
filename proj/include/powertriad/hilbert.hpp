#pragma once

#include "powertriad/spectrum.hpp"
#include "powertriad/waveform.hpp"
#include "powertriad/windows.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace powertriad {

struct ModulatedSpec; // signals.hpp

/// Discrete Hilbert transform via the DFT: multiply positive-frequency bins by
/// -j, negative-frequency bins by +j, zero DC and Nyquist. Exact for zero-mean
/// records that are periodic on the grid; the operator is unitary there
/// (energy-preserving) and squares to -identity.
RealWaveform hilbert_spectral(const RealWaveform& x);

/// Odd-length linear-phase FIR approximation of the Hilbert transformer
/// (type III: odd-symmetric taps, even-offset taps identically zero).
struct HilbertFirDesign {
  std::size_t n_taps = 0;
  Window window = Window::hamming;
  std::vector<double> coefficients;

  std::size_t group_delay() const { return (n_taps - 1) / 2; }
  /// Sum of taps; identically ~0 by odd symmetry, reported as the DC leakage bound.
  double dc_leakage() const;
};

/// Designs the windowed ideal Hilbert FIR: taps 2/(pi*k) at odd offsets k from
/// center, zero elsewhere, shaped by `window`. n_taps must be odd and >= 3.
HilbertFirDesign design_hilbert_fir(std::size_t n_taps, Window window = Window::hamming);

/// FIR result: group-delay compensated so output[k] estimates H[x](t_k);
/// the first/last `transient_samples` samples are edge-contaminated.
struct FirHilbertResult {
  RealWaveform waveform;
  std::size_t transient_samples = 0;
};

FirHilbertResult hilbert_fir(const RealWaveform& x, const HilbertFirDesign& design);

/// Writes the design as a two-column CSV (`k,h` with k the signed tap offset).
std::string fir_coefficients_csv(const HilbertFirDesign& design);

/// Analytic signal x + j*H[x] (spectral Hilbert). The real part is bit-for-bit x.
AnalyticWaveform phase_split(const RealWaveform& x);

/// Product-form analytic construction for a narrowband factorization x = u * v:
/// returns u*(v + j*H[v]), i.e. the transform is applied to the carrier factor
/// only. Valid (equal to phase_split(u*v)) when u is lowpass and v highpass
/// with disjoint bands.
AnalyticWaveform bedrosian_hilbert(const RealWaveform& u, const RealWaveform& v);

/// Band-split validity report for the product construction.
struct BedrosianReport {
  double envelope_bandwidth = 0.0; ///< rad/s (estimated or declared)
  double carrier = 0.0;            ///< rad/s
  double ratio = 0.0;              ///< envelope_bandwidth / carrier
  bool valid = false;              ///< ratio < 1 strictly
  /// RMS mismatch between the product-form and spectral analytic signals,
  /// relative to the signal RMS; filled when both constructions were run.
  std::optional<double> rms_discrepancy;
};

/// Estimates the envelope bandwidth as the smallest omega containing 99.9% of
/// the envelope's spectral energy (DC excluded from the "bandwidth" measure
/// only in the sense that a constant envelope reports bandwidth 0).
/// This estimator is this library's convention, not a property of the
/// underlying transform theory.
double estimate_bandwidth(std::span<const cplx> envelope, double sample_rate,
                          double energy_fraction = 0.999);

/// Report from a declared-bandwidth spec.
BedrosianReport bedrosian_check(const ModulatedSpec& spec);
/// Report from a measured complex envelope.
BedrosianReport bedrosian_check(std::span<const cplx> envelope, double sample_rate,
                                double omega0);

/// Measures the product-form error against the spectral oracle and returns the
/// report with rms_discrepancy filled (envelope u, carrier v at omega0).
BedrosianReport bedrosian_validate(const RealWaveform& u, const RealWaveform& v,
                                   double omega0);

/// One-sided spectra of x, H[x], and the analytic x + j*H[x]. The analytic
/// spectrum holds 2*c_k at positive bins (zero negative half by construction).
struct SpectralTriplet {
  Spectrum signal;
  Spectrum hilbert;
  Spectrum analytic;
};

SpectralTriplet spectral_representations(const RealWaveform& x);

} // namespace powertriad
