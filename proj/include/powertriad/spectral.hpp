#pragma once

#include "powertriad/spectrum.hpp"
#include "powertriad/waveform.hpp"

#include <complex>
#include <vector>

namespace powertriad {

/// Record-average powers assembled in the frequency domain. With spectra
/// holding two-sided coefficients at positive bins, the discrete sums
///   hermitian     = dc_v*dc_i + sum_k 4 V_k conj(I_k) + nyq_v*nyq_i
///   complementary = sum_k 4 V_k I_k
/// realize the one-sided factor-4 integrals normalized to the record length,
/// so `hermitian` equals the time average of the Hermitian power series
/// exactly (discrete Parseval). The complementary *series* time-averages to
/// dc_v*dc_i + nyq_v*nyq_i (no pair of positive bins sums to zero mod N);
/// that value is reported as complementary_mean, and
///   active = 0.5 * Re(hermitian + complementary_mean)
/// equals the time average of the instantaneous power. raw_* are the same
/// sums scaled by the record duration (the un-normalized factor-4 integrals,
/// kept for diagnostics).
struct SpectralAverages {
  cplx hermitian;
  cplx complementary;
  double complementary_mean = 0.0;
  double active = 0.0;
  cplx raw_hermitian;
  cplx raw_complementary;
};

/// Requires both spectra on the same grid.
SpectralAverages avg_powers_spectral(const Spectrum& v, const Spectrum& i);

/// Per-bin power triangle: one right triangle per frequency with
///   apparent  = 2 A(w) B(w)            (hypotenuse)
///   active    = 2 A(w) B(w) cos(Theta - Phi)
///   nonactive = 2 A(w) B(w) sin(Theta - Phi)
/// With the spectrum convention here these are the bin's direct contributions
/// to (S, P, Q) of a matching time-domain summary (scale factor 1).
struct FrequencyPowerTriangle {
  double omega = 0.0;
  double apparent = 0.0; ///< >= 0
  double active = 0.0;
  double nonactive = 0.0;
};

/// Triangles for every bin where both signals carry energy; bins whose
/// apparent power falls at or below rel_threshold * (2 max|V| max|I|) — the
/// largest apparent power the pair could carry — are dropped, so numerically
/// disjoint spectra yield no rows.
std::vector<FrequencyPowerTriangle> per_frequency_triangles(const Spectrum& v,
                                                            const Spectrum& i,
                                                            double rel_threshold = 1e-9);

/// The broadband "sum of apparent powers" bound: lhs = (sum_w apparent)^2,
/// rhs = sum_w apparent^2 = sum_w (active^2 + nonactive^2). lhs > rhs strictly
/// as soon as two bins are active — apparent powers add along the hypotenuses,
/// not in quadrature, so a broadband power triangle cannot close.
struct PythagorasGap {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0; ///< lhs - rhs >= 0
};

PythagorasGap broadband_pythagoras_gap(const Spectrum& v, const Spectrum& i);

/// Per-frequency description of a source impedance Z(w) carrying current
/// spectrum I(w): V(w) = Z(w) I(w), so each bin's triangle has
/// active = 2 Re{Z} |I|^2 and nonactive = 2 Im{Z} |I|^2.
struct SpectralTheveninRow {
  double omega = 0.0;
  cplx impedance;
  cplx hermitian;     ///< 4 Z(w) |I(w)|^2
  cplx complementary; ///< 4 Z(w) I(w)^2
  FrequencyPowerTriangle triangle;
};

struct SpectralTheveninResult {
  std::vector<SpectralTheveninRow> rows;
  SpectralAverages totals;
};

/// `impedance` holds Z at every bin of `i` (same length as i.values).
SpectralTheveninResult thevenin_spectral(const std::vector<cplx>& impedance,
                                         const Spectrum& i);

/// Line-spectrum variant: powers from harmonic coefficient lists directly
/// (index m means frequency m * omega0; coefficients are two-sided, i.e. a
/// cosine of amplitude A contributes A/2 * e^{j theta}). Indices must be >= 1
/// and distinct within each list; disjoint index sets simply contribute zero.
/// There is no record length here, so raw_* mirror the normalized values.
struct HarmonicLine {
  int index = 1;
  cplx coefficient;
};

SpectralAverages line_spectra_powers(const std::vector<HarmonicLine>& v,
                                     const std::vector<HarmonicLine>& i,
                                     double omega0);

} // namespace powertriad
