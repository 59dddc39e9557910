#pragma once

#include "powertriad/waveform.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace powertriad {

/// Joint decomposition of one voltage/current record. The complex pair
/// (hermitian, complementary) = (v~ * conj(i~), v~ * i~) carries everything:
///   instantaneous[k] = 0.5 * Re(hermitian[k] + complementary[k])
///   instantaneous[k] = active[k] + nonactive[k]
///   instantaneous[k] = positive[k] + negative[k]   (exact by construction)
/// The hermitian series is slowly varying (constant for a clean sinusoidal
/// pair); the complementary series rotates at twice the carrier.
struct PowerSeries {
  SamplingGrid grid;
  std::vector<cplx> hermitian;
  std::vector<cplx> complementary;
  std::vector<double> instantaneous;
  std::vector<double> active;
  std::vector<double> nonactive;
  std::vector<double> positive;
  std::vector<double> negative;
  /// Samples where the active/nonactive split was degenerate (|hermitian| or
  /// |complementary| exactly zero); there active := instantaneous, nonactive := 0.
  std::vector<std::size_t> degenerate_samples;
};

/// Record-average figures. For a single-frequency pair S^2 = P^2 + Q^2 and
/// avg_positive + avg_negative = P (averaged over whole carrier periods).
struct PowerSummary {
  double apparent_S = 0.0;        ///< 0.5 * mean |hermitian|
  double active_P = 0.0;          ///< 0.5 * mean Re hermitian
  double nonactive_Q = 0.0;       ///< 0.5 * mean Im hermitian
  double power_angle = 0.0;       ///< atan2(Q, P), in (-pi, pi]
  double power_factor = 0.0;      ///< cos(power_angle), in [-1, 1]
  double avg_positive = 0.0;      ///< mean of max(p, 0) >= 0
  double avg_negative = 0.0;      ///< mean of min(p, 0) <= 0
  double negative_fraction = 0.0; ///< fraction of samples with p < 0
};

/// Pointwise product v*i. Requires identical grids and units (volt, ampere).
RealWaveform instantaneous_power(const RealWaveform& v, const RealWaveform& i);

/// v~ * conj(i~): slow/Hermitian power. Requires identical grids.
ComplexSeries hermitian_power(const AnalyticWaveform& v, const AnalyticWaveform& i);
/// v~ * i~: complementary power, rotating at twice the carrier.
ComplexSeries complementary_power(const AnalyticWaveform& v, const AnalyticWaveform& i);

/// 0.5 * Re(hermitian + complementary); equals the real product v*i up to
/// rounding regardless of how accurate the underlying Hilbert transform was.
RealWaveform reconstruct_instantaneous(const ComplexSeries& hermitian,
                                       const ComplexSeries& complementary);

/// Active/nonactive resolution through the phase between the two power series:
/// writing complementary = hermitian * e^{j psi},
///   active    = 0.5 * Re(hermitian) * (1 + cos psi)   >= 0 while |power angle| <= pi/2
///   nonactive = instantaneous - active                 (= -0.5 * Im(hermitian) * sin psi)
/// An in-phase pair puts everything in `active`; a quadrature pair everything
/// in `nonactive`. Zero-magnitude samples are degenerate and flagged.
struct ActiveNonactiveSplit {
  std::vector<double> active;
  std::vector<double> nonactive;
  std::vector<std::size_t> degenerate_samples;
};

ActiveNonactiveSplit active_nonactive_split(const ComplexSeries& hermitian,
                                            const ComplexSeries& complementary);

/// max(p,0) / min(p,0); the two parts sum back to p exactly.
struct PositiveNegativeSplit {
  RealWaveform positive;
  RealWaveform negative;
};

PositiveNegativeSplit positive_negative_split(const RealWaveform& p);

/// Closed-form period averages of the positive and negative parts of
/// p(t) = (VI/2)[cos(delta) + cos(2 w0 t + theta + phi)], delta = theta - phi:
///   avg_negative = -(VI/2) * [ sin|delta| / pi - (|delta|/pi) * cos(delta) ]
///   avg_positive = (VI/2) * cos(delta) - avg_negative
/// The fraction of the period with p < 0 is |delta|/pi (delta wrapped to (-pi, pi]).
struct PosNegAverages {
  double avg_positive = 0.0;
  double avg_negative = 0.0;
  double negative_fraction = 0.0;
};

PosNegAverages closed_form_pos_neg_averages(double v_amp, double i_amp,
                                            double theta, double phi);

/// Full decomposition from a pair of analytic signals on one grid.
PowerSeries power_series(const AnalyticWaveform& v, const AnalyticWaveform& i);

/// Same assembly when the hermitian/complementary series are already known
/// (e.g. produced by an impedance model rather than measured waveforms).
PowerSeries power_series_from_components(const SamplingGrid& grid,
                                         std::vector<cplx> hermitian,
                                         std::vector<cplx> complementary);

/// Record-average summary over [first, first+count) samples of the series
/// (whole record by default). The window should cover whole carrier periods
/// for the documented invariants to hold. Throws on an empty/out-of-range window.
PowerSummary power_summary(const PowerSeries& series, std::size_t first = 0,
                           std::optional<std::size_t> count = std::nullopt);

/// Closed-form summary for a clean sinusoidal pair (V, theta) x (I, phi).
PowerSummary power_summary(double v_amp, double i_amp, double theta, double phi);

} // namespace powertriad
