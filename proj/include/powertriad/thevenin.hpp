#pragma once

#include "powertriad/hilbert.hpp"
#include "powertriad/power.hpp"
#include "powertriad/signals.hpp"
#include "powertriad/waveform.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace powertriad {

/// Frequency-flat source impedance Z = R + jX at the carrier.
struct FixedImpedance {
  double resistance = 0.0; ///< R, ohms
  double reactance = 0.0;  ///< X, ohms

  cplx z() const { return {resistance, reactance}; }
  double magnitude() const { return std::abs(z()); }
  double angle() const { return std::arg(z()); }
};

/// Sampled kernel z(t, tau): rows follow the waveform grid in t, columns a
/// uniform causal tau-grid with spacing d_tau (tau_k = k * d_tau). The response
/// at a carrier is the rectangle-rule transform over tau:
///   Z(t, w0) = sum_k z(t, tau_k) * exp(-j w0 tau_k) * d_tau
struct ImpulseResponseTable {
  std::size_t n_t = 0;
  std::size_t n_tau = 0;
  double d_tau = 0.0;
  std::vector<double> z; ///< row-major, z[t_row * n_tau + tau_col]
};

/// Slowly varying impedance. Either representation suffices; when both are
/// present they must agree at the carrier (see `validate`).
struct TimeVaryingImpedance {
  std::optional<std::vector<cplx>> response_at_carrier; ///< Z(t_k, w0), one per grid sample
  std::optional<ImpulseResponseTable> impulse_response;
  double declared_bandwidth = 0.0; ///< rad/s, bandwidth of the t-variation

  /// Z(t, w0) per grid sample, from whichever representation is available.
  /// Throws std::invalid_argument if neither is present or sizes mismatch the grid.
  /// Throws NumericValidityError if d_tau > (carrier period)/8.
  std::vector<cplx> carrier_response(double omega0, const SamplingGrid& grid) const;

  /// Max pointwise |Z_table - Z_given| when both representations are present
  /// (nullopt otherwise); the two should agree within ~1e-6 * max|Z|.
  std::optional<double> representation_mismatch(double omega0,
                                                const SamplingGrid& grid) const;
};

/// v(t) = Re{ Z I e^{j phi} e^{j w0 t} } driven by i(t) = I cos(w0 t + phi):
/// amplitude V = |Z| I, phase theta = phi + arg Z.
struct DrivenPair {
  RealWaveform v;
  RealWaveform i;
};

DrivenPair voltage_from_current(const FixedImpedance& z, const SinusoidSpec& i_spec,
                                const SamplingGrid& grid);

/// Whole power description of a fixed impedance carrying I cos(w0 t + phi):
/// hermitian = Z I^2 (constant), complementary = Z I^2 e^{j(2 w0 t + 2 phi)},
/// so P = R I^2 / 2, Q = X I^2 / 2, S = |Z| I^2 / 2.
struct ImpedancePower {
  PowerSeries series;
  PowerSummary summary;
};

ImpedancePower power_from_impedance(const FixedImpedance& z, double i_amp,
                                    double phi, double omega0,
                                    const SamplingGrid& grid);

/// Time-varying drive. The carrier-response path evaluates
/// Re{ Z(t, w0) I e^{j phi} e^{j w0 t} }; when an impulse-response table is
/// present the direct convolution sum_k z(t, tau_k) i(t - tau_k) d_tau is also
/// returned for cross-validation (i evaluated in closed form for t - tau < t0).
struct TvDrivenPair {
  RealWaveform v_carrier;                   ///< carrier-response form
  std::optional<RealWaveform> v_convolution; ///< direct tau-summation form
  RealWaveform i;
};

TvDrivenPair voltage_from_current(const TimeVaryingImpedance& z,
                                  const SinusoidSpec& i_spec,
                                  const SamplingGrid& grid);

/// Power series of a time-varying impedance under sinusoidal drive:
/// hermitian = Z(t, w0) I^2, complementary = Z(t, w0) I^2 e^{j(2 w0 t + 2 phi)}.
/// This factorization leans on the band-split (envelope below carrier)
/// assumption, so the result carries the bandwidth report; `bandwidth_warning`
/// is set when declared_bandwidth / omega0 >= 1 instead of failing silently.
struct TvImpedancePower {
  PowerSeries series;
  BedrosianReport bandwidth_report;
  bool bandwidth_warning = false;
};

TvImpedancePower power_from_impedance(const TimeVaryingImpedance& z, double i_amp,
                                      double phi, double omega0,
                                      const SamplingGrid& grid);

} // namespace powertriad
