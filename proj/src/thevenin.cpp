#include "powertriad/thevenin.hpp"

#include "powertriad/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace powertriad {
namespace {

constexpr double kPi = std::numbers::pi;

void require_carrier(double omega0, const SamplingGrid& grid, const char* what) {
  if (!(omega0 > 0.0)) throw std::invalid_argument(std::string(what) + ": omega0 must be > 0");
  if (!(omega0 < grid.nyquist_omega()))
    throw NumericValidityError(std::string(what) + ": carrier at or above the Nyquist limit");
}

} // namespace

std::vector<cplx> TimeVaryingImpedance::carrier_response(double omega0,
                                                         const SamplingGrid& grid) const {
  validate_grid(grid);
  if (!(omega0 > 0.0))
    throw std::invalid_argument("carrier_response: omega0 must be > 0");
  if (response_at_carrier) {
    if (response_at_carrier->size() != grid.n_samples)
      throw std::invalid_argument("carrier_response: tabulated Z length does not match grid");
    return *response_at_carrier;
  }
  if (!impulse_response)
    throw std::invalid_argument("carrier_response: impedance has no representation");
  const ImpulseResponseTable& table = *impulse_response;
  if (table.n_t != grid.n_samples)
    throw std::invalid_argument("carrier_response: impulse-response rows do not match grid");
  if (table.z.size() != table.n_t * table.n_tau || table.n_tau == 0)
    throw std::invalid_argument("carrier_response: malformed impulse-response table");
  const double period = 2.0 * kPi / omega0;
  if (table.d_tau > period / 8.0)
    throw NumericValidityError("carrier_response: tau grid coarser than an eighth of the "
                               "carrier period cannot resolve the response");
  std::vector<cplx> zc(grid.n_samples);
  for (std::size_t row = 0; row < table.n_t; ++row) {
    cplx acc(0.0, 0.0);
    for (std::size_t m = 0; m < table.n_tau; ++m) {
      const double tau = static_cast<double>(m) * table.d_tau;
      acc += table.z[row * table.n_tau + m] * std::polar(1.0, -omega0 * tau);
    }
    zc[row] = acc * table.d_tau;
  }
  return zc;
}

std::optional<double> TimeVaryingImpedance::representation_mismatch(
    double omega0, const SamplingGrid& grid) const {
  if (!response_at_carrier || !impulse_response) return std::nullopt;
  TimeVaryingImpedance table_only;
  table_only.impulse_response = impulse_response;
  const std::vector<cplx> from_table = table_only.carrier_response(omega0, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    worst = std::max(worst, std::abs(from_table[k] - (*response_at_carrier)[k]));
  return worst;
}

DrivenPair voltage_from_current(const FixedImpedance& z, const SinusoidSpec& i_spec,
                                const SamplingGrid& grid) {
  require_carrier(i_spec.omega0, grid, "voltage_from_current");
  SinusoidSpec v_spec;
  v_spec.amplitude = z.magnitude() * i_spec.amplitude;
  v_spec.phase = i_spec.phase + z.angle();
  v_spec.omega0 = i_spec.omega0;
  DrivenPair pair;
  pair.v = gen_sinusoid(v_spec, grid, Unit::volt);
  pair.i = gen_sinusoid(i_spec, grid, Unit::ampere);
  return pair;
}

ImpedancePower power_from_impedance(const FixedImpedance& z, double i_amp, double phi,
                                    double omega0, const SamplingGrid& grid) {
  require_carrier(omega0, grid, "power_from_impedance");
  if (i_amp < 0.0) throw std::invalid_argument("power_from_impedance: i_amp must be >= 0");
  const cplx herm = z.z() * i_amp * i_amp;
  std::vector<cplx> hermitian(grid.n_samples, herm);
  std::vector<cplx> complementary(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    complementary[k] = herm * std::polar(1.0, 2.0 * omega0 * grid.time(k) + 2.0 * phi);
  ImpedancePower out;
  out.series = power_series_from_components(grid, std::move(hermitian), std::move(complementary));
  out.summary = power_summary(out.series);
  return out;
}

TvDrivenPair voltage_from_current(const TimeVaryingImpedance& z,
                                  const SinusoidSpec& i_spec, const SamplingGrid& grid) {
  require_carrier(i_spec.omega0, grid, "voltage_from_current");
  const std::vector<cplx> zc = z.carrier_response(i_spec.omega0, grid);

  std::vector<double> v(grid.n_samples);
  const cplx drive = std::polar(i_spec.amplitude, i_spec.phase);
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    v[k] = (zc[k] * drive * std::polar(1.0, i_spec.omega0 * grid.time(k))).real();

  TvDrivenPair pair;
  pair.v_carrier = make_waveform(grid, std::move(v), Unit::volt);
  pair.i = gen_sinusoid(i_spec, grid, Unit::ampere);

  if (z.impulse_response) {
    const ImpulseResponseTable& table = *z.impulse_response;
    // Direct tau sum; the current below the record start is evaluated in
    // closed form, so no edge transient is introduced.
    std::vector<double> vc(grid.n_samples);
    for (std::size_t k = 0; k < grid.n_samples; ++k) {
      const double t = grid.time(k);
      double acc = 0.0;
      for (std::size_t m = 0; m < table.n_tau; ++m) {
        const double tau = static_cast<double>(m) * table.d_tau;
        acc += table.z[k * table.n_tau + m] * i_spec.eval(t - tau);
      }
      vc[k] = acc * table.d_tau;
    }
    pair.v_convolution = make_waveform(grid, std::move(vc), Unit::volt);
  }
  return pair;
}

TvImpedancePower power_from_impedance(const TimeVaryingImpedance& z, double i_amp,
                                      double phi, double omega0,
                                      const SamplingGrid& grid) {
  require_carrier(omega0, grid, "power_from_impedance");
  if (i_amp < 0.0) throw std::invalid_argument("power_from_impedance: i_amp must be >= 0");
  const std::vector<cplx> zc = z.carrier_response(omega0, grid);

  TvImpedancePower out;
  out.bandwidth_report = bedrosian_check(zc, grid.sample_rate, omega0);
  out.bandwidth_warning = !out.bandwidth_report.valid;

  const double i_sq = i_amp * i_amp;
  std::vector<cplx> hermitian(grid.n_samples), complementary(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    hermitian[k] = zc[k] * i_sq;
    complementary[k] =
        hermitian[k] * std::polar(1.0, 2.0 * omega0 * grid.time(k) + 2.0 * phi);
  }
  out.series = power_series_from_components(grid, std::move(hermitian), std::move(complementary));
  return out;
}

} // namespace powertriad
