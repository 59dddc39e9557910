#include "powertriad/hilbert.hpp"

#include "fft.hpp"
#include "powertriad/errors.hpp"
#include "powertriad/signals.hpp"
#include "powertriad/waveform_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace powertriad {
namespace {

constexpr double kPi = std::numbers::pi;

void require_same_grid(const SamplingGrid& a, const SamplingGrid& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grids must match");
}

/// -j on positive bins, +j on negative bins, DC and Nyquist zeroed.
std::vector<cplx> hilbert_mask(std::vector<cplx> dft) {
  const std::size_t n = dft.size();
  const std::size_t n_pos = (n - 1) / 2;
  dft[0] = cplx(0.0, 0.0);
  for (std::size_t k = 1; k <= n_pos; ++k) dft[k] *= cplx(0.0, -1.0);
  if (n % 2 == 0) dft[n / 2] = cplx(0.0, 0.0);
  for (std::size_t k = n_pos + 1 + (n % 2 == 0 ? 1 : 0); k < n; ++k)
    dft[k] *= cplx(0.0, 1.0);
  return dft;
}

} // namespace

RealWaveform hilbert_spectral(const RealWaveform& x) {
  validate_grid(x.grid);
  std::vector<cplx> dft = hilbert_mask(detail::fft_real(x.samples));
  const std::vector<cplx> y = detail::ifft(dft);
  std::vector<double> samples(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) samples[k] = y[k].real();
  return make_waveform(x.grid, std::move(samples), x.unit);
}

double HilbertFirDesign::dc_leakage() const {
  double sum = 0.0;
  for (double h : coefficients) sum += h;
  return sum;
}

HilbertFirDesign design_hilbert_fir(std::size_t n_taps, Window window) {
  if (n_taps < 3 || n_taps % 2 == 0)
    throw std::invalid_argument("hilbert fir: n_taps must be odd and >= 3");
  HilbertFirDesign design;
  design.n_taps = n_taps;
  design.window = window;
  design.coefficients = make_window(window, n_taps);
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(n_taps - 1) / 2;
  for (std::size_t k = 0; k < n_taps; ++k) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(k) - c;
    const double ideal = (m % 2 == 0) ? 0.0 : 2.0 / (kPi * static_cast<double>(m));
    design.coefficients[k] *= ideal;
  }
  return design;
}

FirHilbertResult hilbert_fir(const RealWaveform& x, const HilbertFirDesign& design) {
  validate_grid(x.grid);
  if (design.coefficients.size() != design.n_taps || design.n_taps < 3)
    throw std::invalid_argument("hilbert fir: malformed design");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.samples.size());
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(design.group_delay());
  std::vector<double> y(x.samples.size(), 0.0);
  // Convolution with the group delay removed: y[j] = sum_k h[k] x[j + c - k].
  // Only odd offsets carry nonzero taps, so step k by 2 from the first odd slot.
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    double acc = 0.0;
    const std::ptrdiff_t k0 = (c % 2 == 0) ? 1 : 0; // first k with odd offset k - c
    for (std::ptrdiff_t k = k0; k < static_cast<std::ptrdiff_t>(design.n_taps); k += 2) {
      const std::ptrdiff_t idx = j + c - k;
      if (idx >= 0 && idx < n) acc += design.coefficients[k] * x.samples[idx];
    }
    y[j] = acc;
  }
  FirHilbertResult out;
  out.waveform = make_waveform(x.grid, std::move(y), x.unit);
  out.transient_samples = design.group_delay();
  return out;
}

std::string fir_coefficients_csv(const HilbertFirDesign& design) {
  std::string csv = "k,h\n";
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(design.group_delay());
  for (std::size_t k = 0; k < design.coefficients.size(); ++k) {
    csv += std::to_string(static_cast<std::ptrdiff_t>(k) - c);
    csv += ',';
    csv += format_g17(design.coefficients[k]);
    csv += '\n';
  }
  return csv;
}

AnalyticWaveform phase_split(const RealWaveform& x) {
  const RealWaveform xh = hilbert_spectral(x);
  AnalyticWaveform out;
  out.grid = x.grid;
  out.source_unit = x.unit;
  out.samples.resize(x.samples.size());
  for (std::size_t k = 0; k < x.samples.size(); ++k)
    out.samples[k] = cplx(x.samples[k], xh.samples[k]);
  return out;
}

AnalyticWaveform bedrosian_hilbert(const RealWaveform& u, const RealWaveform& v) {
  require_same_grid(u.grid, v.grid, "bedrosian_hilbert");
  const RealWaveform vh = hilbert_spectral(v);
  AnalyticWaveform out;
  out.grid = v.grid;
  out.source_unit = (u.unit == Unit::dimensionless) ? v.unit : Unit::dimensionless;
  out.samples.resize(v.samples.size());
  for (std::size_t k = 0; k < v.samples.size(); ++k)
    out.samples[k] = u.samples[k] * cplx(v.samples[k], vh.samples[k]);
  return out;
}

double estimate_bandwidth(std::span<const cplx> envelope, double sample_rate,
                          double energy_fraction) {
  if (envelope.empty()) throw std::invalid_argument("estimate_bandwidth: empty envelope");
  if (!(sample_rate > 0.0))
    throw std::invalid_argument("estimate_bandwidth: sample_rate must be > 0");
  if (!(energy_fraction > 0.0) || energy_fraction > 1.0)
    throw std::invalid_argument("estimate_bandwidth: fraction must be in (0, 1]");

  const std::size_t n = envelope.size();
  const std::vector<cplx> dft = detail::fft(std::vector<cplx>(envelope.begin(), envelope.end()));
  // Energy per |frequency| shell, from DC outward.
  const std::size_t n_shells = n / 2 + 1;
  std::vector<double> shell_energy(n_shells, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t shell = std::min(k, n - k);
    const double e = std::norm(dft[k]);
    shell_energy[shell] += e;
    total += e;
  }
  if (total == 0.0) return 0.0;
  const double domega = 2.0 * kPi * sample_rate / static_cast<double>(n);
  double cum = 0.0;
  for (std::size_t s = 0; s < n_shells; ++s) {
    cum += shell_energy[s];
    if (cum >= energy_fraction * total) return domega * static_cast<double>(s);
  }
  return domega * static_cast<double>(n_shells - 1);
}

BedrosianReport bedrosian_check(const ModulatedSpec& spec) {
  if (!(spec.omega0 > 0.0)) throw std::invalid_argument("bedrosian_check: omega0 must be > 0");
  BedrosianReport report;
  report.envelope_bandwidth = spec.envelope_bandwidth;
  report.carrier = spec.omega0;
  report.ratio = spec.envelope_bandwidth / spec.omega0;
  report.valid = report.ratio < 1.0;
  return report;
}

BedrosianReport bedrosian_check(std::span<const cplx> envelope, double sample_rate,
                                double omega0) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("bedrosian_check: omega0 must be > 0");
  BedrosianReport report;
  report.envelope_bandwidth = estimate_bandwidth(envelope, sample_rate);
  report.carrier = omega0;
  report.ratio = report.envelope_bandwidth / omega0;
  report.valid = report.ratio < 1.0;
  return report;
}

BedrosianReport bedrosian_validate(const RealWaveform& u, const RealWaveform& v,
                                   double omega0) {
  require_same_grid(u.grid, v.grid, "bedrosian_validate");
  std::vector<cplx> u_cplx(u.samples.size());
  for (std::size_t k = 0; k < u.samples.size(); ++k) u_cplx[k] = cplx(u.samples[k], 0.0);
  BedrosianReport report = bedrosian_check(u_cplx, u.grid.sample_rate, omega0);

  const AnalyticWaveform product_form = bedrosian_hilbert(u, v);
  std::vector<double> uv(u.samples.size());
  for (std::size_t k = 0; k < uv.size(); ++k) uv[k] = u.samples[k] * v.samples[k];
  const AnalyticWaveform oracle = phase_split(make_waveform(u.grid, std::move(uv), Unit::dimensionless));

  double err = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < oracle.samples.size(); ++k) {
    err += std::norm(product_form.samples[k] - oracle.samples[k]);
    ref += std::norm(oracle.samples[k]);
  }
  report.rms_discrepancy = (ref == 0.0) ? 0.0 : std::sqrt(err / ref);
  return report;
}

SpectralTriplet spectral_representations(const RealWaveform& x) {
  SpectralTriplet triplet;
  triplet.signal = spectrum_of(x);

  triplet.hilbert = triplet.signal;
  triplet.hilbert.dc = 0.0;
  triplet.hilbert.nyquist = 0.0;
  for (cplx& v : triplet.hilbert.values) v *= cplx(0.0, -1.0);

  triplet.analytic = triplet.signal;
  for (cplx& v : triplet.analytic.values) v *= 2.0;
  return triplet;
}

} // namespace powertriad
