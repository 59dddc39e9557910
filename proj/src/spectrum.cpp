#include "powertriad/spectrum.hpp"

#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace powertriad {

double Spectrum::magnitude(std::size_t bin) const { return std::abs(values.at(bin)); }

double Spectrum::phase(std::size_t bin) const { return std::arg(values.at(bin)); }

std::vector<std::size_t> Spectrum::support(double rel_threshold) const {
  double peak = 0.0;
  for (const cplx& v : values) peak = std::max(peak, std::abs(v));
  std::vector<std::size_t> bins;
  if (peak == 0.0) return bins;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (std::abs(values[k]) > rel_threshold * peak) bins.push_back(k);
  return bins;
}

bool Spectrum::same_grid(const Spectrum& other) const {
  return sample_rate == other.sample_rate && n_samples == other.n_samples && t0 == other.t0;
}

Spectrum spectrum_of(const RealWaveform& x) {
  validate_grid(x.grid);
  const std::size_t n = x.grid.n_samples;
  const std::vector<cplx> dft = detail::fft_real(x.samples);
  const double scale = 1.0 / static_cast<double>(n);

  Spectrum s;
  s.sample_rate = x.grid.sample_rate;
  s.n_samples = n;
  s.t0 = x.grid.t0;
  s.dc = dft[0].real() * scale;
  const std::size_t n_pos = (n - 1) / 2; // strictly-positive, strictly-below-Nyquist bins
  if (n % 2 == 0) s.nyquist = dft[n / 2].real() * scale;
  s.omega.resize(n_pos);
  s.values.resize(n_pos);
  const double domega = 2.0 * std::numbers::pi * x.grid.sample_rate / static_cast<double>(n);
  for (std::size_t k = 1; k <= n_pos; ++k) {
    s.omega[k - 1] = domega * static_cast<double>(k);
    s.values[k - 1] = dft[k] * scale;
  }
  return s;
}

RealWaveform synthesize(const Spectrum& s, Unit unit) {
  if (s.n_samples == 0) throw std::invalid_argument("synthesize: empty spectrum");
  const std::size_t n = s.n_samples;
  const std::size_t n_pos = (n - 1) / 2;
  if (s.values.size() != n_pos)
    throw std::invalid_argument("synthesize: bin count inconsistent with n_samples");

  std::vector<cplx> dft(n, cplx(0.0, 0.0));
  dft[0] = cplx(s.dc * static_cast<double>(n), 0.0);
  for (std::size_t k = 1; k <= n_pos; ++k) {
    dft[k] = s.values[k - 1] * static_cast<double>(n);
    dft[n - k] = std::conj(dft[k]);
  }
  if (n % 2 == 0) dft[n / 2] = cplx(s.nyquist * static_cast<double>(n), 0.0);

  const std::vector<cplx> x = detail::ifft(dft);
  std::vector<double> samples(n);
  for (std::size_t k = 0; k < n; ++k) samples[k] = x[k].real();
  SamplingGrid grid{s.sample_rate, n, s.t0};
  return make_waveform(grid, std::move(samples), unit);
}

} // namespace powertriad
