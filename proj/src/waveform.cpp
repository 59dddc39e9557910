#include "powertriad/waveform.hpp"

#include "powertriad/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace powertriad {

const char* unit_name(Unit u) {
  switch (u) {
    case Unit::volt: return "volt";
    case Unit::ampere: return "ampere";
    case Unit::watt: return "watt";
    case Unit::dimensionless: return "dimensionless";
  }
  return "unknown";
}

double SamplingGrid::nyquist_omega() const {
  return std::numbers::pi * sample_rate;
}

void validate_grid(const SamplingGrid& grid) {
  if (!(grid.sample_rate > 0.0) || !std::isfinite(grid.sample_rate))
    throw std::invalid_argument("grid: sample_rate must be finite and > 0");
  if (grid.n_samples == 0)
    throw std::invalid_argument("grid: n_samples must be > 0");
  if (!std::isfinite(grid.t0))
    throw std::invalid_argument("grid: t0 must be finite");
}

RealWaveform make_waveform(SamplingGrid grid, std::vector<double> samples, Unit unit) {
  validate_grid(grid);
  if (samples.size() != grid.n_samples)
    throw std::invalid_argument("waveform: sample count does not match grid");
  for (std::size_t k = 0; k < samples.size(); ++k)
    if (!std::isfinite(samples[k]))
      throw DataError("waveform: non-finite sample at index " + std::to_string(k));
  return RealWaveform{grid, std::move(samples), unit};
}

std::vector<double> AnalyticWaveform::real_part() const {
  std::vector<double> out(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) out[k] = samples[k].real();
  return out;
}

std::vector<double> AnalyticWaveform::imag_part() const {
  std::vector<double> out(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) out[k] = samples[k].imag();
  return out;
}

double rms(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

double rms(const std::vector<cplx>& z) {
  if (z.empty()) return 0.0;
  double acc = 0.0;
  for (const cplx& v : z) acc += std::norm(v);
  return std::sqrt(acc / static_cast<double>(z.size()));
}

} // namespace powertriad
