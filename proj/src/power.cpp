#include "powertriad/power.hpp"

#include "powertriad/errors.hpp"

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

double wrap_pi(double angle) {
  angle = std::remainder(angle, 2.0 * kPi); // (-pi, pi] up to the boundary convention
  if (angle <= -kPi) angle = kPi;
  return angle;
}

cplx mean(const std::vector<cplx>& z, std::size_t first, std::size_t count) {
  cplx acc(0.0, 0.0);
  for (std::size_t k = first; k < first + count; ++k) acc += z[k];
  return acc / static_cast<double>(count);
}

} // namespace

RealWaveform instantaneous_power(const RealWaveform& v, const RealWaveform& i) {
  require_same_grid(v.grid, i.grid, "instantaneous_power");
  if (v.unit != Unit::volt || i.unit != Unit::ampere)
    throw std::invalid_argument("instantaneous_power: expects a volt series and an ampere series");
  std::vector<double> p(v.samples.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = v.samples[k] * i.samples[k];
  return make_waveform(v.grid, std::move(p), Unit::watt);
}

ComplexSeries hermitian_power(const AnalyticWaveform& v, const AnalyticWaveform& i) {
  require_same_grid(v.grid, i.grid, "hermitian_power");
  ComplexSeries out;
  out.grid = v.grid;
  out.samples.resize(v.samples.size());
  for (std::size_t k = 0; k < out.samples.size(); ++k)
    out.samples[k] = v.samples[k] * std::conj(i.samples[k]);
  return out;
}

ComplexSeries complementary_power(const AnalyticWaveform& v, const AnalyticWaveform& i) {
  require_same_grid(v.grid, i.grid, "complementary_power");
  ComplexSeries out;
  out.grid = v.grid;
  out.samples.resize(v.samples.size());
  for (std::size_t k = 0; k < out.samples.size(); ++k)
    out.samples[k] = v.samples[k] * i.samples[k];
  return out;
}

RealWaveform reconstruct_instantaneous(const ComplexSeries& hermitian,
                                       const ComplexSeries& complementary) {
  require_same_grid(hermitian.grid, complementary.grid, "reconstruct_instantaneous");
  if (hermitian.samples.size() != complementary.samples.size())
    throw std::invalid_argument("reconstruct_instantaneous: length mismatch");
  std::vector<double> p(hermitian.samples.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    p[k] = 0.5 * (hermitian.samples[k].real() + complementary.samples[k].real());
  return make_waveform(hermitian.grid, std::move(p), Unit::watt);
}

ActiveNonactiveSplit active_nonactive_split(const ComplexSeries& hermitian,
                                            const ComplexSeries& complementary) {
  require_same_grid(hermitian.grid, complementary.grid, "active_nonactive_split");
  if (hermitian.samples.size() != complementary.samples.size())
    throw std::invalid_argument("active_nonactive_split: length mismatch");
  const std::size_t n = hermitian.samples.size();
  ActiveNonactiveSplit out;
  out.active.resize(n);
  out.nonactive.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ph = hermitian.samples[k];
    const cplx pc = complementary.samples[k];
    const double inst = 0.5 * (ph.real() + pc.real());
    if (std::abs(ph) == 0.0 || std::abs(pc) == 0.0) {
      // psi is undefined; park everything in the active channel and flag it.
      out.active[k] = inst;
      out.nonactive[k] = 0.0;
      out.degenerate_samples.push_back(k);
      continue;
    }
    // complementary = hermitian * e^{j psi}; cos psi from the normalized rotor.
    const cplx rotor = pc * std::conj(ph);
    const double cos_psi = rotor.real() / std::abs(rotor);
    out.active[k] = 0.5 * ph.real() * (1.0 + cos_psi);
    out.nonactive[k] = inst - out.active[k];
  }
  return out;
}

PositiveNegativeSplit positive_negative_split(const RealWaveform& p) {
  validate_grid(p.grid);
  std::vector<double> pos(p.samples.size()), neg(p.samples.size());
  for (std::size_t k = 0; k < p.samples.size(); ++k) {
    pos[k] = std::max(p.samples[k], 0.0);
    neg[k] = std::min(p.samples[k], 0.0);
  }
  PositiveNegativeSplit out;
  out.positive = make_waveform(p.grid, std::move(pos), p.unit);
  out.negative = make_waveform(p.grid, std::move(neg), p.unit);
  return out;
}

PosNegAverages closed_form_pos_neg_averages(double v_amp, double i_amp,
                                            double theta, double phi) {
  if (v_amp < 0.0 || i_amp < 0.0)
    throw std::invalid_argument("closed_form_pos_neg_averages: amplitudes must be >= 0");
  const double s = 0.5 * v_amp * i_amp;  // VI/2
  const double delta = std::abs(wrap_pi(theta - phi));
  PosNegAverages out;
  out.avg_negative = -s * (std::sin(delta) / kPi - (delta / kPi) * std::cos(delta));
  out.avg_positive = s * std::cos(delta) - out.avg_negative;
  out.negative_fraction = delta / kPi;
  return out;
}

PowerSeries power_series(const AnalyticWaveform& v, const AnalyticWaveform& i) {
  require_same_grid(v.grid, i.grid, "power_series");
  return power_series_from_components(
      v.grid, hermitian_power(v, i).samples, complementary_power(v, i).samples);
}

PowerSeries power_series_from_components(const SamplingGrid& grid,
                                         std::vector<cplx> hermitian,
                                         std::vector<cplx> complementary) {
  validate_grid(grid);
  if (hermitian.size() != grid.n_samples || complementary.size() != grid.n_samples)
    throw std::invalid_argument("power_series: component length does not match grid");

  PowerSeries series;
  series.grid = grid;
  series.hermitian = std::move(hermitian);
  series.complementary = std::move(complementary);

  const std::size_t n = grid.n_samples;
  series.instantaneous.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    series.instantaneous[k] =
        0.5 * (series.hermitian[k].real() + series.complementary[k].real());

  ComplexSeries ph{grid, series.hermitian};
  ComplexSeries pc{grid, series.complementary};
  ActiveNonactiveSplit split = active_nonactive_split(ph, pc);
  series.active = std::move(split.active);
  series.nonactive = std::move(split.nonactive);
  series.degenerate_samples = std::move(split.degenerate_samples);

  series.positive.resize(n);
  series.negative.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    series.positive[k] = std::max(series.instantaneous[k], 0.0);
    series.negative[k] = std::min(series.instantaneous[k], 0.0);
  }
  return series;
}

PowerSummary power_summary(const PowerSeries& series, std::size_t first,
                           std::optional<std::size_t> count) {
  const std::size_t n = series.hermitian.size();
  const std::size_t len = count.value_or(n > first ? n - first : 0);
  if (len == 0 || first + len > n)
    throw std::invalid_argument("power_summary: empty or out-of-range window");

  double mag_acc = 0.0;
  for (std::size_t k = first; k < first + len; ++k) mag_acc += std::abs(series.hermitian[k]);
  const cplx herm_mean = mean(series.hermitian, first, len);

  PowerSummary s;
  s.apparent_S = 0.5 * mag_acc / static_cast<double>(len);
  s.active_P = 0.5 * herm_mean.real();
  s.nonactive_Q = 0.5 * herm_mean.imag();
  s.power_angle = std::atan2(s.nonactive_Q, s.active_P);
  if (s.power_angle == -kPi) s.power_angle = kPi; // keep the (-pi, pi] convention
  s.power_factor = std::cos(s.power_angle);

  double pos_acc = 0.0, neg_acc = 0.0;
  std::size_t neg_count = 0;
  for (std::size_t k = first; k < first + len; ++k) {
    const double p = series.instantaneous[k];
    pos_acc += std::max(p, 0.0);
    neg_acc += std::min(p, 0.0);
    if (p < 0.0) ++neg_count;
  }
  s.avg_positive = pos_acc / static_cast<double>(len);
  s.avg_negative = neg_acc / static_cast<double>(len);
  s.negative_fraction = static_cast<double>(neg_count) / static_cast<double>(len);
  return s;
}

PowerSummary power_summary(double v_amp, double i_amp, double theta, double phi) {
  if (v_amp < 0.0 || i_amp < 0.0)
    throw std::invalid_argument("power_summary: amplitudes must be >= 0");
  PowerSummary s;
  s.apparent_S = 0.5 * v_amp * i_amp;
  const double delta = wrap_pi(theta - phi);
  s.active_P = s.apparent_S * std::cos(delta);
  s.nonactive_Q = s.apparent_S * std::sin(delta);
  s.power_angle = delta;
  s.power_factor = std::cos(delta);
  const PosNegAverages pn = closed_form_pos_neg_averages(v_amp, i_amp, theta, phi);
  s.avg_positive = pn.avg_positive;
  s.avg_negative = pn.avg_negative;
  s.negative_fraction = pn.negative_fraction;
  return s;
}

} // namespace powertriad
