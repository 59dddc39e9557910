#include "powertriad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace powertriad {
namespace {

void require_same_grid(const Spectrum& a, const Spectrum& b, const char* what) {
  if (!a.same_grid(b)) throw std::invalid_argument(std::string(what) + ": spectra must share a grid");
}

} // namespace

SpectralAverages avg_powers_spectral(const Spectrum& v, const Spectrum& i) {
  require_same_grid(v, i, "avg_powers_spectral");
  SpectralAverages out;
  cplx herm(v.dc * i.dc + v.nyquist * i.nyquist, 0.0);
  cplx comp(0.0, 0.0);
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    herm += 4.0 * v.values[k] * std::conj(i.values[k]);
    comp += 4.0 * v.values[k] * i.values[k];
  }
  out.hermitian = herm;
  out.complementary = comp;
  out.complementary_mean = v.dc * i.dc + v.nyquist * i.nyquist;
  out.active = 0.5 * (out.hermitian.real() + out.complementary_mean);
  const double duration = static_cast<double>(v.n_samples) / v.sample_rate;
  out.raw_hermitian = duration * out.hermitian;
  out.raw_complementary = duration * out.complementary;
  return out;
}

std::vector<FrequencyPowerTriangle> per_frequency_triangles(const Spectrum& v,
                                                            const Spectrum& i,
                                                            double rel_threshold) {
  require_same_grid(v, i, "per_frequency_triangles");
  std::vector<FrequencyPowerTriangle> rows;
  // Scale the cut to the largest apparent power the pair could carry, not to
  // the largest it does carry: when the spectra are disjoint every bin is
  // rounding noise and a peak-relative cut would keep all of it.
  double v_peak = 0.0, i_peak = 0.0;
  for (const cplx& c : v.values) v_peak = std::max(v_peak, std::abs(c));
  for (const cplx& c : i.values) i_peak = std::max(i_peak, std::abs(c));
  const double scale = 2.0 * v_peak * i_peak;
  if (scale == 0.0) return rows;
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    const double apparent = 2.0 * std::abs(v.values[k]) * std::abs(i.values[k]);
    if (apparent <= rel_threshold * scale) continue;
    const cplx cross = v.values[k] * std::conj(i.values[k]);
    FrequencyPowerTriangle row;
    row.omega = v.omega[k];
    row.apparent = apparent;
    row.active = 2.0 * cross.real();
    row.nonactive = 2.0 * cross.imag();
    rows.push_back(row);
  }
  return rows;
}

PythagorasGap broadband_pythagoras_gap(const Spectrum& v, const Spectrum& i) {
  require_same_grid(v, i, "broadband_pythagoras_gap");
  PythagorasGap out;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    const double apparent = 2.0 * std::abs(v.values[k]) * std::abs(i.values[k]);
    sum += apparent;
    sum_sq += apparent * apparent;
  }
  out.lhs = sum * sum;
  out.rhs = sum_sq;
  out.gap = out.lhs - out.rhs;
  return out;
}

SpectralTheveninResult thevenin_spectral(const std::vector<cplx>& impedance,
                                         const Spectrum& i) {
  if (impedance.size() != i.values.size())
    throw std::invalid_argument("thevenin_spectral: impedance must cover every positive bin");
  SpectralTheveninResult out;
  cplx herm(0.0, 0.0), comp(0.0, 0.0);
  for (std::size_t k = 0; k < i.values.size(); ++k) {
    const cplx z = impedance[k];
    const cplx ik = i.values[k];
    const cplx vk = z * ik;
    SpectralTheveninRow row;
    row.omega = i.omega[k];
    row.impedance = z;
    row.hermitian = 4.0 * z * std::norm(ik);
    row.complementary = 4.0 * vk * ik;
    row.triangle.omega = i.omega[k];
    row.triangle.apparent = 2.0 * std::abs(vk) * std::abs(ik);
    const cplx cross = vk * std::conj(ik);
    row.triangle.active = 2.0 * cross.real();
    row.triangle.nonactive = 2.0 * cross.imag();
    out.rows.push_back(row);
    herm += row.hermitian;
    comp += row.complementary;
  }
  // DC and Nyquist are outside the impedance table and contribute nothing.
  out.totals.hermitian = herm;
  out.totals.complementary = comp;
  out.totals.complementary_mean = 0.0;
  out.totals.active = 0.5 * herm.real();
  const double duration = static_cast<double>(i.n_samples) / i.sample_rate;
  out.totals.raw_hermitian = duration * herm;
  out.totals.raw_complementary = duration * comp;
  return out;
}

SpectralAverages line_spectra_powers(const std::vector<HarmonicLine>& v,
                                     const std::vector<HarmonicLine>& i,
                                     double omega0) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("line_spectra_powers: omega0 must be > 0");
  auto to_map = [](const std::vector<HarmonicLine>& lines, const char* which) {
    std::map<int, cplx> m;
    for (const HarmonicLine& line : lines) {
      if (line.index < 1)
        throw std::invalid_argument(std::string("line_spectra_powers: ") + which +
                                    " harmonic index must be >= 1");
      if (!m.emplace(line.index, line.coefficient).second)
        throw std::invalid_argument(std::string("line_spectra_powers: duplicate ") + which +
                                    " harmonic index " + std::to_string(line.index));
    }
    return m;
  };
  const std::map<int, cplx> vm = to_map(v, "voltage");
  const std::map<int, cplx> im = to_map(i, "current");

  SpectralAverages out;
  cplx herm(0.0, 0.0), comp(0.0, 0.0);
  for (const auto& [index, vc] : vm) {
    auto it = im.find(index);
    if (it == im.end()) continue;
    herm += 4.0 * vc * std::conj(it->second);
    comp += 4.0 * vc * it->second;
  }
  out.hermitian = herm;
  out.complementary = comp;
  out.complementary_mean = 0.0;
  out.active = 0.5 * herm.real();
  out.raw_hermitian = herm;
  out.raw_complementary = comp;
  return out;
}

} // namespace powertriad
