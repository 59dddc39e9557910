#pragma once

#include "powertriad/signals.hpp"
#include "powertriad/waveform.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace testutil {

inline constexpr double kPi = std::numbers::pi;

/// Grid holding `periods` whole carrier periods at `spp` samples per period.
struct ToneGrid {
  powertriad::SamplingGrid grid;
  double omega0;
};

inline ToneGrid tone_grid(std::size_t spp, std::size_t periods, double f0 = 50.0,
                          double t0 = 0.0) {
  ToneGrid tg;
  tg.grid = powertriad::SamplingGrid{static_cast<double>(spp) * f0, spp * periods, t0};
  tg.omega0 = 2.0 * kPi * f0;
  return tg;
}

inline double max_abs(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

/// Zero-mean random harmonic series, periodic on the grid by construction.
inline powertriad::RealWaveform random_periodic(const powertriad::SamplingGrid& grid,
                                                double fundamental_hz, std::mt19937& rng,
                                                std::size_t max_harmonics = 12) {
  std::uniform_real_distribution<double> amp(0.1, 1.0);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  std::uniform_int_distribution<std::size_t> count(1, max_harmonics);
  powertriad::HarmonicSpec spec;
  spec.omega0 = 2.0 * kPi * fundamental_hz;
  const std::size_t n_terms = count(rng);
  for (std::size_t m = 1; m <= n_terms; ++m)
    spec.terms.push_back({static_cast<int>(m), amp(rng), phase(rng)});
  return gen_harmonic(spec, grid);
}

} // namespace testutil
