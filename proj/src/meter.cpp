#include "powertriad/meter.hpp"

#include "fft.hpp"
#include "powertriad/errors.hpp"
#include "powertriad/power.hpp"
#include "powertriad/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace powertriad {
namespace {

constexpr double kPi = std::numbers::pi;

/// Sum of squared residuals after the best least-squares fit of
///   d + sum_{m=1..M} a_m cos(m w t) - b_m sin(m w t)
/// to the samples (t relative to the block start). For any harmonic series of
/// order <= M (plus DC) the residual vanishes exactly at the true fundamental,
/// so minimizing it over w recovers the carrier to machine precision even when
/// the block holds a fractional number of periods.
double comb_fit_residual(const std::vector<double>& x, double sample_rate, double w,
                         std::size_t m_harmonics) {
  const std::size_t n = x.size();
  const std::size_t p = 2 * m_harmonics + 1;
  std::vector<double> basis(p);
  std::vector<double> g(p * p, 0.0), rhs(p, 0.0);
  double sxx = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / sample_rate;
    basis[0] = 1.0;
    for (std::size_t m = 1; m <= m_harmonics; ++m) {
      basis[2 * m - 1] = std::cos(static_cast<double>(m) * w * t);
      basis[2 * m] = -std::sin(static_cast<double>(m) * w * t);
    }
    for (std::size_t r = 0; r < p; ++r) {
      rhs[r] += x[k] * basis[r];
      for (std::size_t c = r; c < p; ++c) g[r * p + c] += basis[r] * basis[c];
    }
    sxx += x[k] * x[k];
  }
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < r; ++c) g[r * p + c] = g[c * p + r];

  // Gaussian elimination with partial pivoting on the normal equations.
  std::vector<double> sol = rhs;
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < p; ++r)
      if (std::abs(g[r * p + col]) > std::abs(g[pivot * p + col])) pivot = r;
    if (g[pivot * p + col] == 0.0) return sxx; // singular: treat as no fit
    if (pivot != col) {
      for (std::size_t c = 0; c < p; ++c) std::swap(g[pivot * p + c], g[col * p + c]);
      std::swap(sol[pivot], sol[col]);
    }
    for (std::size_t r = col + 1; r < p; ++r) {
      const double f = g[r * p + col] / g[col * p + col];
      for (std::size_t c = col; c < p; ++c) g[r * p + c] -= f * g[col * p + c];
      sol[r] -= f * sol[col];
    }
  }
  for (std::size_t col = p; col-- > 0;) {
    for (std::size_t c = col + 1; c < p; ++c) sol[col] -= g[col * p + c] * sol[c];
    sol[col] /= g[col * p + col];
  }
  double fitted = 0.0;
  for (std::size_t r = 0; r < p; ++r) fitted += sol[r] * rhs[r];
  return sxx - fitted;
}

/// Golden-section minimizer of the fit residual over [lo, hi].
double minimize_comb_fit(const std::vector<double>& x, double sample_rate, double lo,
                         double hi, std::size_t m_harmonics) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = comb_fit_residual(x, sample_rate, c, m_harmonics);
  double fd = comb_fit_residual(x, sample_rate, d, m_harmonics);
  for (int it = 0; it < 72 && (b - a) > 1e-12 * std::max(1.0, b); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = comb_fit_residual(x, sample_rate, c, m_harmonics);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = comb_fit_residual(x, sample_rate, d, m_harmonics);
    }
  }
  return 0.5 * (a + b);
}

} // namespace

void MeterConfig::validate() const {
  if (block_size < 8)
    throw std::invalid_argument("meter: block_size must be >= 8");
  const bool known = known_omega0.has_value();
  if (known == estimate_omega0)
    throw std::invalid_argument("meter: choose exactly one of known_omega0 / estimate_omega0");
  if (known && !(*known_omega0 > 0.0))
    throw std::invalid_argument("meter: known_omega0 must be > 0");
  if ((hilbert_mode == HilbertMode::fir) != fir.has_value())
    throw std::invalid_argument("meter: FIR design required exactly when hilbert_mode is fir");
  if (fir && (fir->n_taps < 3 || fir->coefficients.size() != fir->n_taps))
    throw std::invalid_argument("meter: malformed FIR design");
  if (!(smoothing_alpha > 0.0) || smoothing_alpha > 1.0)
    throw std::invalid_argument("meter: smoothing_alpha must be in (0, 1]");
}

std::optional<double> estimate_omega0(const RealWaveform& block) {
  validate_grid(block.grid);
  const std::size_t n = block.grid.n_samples;
  if (n < 16) throw std::invalid_argument("estimate_omega0: block too short");
  const double fs = block.grid.sample_rate;

  double mean = 0.0;
  for (double x : block.samples) mean += x;
  mean /= static_cast<double>(n);

  const std::vector<double> win = make_window(Window::hamming, n);
  std::vector<cplx> buf(n);
  for (std::size_t k = 0; k < n; ++k)
    buf[k] = cplx((block.samples[k] - mean) * win[k], 0.0);
  const std::vector<cplx> dft = detail::fft(buf);

  const std::size_t n_pos = (n - 1) / 2;
  std::vector<double> mags(n_pos);
  for (std::size_t k = 1; k <= n_pos; ++k) mags[k - 1] = std::abs(dft[k]);

  std::size_t peak_bin = 1;
  double peak = 0.0;
  for (std::size_t k = 1; k <= n_pos; ++k)
    if (mags[k - 1] > peak) { peak = mags[k - 1]; peak_bin = k; }

  std::vector<double> sorted = mags;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double median = sorted[sorted.size() / 2];
  if (peak <= 0.0 || peak < 10.0 * median) return std::nullopt; // no dominant tone

  // Coarse sub-bin location: parabolic fit on log magnitude.
  double delta = 0.0;
  if (peak_bin >= 2 && peak_bin + 1 <= n_pos) {
    const double a = std::log(std::max(mags[peak_bin - 2], 1e-300));
    const double b = std::log(std::max(mags[peak_bin - 1], 1e-300));
    const double c = std::log(std::max(mags[peak_bin], 1e-300));
    const double denom = a - 2.0 * b + c;
    if (denom != 0.0) delta = std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
  }
  const double bin_width = 2.0 * kPi * fs / static_cast<double>(n);
  const double coarse = bin_width * (static_cast<double>(peak_bin) + delta);

  // Refinement: minimize the single-tone least-squares residual within one bin
  // of the coarse location, then polish with a harmonic-comb fit so moderate
  // waveform distortion cannot bias the fundamental.
  const double lo = std::max(0.25 * bin_width, coarse - bin_width);
  const double hi = std::min(kPi * fs - 0.25 * bin_width, coarse + bin_width);
  if (!(lo < hi)) return std::nullopt;
  double omega = minimize_comb_fit(block.samples, fs, lo, hi, 1);
  const double nyquist = kPi * fs;
  const std::size_t comb = std::min<std::size_t>(
      5, omega > 0.0 ? static_cast<std::size_t>(0.95 * nyquist / omega) : 1);
  if (comb > 1) {
    const double half = 0.2 * bin_width;
    omega = minimize_comb_fit(block.samples, fs, std::max(lo, omega - half),
                              std::min(hi, omega + half), comb);
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) return std::nullopt;
  return omega;
}

PhiEstimate recover_phi(cplx hermitian, cplx complementary, double omega0, double t) {
  if (std::abs(hermitian) == 0.0)
    throw std::invalid_argument("recover_phi: hermitian power is zero, phase undefined");
  const cplx rotor = std::polar(1.0, -2.0 * omega0 * t) * complementary * std::conj(hermitian);
  PhiEstimate out;
  out.phi = 0.5 * std::arg(rotor); // arg in (-pi, pi] halves into (-pi/2, pi/2]
  out.ambiguous = true;            // the half angle only ever fixes phi modulo pi
  return out;
}

MeterPipeline::MeterPipeline(MeterConfig config, double sample_rate, double t0)
    : config_(std::move(config)), sample_rate_(sample_rate), t0_(t0) {
  config_.validate();
  if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_))
    throw std::invalid_argument("meter: sample_rate must be finite and > 0");
}

std::vector<PowerRecord> MeterPipeline::push(const std::vector<double>& v,
                                             const std::vector<double>& i) {
  if (finished_) throw std::logic_error("meter: push after finish");
  if (v.size() != i.size())
    throw std::invalid_argument("meter: push requires paired samples of equal length");
  v_buf_.insert(v_buf_.end(), v.begin(), v.end());
  i_buf_.insert(i_buf_.end(), i.begin(), i.end());
  return drain_ready(false);
}

std::vector<PowerRecord> MeterPipeline::finish(bool desync) {
  if (finished_) return {};
  finished_ = true;
  std::vector<PowerRecord> records = drain_ready(true);
  const std::size_t leftover = buf_base_ + v_buf_.size() - next_block_;
  dropped_ += leftover;
  if (desync) {
    PowerRecord gap;
    gap.t = t0_ + static_cast<double>(next_block_) / sample_rate_;
    gap.gap = true;
    gap.phi_ambiguous = true;
    records.push_back(gap);
  }
  v_buf_.clear();
  i_buf_.clear();
  return records;
}

std::vector<PowerRecord> MeterPipeline::drain_ready(bool at_end) {
  const std::size_t block = config_.block_size;
  const std::size_t lookahead =
      (config_.hilbert_mode == HilbertMode::fir && !at_end) ? config_.fir->group_delay() : 0;
  std::vector<PowerRecord> records;
  while (buf_base_ + v_buf_.size() >= next_block_ + block + lookahead) {
    records.push_back(process_block(next_block_));
    next_block_ += block;
    // Trim consumed history; FIR mode keeps one group delay of context.
    const std::size_t history =
        (config_.hilbert_mode == HilbertMode::fir) ? config_.fir->group_delay() : 0;
    const std::size_t keep_from = next_block_ > history ? next_block_ - history : 0;
    if (keep_from > buf_base_) {
      const std::size_t drop = keep_from - buf_base_;
      v_buf_.erase(v_buf_.begin(), v_buf_.begin() + static_cast<std::ptrdiff_t>(drop));
      i_buf_.erase(i_buf_.begin(), i_buf_.begin() + static_cast<std::ptrdiff_t>(drop));
      buf_base_ = keep_from;
    }
  }
  return records;
}

PowerRecord MeterPipeline::process_block(std::size_t block_start) {
  const std::size_t block = config_.block_size;
  const std::size_t offset = block_start - buf_base_;
  const SamplingGrid grid{sample_rate_, block,
                          t0_ + static_cast<double>(block_start) / sample_rate_};

  std::vector<double> v(v_buf_.begin() + static_cast<std::ptrdiff_t>(offset),
                        v_buf_.begin() + static_cast<std::ptrdiff_t>(offset + block));
  std::vector<double> i(i_buf_.begin() + static_cast<std::ptrdiff_t>(offset),
                        i_buf_.begin() + static_cast<std::ptrdiff_t>(offset + block));

  // Analytic extension of both channels.
  std::vector<cplx> va(block), ia(block);
  if (config_.hilbert_mode == HilbertMode::spectral_per_block) {
    const AnalyticWaveform vA =
        phase_split(make_waveform(grid, std::vector<double>(v), Unit::volt));
    const AnalyticWaveform iA =
        phase_split(make_waveform(grid, std::vector<double>(i), Unit::ampere));
    va = vA.samples;
    ia = iA.samples;
  } else {
    // Continuous FIR across block boundaries, using whatever history and
    // lookahead the buffer holds (missing stream edges read as zero).
    const HilbertFirDesign& design = *config_.fir;
    const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(design.group_delay());
    const std::ptrdiff_t buf_len = static_cast<std::ptrdiff_t>(v_buf_.size());
    const std::ptrdiff_t k0 = (c % 2 == 0) ? 1 : 0;
    for (std::size_t j = 0; j < block; ++j) {
      const std::ptrdiff_t center = static_cast<std::ptrdiff_t>(offset + j);
      double v_acc = 0.0, i_acc = 0.0;
      for (std::ptrdiff_t k = k0; k < static_cast<std::ptrdiff_t>(design.n_taps); k += 2) {
        const std::ptrdiff_t idx = center + c - k;
        if (idx >= 0 && idx < buf_len) {
          v_acc += design.coefficients[k] * v_buf_[static_cast<std::size_t>(idx)];
          i_acc += design.coefficients[k] * i_buf_[static_cast<std::size_t>(idx)];
        }
      }
      va[j] = cplx(v[j], v_acc);
      ia[j] = cplx(i[j], i_acc);
    }
  }

  PowerRecord rec;
  rec.t = grid.t0;

  // Carrier for this block.
  if (config_.known_omega0) {
    rec.omega0_hat = *config_.known_omega0;
  } else {
    std::optional<double> est;
    try {
      est = estimate_omega0(make_waveform(grid, std::vector<double>(v), Unit::volt));
    } catch (const std::invalid_argument&) {
      est = std::nullopt;
    }
    // A usable estimate must leave at least 4 carrier periods per block.
    if (est && static_cast<double>(block) / sample_rate_ < 4.0 * (2.0 * kPi / *est))
      est = std::nullopt;
    if (est) {
      omega_smoothed_ = omega_smoothed_
                            ? (1.0 - config_.smoothing_alpha) * *omega_smoothed_ +
                                  config_.smoothing_alpha * *est
                            : *est;
    } else {
      rec.estimation_failed = true;
    }
    rec.omega0_hat = omega_smoothed_.value_or(0.0);
  }

  // Power series and block means.
  cplx ph_mean(0.0, 0.0), pc_demod_mean(0.0, 0.0);
  double mag_acc = 0.0, recon_err = 0.0, recon_scale = 0.0;
  const bool have_omega = rec.omega0_hat > 0.0;
  for (std::size_t k = 0; k < block; ++k) {
    const cplx ph = va[k] * std::conj(ia[k]);
    const cplx pc = va[k] * ia[k];
    ph_mean += ph;
    mag_acc += std::abs(ph);
    if (have_omega)
      pc_demod_mean += pc * std::polar(1.0, -2.0 * rec.omega0_hat * grid.time(k));
    const double inst = 0.5 * (ph.real() + pc.real());
    recon_err = std::max(recon_err, std::abs(inst - v[k] * i[k]));
    recon_scale = std::max(recon_scale, std::abs(v[k] * i[k]));
  }
  const double nblock = static_cast<double>(block);
  ph_mean /= nblock;
  pc_demod_mean /= nblock;
  rec.hermitian = ph_mean;
  rec.complementary_demod = have_omega ? pc_demod_mean : cplx(0.0, 0.0);
  rec.apparent_S = 0.5 * mag_acc / nblock;
  rec.active_P = 0.5 * ph_mean.real();
  rec.nonactive_Q = 0.5 * ph_mean.imag();
  const double angle = std::atan2(rec.nonactive_Q, rec.active_P);
  rec.power_factor = std::cos(angle);
  rec.reconstruction_error = recon_scale > 0.0 ? recon_err / recon_scale : 0.0;

  if (std::abs(ph_mean) == 0.0 || !have_omega) {
    rec.degenerate = std::abs(ph_mean) == 0.0;
    rec.phi_hat = 0.0;
  } else {
    // complementary_demod already carries e^{-j 2 w0 t}, so recover at t = 0.
    const PhiEstimate est = recover_phi(ph_mean, pc_demod_mean, rec.omega0_hat, 0.0);
    rec.phi_hat = est.phi;
    rec.phi_ambiguous = est.ambiguous;
  }
  return rec;
}

std::vector<PowerRecord> run_meter(const RealWaveform& v, const RealWaveform& i,
                                   const MeterConfig& config) {
  config.validate();
  if (v.grid.sample_rate != i.grid.sample_rate || v.grid.t0 != i.grid.t0)
    throw std::invalid_argument("run_meter: channel grids must share rate and origin");
  const std::size_t n_common = std::min(v.samples.size(), i.samples.size());
  const bool desync = v.samples.size() != i.samples.size();

  MeterPipeline pipe(config, v.grid.sample_rate, v.grid.t0);
  std::vector<PowerRecord> records =
      pipe.push(std::vector<double>(v.samples.begin(), v.samples.begin() + static_cast<std::ptrdiff_t>(n_common)),
                std::vector<double>(i.samples.begin(), i.samples.begin() + static_cast<std::ptrdiff_t>(n_common)));
  std::vector<PowerRecord> tail = pipe.finish(desync);
  records.insert(records.end(), tail.begin(), tail.end());
  return records;
}

} // namespace powertriad
