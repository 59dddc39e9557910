#include "demos.hpp"

#include "cli_support.hpp"

#include "powertriad/hilbert.hpp"
#include "powertriad/power.hpp"
#include "powertriad/signals.hpp"
#include "powertriad/spectral.hpp"
#include "powertriad/spectrum.hpp"
#include "powertriad/thevenin.hpp"
#include "powertriad/waveform.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

namespace powertriad::cli {
namespace {

constexpr double kPi = std::numbers::pi;

/// Accumulates pass/fail lines; every expected value is printed next to the
/// computed one so the run audits itself.
class DemoReport {
public:
  explicit DemoReport(const std::string& title) {
    std::printf("== demo %s ==\n", title.c_str());
    std::printf("%-44s %-22s %-22s %-9s %s\n", "check", "expected", "computed",
                "tol", "result");
  }

  void check_close(const std::string& label, double expected, double computed,
                   double tol) {
    const bool ok = std::abs(expected - computed) <= tol;
    all_ok_ &= ok;
    std::printf("%-44s %-22.10g %-22.10g %-9.1g %s\n", label.c_str(), expected,
                computed, tol, ok ? "ok" : "FAIL");
  }

  void check_below(const std::string& label, double computed, double bound) {
    const bool ok = computed < bound;
    all_ok_ &= ok;
    std::printf("%-44s %-22s %-22.10g %-9.1g %s\n", label.c_str(),
                ("< " + format_g17(bound)).substr(0, 22).c_str(), computed,
                bound, ok ? "ok" : "FAIL");
  }

  void check_above(const std::string& label, double computed, double bound) {
    const bool ok = computed > bound;
    all_ok_ &= ok;
    std::printf("%-44s %-22s %-22.10g %-9.1g %s\n", label.c_str(),
                ("> " + format_g17(bound)).substr(0, 22).c_str(), computed,
                bound, ok ? "ok" : "FAIL");
  }

  void note(const std::string& text) { std::printf("%s\n", text.c_str()); }

  int finish(const std::string& name) const {
    if (all_ok_) {
      std::printf("demo %s: all checks passed\n", name.c_str());
      return 0;
    }
    std::printf("demo %s: CHECKS FAILED\n", name.c_str());
    return 1;
  }

private:
  bool all_ok_ = true;
};

SamplingGrid demo_grid(std::size_t samples_per_period, std::size_t periods,
                       double f0 = 50.0) {
  return SamplingGrid{static_cast<double>(samples_per_period) * f0,
                      samples_per_period * periods, 0.0};
}

/// delta defaults differ per demo; the effective value is printed either way.
double delta_or(std::optional<double> delta, double fallback) {
  return delta.value_or(fallback);
}

// ---------------------------------------------------------------------------

int demo_power_triangle(std::optional<double> delta_opt, const std::string& out_dir) {
  const double delta = delta_or(delta_opt, kPi / 3.0);
  DemoReport report("power-triangle: S,P,Q of a sinusoidal pair");
  report.note("pair: V=1, I=1, theta=" + format_g17(delta) +
              ", phi=0  (delta = theta - phi)");
  report.note("sources: closed-form sinusoidal averages vs the full waveform path");

  // Closed-form path.
  const PowerSummary closed = power_summary(1.0, 1.0, delta, 0.0);
  report.check_close("apparent S = VI/2 (closed form)", 0.5, closed.apparent_S, 1e-12);
  report.check_close("active P = (VI/2)cos(delta)", 0.5 * std::cos(delta),
                     closed.active_P, 1e-12);
  report.check_close("nonactive Q = (VI/2)sin(delta)", 0.5 * std::sin(delta),
                     closed.nonactive_Q, 1e-12);

  // Full waveform path: generate, phase-split, decompose, average.
  const SamplingGrid grid = demo_grid(64, 10);
  const double omega0 = 2.0 * kPi * 50.0;
  const RealWaveform v = gen_sinusoid({1.0, delta, omega0}, grid, Unit::volt);
  const RealWaveform i = gen_sinusoid({1.0, 0.0, omega0}, grid, Unit::ampere);
  const PowerSeries series = power_series(phase_split(v), phase_split(i));
  const PowerSummary measured = power_summary(series);

  report.check_close("apparent S (waveform path)", closed.apparent_S,
                     measured.apparent_S, 1e-9);
  report.check_close("active P (waveform path)", closed.active_P,
                     measured.active_P, 1e-9);
  report.check_close("nonactive Q (waveform path)", closed.nonactive_Q,
                     measured.nonactive_Q, 1e-9);
  report.check_close("triangle closure S^2 - (P^2 + Q^2)", 0.0,
                     measured.apparent_S * measured.apparent_S -
                         (measured.active_P * measured.active_P +
                          measured.nonactive_Q * measured.nonactive_Q),
                     1e-9);
  report.check_close("power factor cos(delta)", std::cos(delta),
                     measured.power_factor, 1e-9);

  // Rotating-phasor table over one carrier period: the hermitian phasor sits
  // still while the complementary one sweeps the circle at 2 w0.
  std::string csv = "t,re_pH,im_pH,re_pC,im_pC\n";
  for (std::size_t k = 0; k < 64; ++k) {
    csv += format_g17(grid.time(k));
    csv += ',';
    csv += format_g17(series.hermitian[k].real());
    csv += ',';
    csv += format_g17(series.hermitian[k].imag());
    csv += ',';
    csv += format_g17(series.complementary[k].real());
    csv += ',';
    csv += format_g17(series.complementary[k].imag());
    csv += '\n';
  }
  const auto csv_path = std::filesystem::path(out_dir) / "demo_power_triangle_phasors.csv";
  write_text_file(csv_path, csv);
  report.note("wrote " + csv_path.string() + " (one carrier period of both power phasors)");

  RunManifest manifest("demo power-triangle");
  manifest.add_parameter("delta", delta);
  manifest.add_parameter("out-dir", out_dir);
  manifest.add_output(csv_path);
  const auto manifest_path =
      std::filesystem::path(out_dir) / "demo_power_triangle.manifest.json";
  manifest.write(manifest_path);

  return report.finish("power-triangle");
}

// ---------------------------------------------------------------------------

int demo_pos_neg(std::optional<double> delta_opt, const std::string& out_dir) {
  const double delta = delta_or(delta_opt, kPi / 2.0);
  DemoReport report("pos-neg: positive/negative split of instantaneous power");
  report.note("pair: V=I=sqrt(2) so VI/2 = 1, theta=" + format_g17(delta) + ", phi=0");
  report.note("sources: closed-form period averages vs one sampled period (N=4096)");

  const double amp = std::sqrt(2.0);
  const PosNegAverages closed = closed_form_pos_neg_averages(amp, amp, delta, 0.0);

  // One carrier period sampled densely; the min(p,0)/max(p,0) means are the
  // numeric oracle the closed forms must match.
  const double f0 = 50.0;
  const std::size_t n = 4096;
  const SamplingGrid grid{f0 * static_cast<double>(n), n, 0.0};
  const double omega0 = 2.0 * kPi * f0;
  const RealWaveform v = gen_sinusoid({amp, delta, omega0}, grid, Unit::volt);
  const RealWaveform i = gen_sinusoid({amp, 0.0, omega0}, grid, Unit::ampere);
  const RealWaveform p = instantaneous_power(v, i);
  const PositiveNegativeSplit split = positive_negative_split(p);

  double pos_mean = 0.0, neg_mean = 0.0;
  std::size_t neg_count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    pos_mean += split.positive.samples[k];
    neg_mean += split.negative.samples[k];
    if (p.samples[k] < 0.0) ++neg_count;
  }
  pos_mean /= static_cast<double>(n);
  neg_mean /= static_cast<double>(n);
  const double sampled_fraction = static_cast<double>(neg_count) / static_cast<double>(n);

  report.check_close("avg negative power (closed vs sampled)", closed.avg_negative,
                     neg_mean, 1e-6);
  report.check_close("avg positive power (closed vs sampled)", closed.avg_positive,
                     pos_mean, 1e-6);
  report.check_close("P = avg_pos + avg_neg = cos(delta)", std::cos(delta),
                     pos_mean + neg_mean, 1e-9);
  report.check_close("negative-time fraction = |delta|/pi", closed.negative_fraction,
                     sampled_fraction, 2.0 / static_cast<double>(n) + 1e-12);

  std::string csv = "t,p,p_pos,p_neg\n";
  for (std::size_t k = 0; k < n; ++k) {
    csv += format_g17(grid.time(k));
    csv += ',';
    csv += format_g17(p.samples[k]);
    csv += ',';
    csv += format_g17(split.positive.samples[k]);
    csv += ',';
    csv += format_g17(split.negative.samples[k]);
    csv += '\n';
  }
  const auto csv_path = std::filesystem::path(out_dir) / "demo_pos_neg_series.csv";
  write_text_file(csv_path, csv);
  report.note("wrote " + csv_path.string() + " (one period of p, max(p,0), min(p,0))");

  RunManifest manifest("demo pos-neg");
  manifest.add_parameter("delta", delta);
  manifest.add_parameter("out-dir", out_dir);
  manifest.add_output(csv_path);
  manifest.write(std::filesystem::path(out_dir) / "demo_pos_neg.manifest.json");

  return report.finish("pos-neg");
}

// ---------------------------------------------------------------------------

/// Lowpass comb envelope with a Gaussian amplitude profile over harmonics of
/// 0.1*w0. With sigma^2 = 27.04 the 99.9%-energy bandwidth lands exactly on
/// 0.9*w0 while the residual tail still reaches past the carrier, so the
/// product construction visibly breaks even though the reported ratio is
/// below one.
RealWaveform wideband_envelope(const SamplingGrid& grid, double omega0) {
  HarmonicSpec spec;
  spec.omega0 = 0.1 * omega0;
  for (int m = 1; m <= 12; ++m) {
    const double a = std::exp(-static_cast<double>(m * m) / 27.04);
    spec.terms.push_back({m, a, 0.3 * static_cast<double>(m)});
  }
  return gen_harmonic(spec, grid);
}

int demo_bedrosian(const std::string& out_dir) {
  DemoReport report("bedrosian: when the product construction is trustworthy");
  report.note("carrier f0 = 50 Hz; record = 20 periods at 64 samples/period");
  report.note("sources: product-form analytic signal vs the spectral oracle on u*v");

  const SamplingGrid grid = demo_grid(64, 20);
  const double omega0 = 2.0 * kPi * 50.0;
  const RealWaveform carrier = gen_sinusoid({1.0, 0.0, omega0}, grid);

  // Narrowband envelope: one tone at 0.05*w0.
  std::vector<double> narrow_samples(grid.n_samples);
  for (std::size_t k = 0; k < grid.n_samples; ++k)
    narrow_samples[k] = 1.0 + 0.5 * std::cos(0.05 * omega0 * grid.time(k));
  const RealWaveform narrow =
      make_waveform(grid, std::move(narrow_samples), Unit::dimensionless);
  const BedrosianReport narrow_report = bedrosian_validate(narrow, carrier, omega0);

  report.check_close("narrow envelope: measured band ratio", 0.05,
                     narrow_report.ratio, 1e-9);
  report.check_below("narrow envelope: relative RMS error",
                     narrow_report.rms_discrepancy.value(), 1e-6);

  // Wideband envelope: Gaussian harmonic comb, reported ratio 0.9.
  const RealWaveform wide = wideband_envelope(grid, omega0);
  const BedrosianReport wide_report = bedrosian_validate(wide, carrier, omega0);

  report.check_close("wide envelope: measured band ratio", 0.9,
                     wide_report.ratio, 1e-9);
  report.check_above("wide envelope: relative RMS error",
                     wide_report.rms_discrepancy.value(), 1e-3);

  // Per-sample error magnitude of both constructions.
  const AnalyticWaveform narrow_product = bedrosian_hilbert(narrow, carrier);
  const AnalyticWaveform narrow_oracle = [&] {
    std::vector<double> prod(grid.n_samples);
    for (std::size_t k = 0; k < grid.n_samples; ++k)
      prod[k] = narrow.samples[k] * carrier.samples[k];
    return phase_split(make_waveform(grid, std::move(prod), Unit::dimensionless));
  }();
  const AnalyticWaveform wide_product = bedrosian_hilbert(wide, carrier);
  const AnalyticWaveform wide_oracle = [&] {
    std::vector<double> prod(grid.n_samples);
    for (std::size_t k = 0; k < grid.n_samples; ++k)
      prod[k] = wide.samples[k] * carrier.samples[k];
    return phase_split(make_waveform(grid, std::move(prod), Unit::dimensionless));
  }();

  std::string csv = "t,err_narrow,err_wide\n";
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    csv += format_g17(grid.time(k));
    csv += ',';
    csv += format_g17(std::abs(narrow_product.samples[k] - narrow_oracle.samples[k]));
    csv += ',';
    csv += format_g17(std::abs(wide_product.samples[k] - wide_oracle.samples[k]));
    csv += '\n';
  }
  const auto csv_path = std::filesystem::path(out_dir) / "demo_bedrosian_error.csv";
  write_text_file(csv_path, csv);
  report.note("wrote " + csv_path.string() + " (pointwise construction error, both envelopes)");

  RunManifest manifest("demo bedrosian");
  manifest.add_parameter("out-dir", out_dir);
  manifest.add_output(csv_path);
  manifest.write(std::filesystem::path(out_dir) / "demo_bedrosian.manifest.json");

  return report.finish("bedrosian");
}

// ---------------------------------------------------------------------------

int demo_czarnecki(const std::string& out_dir) {
  DemoReport report("czarnecki: apparent powers do not add in quadrature");
  report.note("broadband bound: lhs = (sum_w apparent)^2, rhs = sum_w apparent^2");

  const SamplingGrid grid = demo_grid(64, 10);
  const double omega0 = 2.0 * kPi * 50.0;

  // Two equal bins of apparent power a = 0.5 each: the gap is exactly 2 a^2.
  HarmonicSpec two_bins;
  two_bins.omega0 = omega0;
  two_bins.terms = {{1, 1.0, 0.0}, {3, 1.0, 0.0}};
  const RealWaveform v2 = gen_harmonic(two_bins, grid, Unit::volt);
  const RealWaveform i2 = gen_harmonic(two_bins, grid, Unit::ampere);
  const PythagorasGap equal_gap =
      broadband_pythagoras_gap(spectrum_of(v2), spectrum_of(i2));

  report.check_close("two equal bins: lhs = (2a)^2", 1.0, equal_gap.lhs, 1e-12);
  report.check_close("two equal bins: rhs = 2 a^2", 0.5, equal_gap.rhs, 1e-12);
  report.check_close("two equal bins: gap = 2 a^2", 0.5, equal_gap.gap, 1e-12);

  // A three-harmonic pair: the gap is strictly positive.
  HarmonicSpec v_spec, i_spec;
  v_spec.omega0 = omega0;
  v_spec.terms = {{1, 1.0, 0.0}, {3, 0.2, 0.5236}, {5, 0.1, -0.8}};
  i_spec.omega0 = omega0;
  i_spec.terms = {{1, 0.8, -0.3}, {3, 0.15, 0.2}, {5, 0.05, 1.0}};
  const RealWaveform v3 = gen_harmonic(v_spec, grid, Unit::volt);
  const RealWaveform i3 = gen_harmonic(i_spec, grid, Unit::ampere);
  const Spectrum v3_spec = spectrum_of(v3);
  const Spectrum i3_spec = spectrum_of(i3);
  const PythagorasGap harmonic_gap = broadband_pythagoras_gap(v3_spec, i3_spec);
  const std::vector<FrequencyPowerTriangle> triangles =
      per_frequency_triangles(v3_spec, i3_spec);

  report.note("three-harmonic pair: lhs = " + format_g17(harmonic_gap.lhs) +
              ", rhs = " + format_g17(harmonic_gap.rhs) +
              ", gap = " + format_g17(harmonic_gap.gap));
  report.check_above("three-harmonic pair: gap", harmonic_gap.gap, 0.0);

  double rhs_from_triangles = 0.0;
  for (const auto& row : triangles)
    rhs_from_triangles += row.active * row.active + row.nonactive * row.nonactive;
  report.check_close("rhs equals the per-bin leg sum", harmonic_gap.rhs,
                     rhs_from_triangles, 1e-9);

  std::string csv = "omega,apparent,active,nonactive\n";
  for (const auto& row : triangles) {
    csv += format_g17(row.omega);
    csv += ',';
    csv += format_g17(row.apparent);
    csv += ',';
    csv += format_g17(row.active);
    csv += ',';
    csv += format_g17(row.nonactive);
    csv += '\n';
  }
  const auto csv_path = std::filesystem::path(out_dir) / "demo_czarnecki_triangles.csv";
  write_text_file(csv_path, csv);
  report.note("wrote " + csv_path.string() + " (per-frequency power triangles)");

  RunManifest manifest("demo czarnecki");
  manifest.add_parameter("out-dir", out_dir);
  manifest.add_output(csv_path);
  manifest.write(std::filesystem::path(out_dir) / "demo_czarnecki.manifest.json");

  return report.finish("czarnecki");
}

// ---------------------------------------------------------------------------

int demo_thevenin_tv(const std::string& out_dir) {
  DemoReport report("thevenin-tv: source impedances, fixed and slowly varying");

  // 20 periods so the 0.05*w0 resistance modulation is periodic on the record
  // (the bandwidth measurement reads its spectrum).
  const SamplingGrid grid = demo_grid(64, 20);
  const double omega0 = 2.0 * kPi * 50.0;
  const double i_amp = std::sqrt(2.0);
  const double phi = 0.25;

  // Fixed Z = 3 + 4j carrying I = sqrt(2): the 3-4-5 power triangle.
  const FixedImpedance z{3.0, 4.0};
  const ImpedancePower direct = power_from_impedance(z, i_amp, phi, omega0, grid);
  report.check_close("fixed Z: S = |Z| I^2/2 (impedance path)", 5.0,
                     direct.summary.apparent_S, 1e-9);
  report.check_close("fixed Z: P = R I^2/2 (impedance path)", 3.0,
                     direct.summary.active_P, 1e-9);
  report.check_close("fixed Z: Q = X I^2/2 (impedance path)", 4.0,
                     direct.summary.nonactive_Q, 1e-9);

  const DrivenPair driven = voltage_from_current(z, {i_amp, phi, omega0}, grid);
  const PowerSummary measured =
      power_summary(power_series(phase_split(driven.v), phase_split(driven.i)));
  report.check_close("fixed Z: S (waveform path)", 5.0, measured.apparent_S, 1e-9);
  report.check_close("fixed Z: P (waveform path)", 3.0, measured.active_P, 1e-9);
  report.check_close("fixed Z: Q (waveform path)", 4.0, measured.nonactive_Q, 1e-9);

  // Slowly varying resistance R(t) = 3 (1 + 0.3 cos(w_m t)), fixed X = 4,
  // expressed as an impulse-response table: a tap at tau = 0 carries R(t) and
  // a tap a quarter carrier period back carries the reactance.
  const double omega_m = 0.05 * omega0;
  const std::size_t quarter = 16; // samples per period / 4
  ImpulseResponseTable table;
  table.n_t = grid.n_samples;
  table.n_tau = quarter + 1;
  table.d_tau = grid.dt();
  table.z.assign(table.n_t * table.n_tau, 0.0);
  for (std::size_t row = 0; row < table.n_t; ++row) {
    const double r_t = 3.0 * (1.0 + 0.3 * std::cos(omega_m * grid.time(row)));
    table.z[row * table.n_tau + 0] = r_t / table.d_tau;
    table.z[row * table.n_tau + quarter] = -4.0 / table.d_tau;
  }
  TimeVaryingImpedance tv;
  tv.impulse_response = table;
  tv.declared_bandwidth = omega_m;

  const TvDrivenPair tv_driven = voltage_from_current(tv, {i_amp, phi, omega0}, grid);
  double err = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    const double d = tv_driven.v_carrier.samples[k] - tv_driven.v_convolution->samples[k];
    err += d * d;
    ref += tv_driven.v_carrier.samples[k] * tv_driven.v_carrier.samples[k];
  }
  const double dual_path_rms = std::sqrt(err / ref);
  report.check_below("varying Z: dual-path voltage RMS mismatch", dual_path_rms, 1e-4);

  const TvImpedancePower tv_power = power_from_impedance(tv, i_amp, phi, omega0, grid);
  report.check_close("varying Z: measured band ratio", 0.05,
                     tv_power.bandwidth_report.ratio, 1e-9);
  report.check_close("varying Z: bandwidth warning raised", 0.0,
                     tv_power.bandwidth_warning ? 1.0 : 0.0, 0.5);

  double recon_err = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    const double product = tv_driven.v_carrier.samples[k] * tv_driven.i.samples[k];
    recon_err = std::max(recon_err,
                         std::abs(tv_power.series.instantaneous[k] - product));
    scale = std::max(scale, std::abs(product));
  }
  report.check_below("varying Z: reconstruction vs v*i (relative)",
                     recon_err / scale, 1e-12);

  std::string csv = "t,v_carrier,v_convolution,i\n";
  for (std::size_t k = 0; k < grid.n_samples; ++k) {
    csv += format_g17(grid.time(k));
    csv += ',';
    csv += format_g17(tv_driven.v_carrier.samples[k]);
    csv += ',';
    csv += format_g17(tv_driven.v_convolution->samples[k]);
    csv += ',';
    csv += format_g17(tv_driven.i.samples[k]);
    csv += '\n';
  }
  const auto csv_path = std::filesystem::path(out_dir) / "demo_thevenin_tv_voltage.csv";
  write_text_file(csv_path, csv);
  report.note("wrote " + csv_path.string() + " (both voltage paths and the drive current)");

  RunManifest manifest("demo thevenin-tv");
  manifest.add_parameter("out-dir", out_dir);
  manifest.add_output(csv_path);
  manifest.write(std::filesystem::path(out_dir) / "demo_thevenin_tv.manifest.json");

  return report.finish("thevenin-tv");
}

} // namespace

int run_demo(const std::string& name, std::optional<double> delta,
             const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  if (name == "power-triangle") return demo_power_triangle(delta, out_dir);
  if (name == "pos-neg") return demo_pos_neg(delta, out_dir);
  if (name == "bedrosian") return demo_bedrosian(out_dir);
  if (name == "czarnecki") return demo_czarnecki(out_dir);
  if (name == "thevenin-tv") return demo_thevenin_tv(out_dir);
  throw std::invalid_argument("unknown demo '" + name +
                              "' (valid: power-triangle, pos-neg, bedrosian, "
                              "czarnecki, thevenin-tv)");
}

} // namespace powertriad::cli
