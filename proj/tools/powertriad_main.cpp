#include "cli_support.hpp"
#include "demos.hpp"

#include "powertriad/errors.hpp"
#include "powertriad/hilbert.hpp"
#include "powertriad/meter.hpp"
#include "powertriad/power.hpp"
#include "powertriad/signals.hpp"
#include "powertriad/spectral.hpp"
#include "powertriad/spectrum.hpp"
#include "powertriad/version.hpp"
#include "powertriad/waveform.hpp"
#include "powertriad/waveform_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace powertriad;
using powertriad::cli::RunManifest;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string default_manifest_path(const std::string& primary_output) {
  return primary_output + ".manifest.json";
}

// --------------------------------------------------------------------------
// generate

struct GenerateCommon {
  double fs = 0.0;
  double periods = 0.0;
  double t0 = 0.0;
  std::string out = "waveform.csv";
  std::string manifest;
};

SamplingGrid generate_grid(const GenerateCommon& common, double omega0) {
  const double duration = common.periods * kTwoPi / omega0;
  const long long n = std::llround(duration * common.fs);
  if (n < 2)
    throw std::invalid_argument(
        "generate: fewer than 2 samples requested (raise --periods or --fs)");
  return SamplingGrid{common.fs, static_cast<std::size_t>(n), common.t0};
}

void finish_generate(const std::string& command, const GenerateCommon& common,
                     const RealWaveform& v, const RealWaveform* i,
                     RunManifest& manifest) {
  save_waveform_csv(common.out, v, i);
  manifest.add_output(common.out);
  const std::string manifest_path =
      common.manifest.empty() ? default_manifest_path(common.out) : common.manifest;
  manifest.write(manifest_path);
  std::printf("%s: wrote %s (%zu samples at fs=%s)\n", command.c_str(),
              common.out.c_str(), v.samples.size(), format_g17(common.fs).c_str());
}

HarmonicTerm parse_term(const std::string& text) {
  const auto first = text.find(',');
  const auto second = text.find(',', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("--term expects 'index,amplitude,phase', got '" +
                                text + "'");
  try {
    HarmonicTerm term;
    term.index = std::stoi(text.substr(0, first));
    term.amplitude = std::stod(text.substr(first + 1, second - first - 1));
    term.phase = std::stod(text.substr(second + 1));
    return term;
  } catch (const std::exception&) {
    throw std::invalid_argument("--term expects numeric 'index,amplitude,phase', got '" +
                                text + "'");
  }
}

// --------------------------------------------------------------------------
// analyze / spectrum shared input

WaveformFile load_pair_csv(const std::string& path, const char* command) {
  WaveformFile file = load_waveform_csv(path);
  if (!file.i)
    throw DataError(std::string(command) +
                    ": input needs a current column (header t,v,i): " + path);
  return file;
}

// --------------------------------------------------------------------------
// meter serialization

std::string bool_json(bool b) { return b ? "true" : "false"; }

std::string records_ndjson(const std::vector<PowerRecord>& records) {
  std::string out;
  for (const PowerRecord& r : records) {
    out += "{\"t\": " + format_g17(r.t);
    out += ", \"re_hermitian\": " + format_g17(r.hermitian.real());
    out += ", \"im_hermitian\": " + format_g17(r.hermitian.imag());
    out += ", \"re_complementary_demod\": " + format_g17(r.complementary_demod.real());
    out += ", \"im_complementary_demod\": " + format_g17(r.complementary_demod.imag());
    out += ", \"apparent_S\": " + format_g17(r.apparent_S);
    out += ", \"active_P\": " + format_g17(r.active_P);
    out += ", \"nonactive_Q\": " + format_g17(r.nonactive_Q);
    out += ", \"power_factor\": " + format_g17(r.power_factor);
    out += ", \"phi_hat\": " + format_g17(r.phi_hat);
    out += ", \"omega0_hat\": " + format_g17(r.omega0_hat);
    out += ", \"reconstruction_error\": " + format_g17(r.reconstruction_error);
    out += ", \"phi_ambiguous\": " + bool_json(r.phi_ambiguous);
    out += ", \"estimation_failed\": " + bool_json(r.estimation_failed);
    out += ", \"degenerate\": " + bool_json(r.degenerate);
    out += ", \"gap\": " + bool_json(r.gap);
    out += "}\n";
  }
  return out;
}

std::string records_csv(const std::vector<PowerRecord>& records) {
  std::string out =
      "t,re_hermitian,im_hermitian,re_complementary_demod,im_complementary_demod,"
      "apparent_S,active_P,nonactive_Q,power_factor,phi_hat,omega0_hat,"
      "reconstruction_error,phi_ambiguous,estimation_failed,degenerate,gap\n";
  for (const PowerRecord& r : records) {
    out += format_g17(r.t);
    out += ',';
    out += format_g17(r.hermitian.real());
    out += ',';
    out += format_g17(r.hermitian.imag());
    out += ',';
    out += format_g17(r.complementary_demod.real());
    out += ',';
    out += format_g17(r.complementary_demod.imag());
    out += ',';
    out += format_g17(r.apparent_S);
    out += ',';
    out += format_g17(r.active_P);
    out += ',';
    out += format_g17(r.nonactive_Q);
    out += ',';
    out += format_g17(r.power_factor);
    out += ',';
    out += format_g17(r.phi_hat);
    out += ',';
    out += format_g17(r.omega0_hat);
    out += ',';
    out += format_g17(r.reconstruction_error);
    out += ',';
    out += r.phi_ambiguous ? '1' : '0';
    out += ',';
    out += r.estimation_failed ? '1' : '0';
    out += ',';
    out += r.degenerate ? '1' : '0';
    out += ',';
    out += r.gap ? '1' : '0';
    out += '\n';
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "powertriad: waveform power decomposition toolkit\n"
      "Analytic-signal construction, Hermitian/complementary power splitting,\n"
      "spectral power triangles, impedance models, and a streaming power meter."};
  app.set_version_flag("--version", powertriad::kVersion);
  app.set_config("--config", "",
                 "Read options from a key=value file; sections name subcommands "
                 "([generate.sinusoid], [meter], ...). Flags override the file.");
  app.require_subcommand(1);
  // Let --config (and --version) appear after the subcommand name too.
  app.fallthrough();
  app.footer("Environment: POWERTRIAD_SEED is reserved for future noise-injection "
             "features; it is currently documented but unused.\n"
             "Exit codes: 0 success, 1 failed demo check, 2 usage error, "
             "3 data error, 4 numeric-validity error.");

  // ---- generate --------------------------------------------------------
  CLI::App* generate = app.add_subcommand(
      "generate", "Synthesize a waveform CSV (header t,v or t,v,i)");
  generate->require_subcommand(1);

  GenerateCommon gen_sin_common, gen_harm_common, gen_mod_common;
  auto add_common = [](CLI::App* sub, GenerateCommon& common) {
    sub->add_option("--fs", common.fs, "Sample rate, Hz")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--periods", common.periods, "Record length in carrier periods")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--t0", common.t0, "Time of the first sample, s")
        ->capture_default_str();
    sub->add_option("--out", common.out, "Output CSV path")->capture_default_str();
    sub->add_option("--manifest", common.manifest,
                    "Manifest path (default: <out>.manifest.json)");
  };

  // generate sinusoid
  double sin_v = 1.0, sin_theta = 0.0, sin_omega0 = 0.0, sin_phi = 0.0;
  std::optional<double> sin_i;
  CLI::App* g_sin = generate->add_subcommand(
      "sinusoid", "v(t) = V cos(w0 t + theta), optional current column");
  g_sin->add_option("--v", sin_v, "Voltage amplitude V")->required();
  g_sin->add_option("--theta", sin_theta, "Voltage phase, rad")->capture_default_str();
  g_sin->add_option("--omega0", sin_omega0, "Carrier, rad/s")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::Option* g_sin_i =
      g_sin->add_option("--i", sin_i, "Current amplitude (adds an i column)");
  g_sin->add_option("--phi", sin_phi, "Current phase, rad")
      ->capture_default_str()
      ->needs(g_sin_i);
  add_common(g_sin, gen_sin_common);

  // generate harmonic
  double harm_omega0 = 0.0;
  std::vector<std::string> harm_terms, harm_i_terms;
  CLI::App* g_harm = generate->add_subcommand(
      "harmonic", "Finite harmonic sum; repeat --term index,amplitude,phase");
  g_harm->add_option("--omega0", harm_omega0, "Fundamental, rad/s")
      ->required()
      ->check(CLI::PositiveNumber);
  g_harm->add_option("--term", harm_terms, "Voltage term 'index,amplitude,phase'")
      ->required();
  g_harm->add_option("--i-term", harm_i_terms,
                     "Current term 'index,amplitude,phase' (adds an i column)");
  add_common(g_harm, gen_harm_common);

  // generate modulated
  double mod_omega0 = 0.0, mod_env_depth = 0.5, mod_pm_depth = 0.0, mod_ratio = 0.05,
         mod_phi = 0.0;
  std::optional<double> mod_i;
  CLI::App* g_mod = generate->add_subcommand(
      "modulated",
      "AM/PM tone: (1 + d cos(wm t)) cos(w0 t + m sin(wm t)), wm = ratio * w0");
  g_mod->add_option("--omega0", mod_omega0, "Carrier, rad/s")
      ->required()
      ->check(CLI::PositiveNumber);
  g_mod->add_option("--env-depth", mod_env_depth, "AM depth d")->capture_default_str();
  g_mod->add_option("--pm-depth", mod_pm_depth, "PM depth m, rad")
      ->capture_default_str();
  g_mod->add_option("--ratio", mod_ratio, "Envelope tone at ratio * w0")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  CLI::Option* g_mod_i = g_mod->add_option(
      "--i", mod_i, "Clean sinusoidal current amplitude (adds an i column)");
  g_mod->add_option("--phi", mod_phi, "Current phase, rad")
      ->capture_default_str()
      ->needs(g_mod_i);
  add_common(g_mod, gen_mod_common);

  // ---- analyze ---------------------------------------------------------
  std::string an_in, an_out_series = "power_series.csv",
                     an_out_summary = "power_summary.json", an_manifest;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full power decomposition of a t,v,i CSV: series + summary");
  analyze->add_option("--in", an_in, "Input waveform CSV (header t,v,i)")->required();
  analyze->add_option("--out-series", an_out_series, "Power series CSV path")
      ->capture_default_str();
  analyze->add_option("--out-summary", an_out_summary, "Power summary JSON path")
      ->capture_default_str();
  analyze->add_option("--manifest", an_manifest,
                      "Manifest path (default: <out-summary>.manifest.json)");

  // ---- spectrum --------------------------------------------------------
  std::string sp_in, sp_out = "triangles.csv", sp_out_gap = "gap.json", sp_manifest;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Per-frequency power triangles and the broadband closure gap");
  spectrum->add_option("--in", sp_in, "Input waveform CSV (header t,v,i)")->required();
  spectrum->add_option("--out", sp_out, "Triangle table CSV path")
      ->capture_default_str();
  spectrum->add_option("--out-gap", sp_out_gap, "Gap report JSON path")
      ->capture_default_str();
  spectrum->add_option("--manifest", sp_manifest,
                       "Manifest path (default: <out>.manifest.json)");

  // ---- meter -----------------------------------------------------------
  std::string mt_in, mt_raw, mt_out = "records.ndjson", mt_manifest;
  double mt_fs = 0.0, mt_t0 = 0.0, mt_omega0 = 0.0, mt_alpha = 0.2;
  std::size_t mt_block = 0, mt_fir_taps = 0;
  bool mt_estimate = false, mt_csv = false;
  CLI::App* meter = app.add_subcommand(
      "meter", "Blockwise streaming power records from a CSV or raw pair stream");
  CLI::Option* mt_in_opt =
      meter->add_option("--in", mt_in, "Input waveform CSV (header t,v,i)");
  CLI::Option* mt_raw_opt = meter->add_option(
      "--raw", mt_raw, "Raw input: interleaved little-endian float64 (v,i) pairs");
  mt_in_opt->excludes(mt_raw_opt);
  CLI::Option* mt_fs_opt =
      meter->add_option("--fs", mt_fs, "Sample rate, Hz (raw input only)")
          ->check(CLI::PositiveNumber);
  CLI::Option* mt_t0_opt =
      meter->add_option("--t0", mt_t0, "Time of the first sample, s (raw input only)");
  meter->add_option("--block", mt_block, "Samples per record (>= 8)")->required();
  CLI::Option* mt_omega_opt =
      meter->add_option("--omega0", mt_omega0, "Known carrier, rad/s")
          ->check(CLI::PositiveNumber);
  CLI::Option* mt_est_opt = meter->add_flag(
      "--estimate", mt_estimate, "Estimate the carrier per block (smoothed)");
  mt_omega_opt->excludes(mt_est_opt);
  meter->add_option("--fir-taps", mt_fir_taps,
                    "Use a FIR Hilbert stage with this many taps (odd); "
                    "0 = per-block spectral transform")
      ->capture_default_str();
  meter->add_option("--alpha", mt_alpha, "Carrier smoothing weight in (0, 1]")
      ->capture_default_str();
  meter->add_flag("--csv", mt_csv, "Write records as CSV instead of NDJSON");
  meter->add_option("--out", mt_out, "Output records path")->capture_default_str();
  meter->add_option("--manifest", mt_manifest,
                    "Manifest path (default: <out>.manifest.json)");

  // ---- demo ------------------------------------------------------------
  std::string demo_name, demo_out_dir = ".";
  std::optional<double> demo_delta;
  CLI::App* demo = app.add_subcommand(
      "demo", "Self-auditing reproduction runs (expected vs computed tables)");
  demo->add_option("name", demo_name,
                   "One of: power-triangle, pos-neg, bedrosian, czarnecki, thevenin-tv")
      ->required();
  demo->add_option("--delta", demo_delta,
                   "Voltage-current phase offset, rad (power-triangle, pos-neg)");
  demo->add_option("--out-dir", demo_out_dir, "Directory for demo data files")
      ->capture_default_str();

  // ---- parse + dispatch -------------------------------------------------
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g_sin->parsed()) {
      const SamplingGrid grid = generate_grid(gen_sin_common, sin_omega0);
      const RealWaveform v =
          gen_sinusoid({sin_v, sin_theta, sin_omega0}, grid, Unit::volt);
      RunManifest manifest("generate sinusoid");
      manifest.add_parameter("v", sin_v);
      manifest.add_parameter("theta", sin_theta);
      manifest.add_parameter("omega0", sin_omega0);
      if (sin_i) {
        manifest.add_parameter("i", *sin_i);
        manifest.add_parameter("phi", sin_phi);
      }
      manifest.add_parameter("fs", gen_sin_common.fs);
      manifest.add_parameter("periods", gen_sin_common.periods);
      manifest.add_parameter("t0", gen_sin_common.t0);
      if (sin_i) {
        const RealWaveform i =
            gen_sinusoid({*sin_i, sin_phi, sin_omega0}, grid, Unit::ampere);
        finish_generate("generate sinusoid", gen_sin_common, v, &i, manifest);
      } else {
        finish_generate("generate sinusoid", gen_sin_common, v, nullptr, manifest);
      }
      return 0;
    }

    if (g_harm->parsed()) {
      HarmonicSpec v_spec;
      v_spec.omega0 = harm_omega0;
      for (const std::string& text : harm_terms) v_spec.terms.push_back(parse_term(text));
      const SamplingGrid grid = generate_grid(gen_harm_common, harm_omega0);
      const RealWaveform v = gen_harmonic(v_spec, grid, Unit::volt);
      RunManifest manifest("generate harmonic");
      manifest.add_parameter("omega0", harm_omega0);
      for (const std::string& text : harm_terms) manifest.add_parameter("term", text);
      for (const std::string& text : harm_i_terms)
        manifest.add_parameter("i-term", text);
      manifest.add_parameter("fs", gen_harm_common.fs);
      manifest.add_parameter("periods", gen_harm_common.periods);
      manifest.add_parameter("t0", gen_harm_common.t0);
      if (!harm_i_terms.empty()) {
        HarmonicSpec i_spec;
        i_spec.omega0 = harm_omega0;
        for (const std::string& text : harm_i_terms)
          i_spec.terms.push_back(parse_term(text));
        const RealWaveform i = gen_harmonic(i_spec, grid, Unit::ampere);
        finish_generate("generate harmonic", gen_harm_common, v, &i, manifest);
      } else {
        finish_generate("generate harmonic", gen_harm_common, v, nullptr, manifest);
      }
      return 0;
    }

    if (g_mod->parsed()) {
      const SamplingGrid grid = generate_grid(gen_mod_common, mod_omega0);
      const double omega_m = mod_ratio * mod_omega0;
      const ModulatedSpec spec = tabulate_modulated(
          mod_omega0, omega_m,
          [&](double t) { return 1.0 + mod_env_depth * std::cos(omega_m * t); },
          [&](double t) { return mod_pm_depth * std::sin(omega_m * t); }, grid);
      const RealWaveform v = gen_modulated(spec, grid, Unit::volt);
      RunManifest manifest("generate modulated");
      manifest.add_parameter("omega0", mod_omega0);
      manifest.add_parameter("env-depth", mod_env_depth);
      manifest.add_parameter("pm-depth", mod_pm_depth);
      manifest.add_parameter("ratio", mod_ratio);
      if (mod_i) {
        manifest.add_parameter("i", *mod_i);
        manifest.add_parameter("phi", mod_phi);
      }
      manifest.add_parameter("fs", gen_mod_common.fs);
      manifest.add_parameter("periods", gen_mod_common.periods);
      manifest.add_parameter("t0", gen_mod_common.t0);
      if (mod_i) {
        const RealWaveform i =
            gen_sinusoid({*mod_i, mod_phi, mod_omega0}, grid, Unit::ampere);
        finish_generate("generate modulated", gen_mod_common, v, &i, manifest);
      } else {
        finish_generate("generate modulated", gen_mod_common, v, nullptr, manifest);
      }
      return 0;
    }

    if (analyze->parsed()) {
      const WaveformFile file = load_pair_csv(an_in, "analyze");
      const PowerSeries series =
          power_series(phase_split(file.voltage()), phase_split(*file.current()));
      save_power_series_csv(an_out_series, series);
      const std::string summary_json = power_summary_json(power_summary(series));
      powertriad::cli::write_text_file(an_out_summary, summary_json);

      RunManifest manifest("analyze");
      manifest.add_input(an_in);
      manifest.add_parameter("in", an_in);
      manifest.add_parameter("out-series", an_out_series);
      manifest.add_parameter("out-summary", an_out_summary);
      manifest.add_output(an_out_series);
      manifest.add_output(an_out_summary);
      manifest.write(an_manifest.empty() ? default_manifest_path(an_out_summary)
                                         : an_manifest);
      std::fputs(summary_json.c_str(), stdout);
      return 0;
    }

    if (spectrum->parsed()) {
      const WaveformFile file = load_pair_csv(sp_in, "spectrum");
      const Spectrum v_spec = spectrum_of(file.voltage());
      const Spectrum i_spec = spectrum_of(*file.current());
      const std::vector<FrequencyPowerTriangle> triangles =
          per_frequency_triangles(v_spec, i_spec);
      const PythagorasGap gap = broadband_pythagoras_gap(v_spec, i_spec);

      std::string csv = "omega,apparent,active,nonactive\n";
      for (const FrequencyPowerTriangle& row : triangles) {
        csv += format_g17(row.omega);
        csv += ',';
        csv += format_g17(row.apparent);
        csv += ',';
        csv += format_g17(row.active);
        csv += ',';
        csv += format_g17(row.nonactive);
        csv += '\n';
      }
      powertriad::cli::write_text_file(sp_out, csv);

      const std::string gap_json = "{\n  \"lhs\": " + format_g17(gap.lhs) +
                                   ",\n  \"rhs\": " + format_g17(gap.rhs) +
                                   ",\n  \"gap\": " + format_g17(gap.gap) + "\n}\n";
      powertriad::cli::write_text_file(sp_out_gap, gap_json);

      RunManifest manifest("spectrum");
      manifest.add_input(sp_in);
      manifest.add_parameter("in", sp_in);
      manifest.add_parameter("out", sp_out);
      manifest.add_parameter("out-gap", sp_out_gap);
      manifest.add_output(sp_out);
      manifest.add_output(sp_out_gap);
      manifest.write(sp_manifest.empty() ? default_manifest_path(sp_out) : sp_manifest);
      std::printf("spectrum: %zu triangle rows; gap = %s\n", triangles.size(),
                  format_g17(gap.gap).c_str());
      return 0;
    }

    if (meter->parsed()) {
      if (mt_in_opt->count() == 0 && mt_raw_opt->count() == 0)
        throw std::invalid_argument("meter: give an input with --in or --raw");
      if (mt_omega_opt->count() == 0 && mt_est_opt->count() == 0)
        throw std::invalid_argument("meter: choose --omega0 <rad/s> or --estimate");

      std::vector<double> v_samples, i_samples;
      double fs = 0.0, t0 = 0.0;
      std::string input_path;
      bool truncated = false;
      if (mt_in_opt->count() > 0) {
        if (mt_fs_opt->count() > 0 || mt_t0_opt->count() > 0)
          throw std::invalid_argument(
              "meter: --fs/--t0 apply to raw input only (the CSV carries its grid)");
        const WaveformFile file = load_pair_csv(mt_in, "meter");
        v_samples = file.v;
        i_samples = *file.i;
        fs = file.grid.sample_rate;
        t0 = file.grid.t0;
        input_path = mt_in;
      } else {
        if (mt_fs_opt->count() == 0)
          throw std::invalid_argument("meter: raw input needs --fs");
        const RawPairStream stream = load_raw_pairs(mt_raw);
        v_samples = stream.v;
        i_samples = stream.i;
        truncated = stream.truncated;
        fs = mt_fs;
        t0 = mt_t0;
        input_path = mt_raw;
      }
      if (truncated)
        std::fprintf(stderr,
                     "warning: raw stream ends mid-pair; dropped the partial record\n");

      MeterConfig config;
      config.block_size = mt_block;
      if (mt_omega_opt->count() > 0) config.known_omega0 = mt_omega0;
      config.estimate_omega0 = mt_estimate;
      config.smoothing_alpha = mt_alpha;
      if (mt_fir_taps > 0) {
        config.hilbert_mode = HilbertMode::fir;
        config.fir = design_hilbert_fir(mt_fir_taps);
      }
      config.validate();

      MeterPipeline pipeline(config, fs, t0);
      std::vector<PowerRecord> records = pipeline.push(v_samples, i_samples);
      std::vector<PowerRecord> tail = pipeline.finish();
      records.insert(records.end(), tail.begin(), tail.end());
      if (pipeline.dropped_samples() > 0)
        std::fprintf(stderr,
                     "warning: dropped %zu trailing samples (incomplete final block)\n",
                     pipeline.dropped_samples());

      powertriad::cli::write_text_file(mt_out, mt_csv ? records_csv(records)
                                                      : records_ndjson(records));

      RunManifest manifest("meter");
      manifest.add_input(input_path);
      manifest.add_parameter("in", input_path);
      manifest.add_parameter("fs", fs);
      manifest.add_parameter("t0", t0);
      manifest.add_parameter("block", mt_block);
      if (config.known_omega0) manifest.add_parameter("omega0", *config.known_omega0);
      manifest.add_parameter("estimate", std::string(mt_estimate ? "true" : "false"));
      manifest.add_parameter("fir-taps", mt_fir_taps);
      manifest.add_parameter("alpha", mt_alpha);
      manifest.add_parameter("format", std::string(mt_csv ? "csv" : "ndjson"));
      manifest.add_output(mt_out);
      manifest.write(mt_manifest.empty() ? default_manifest_path(mt_out) : mt_manifest);
      std::printf("meter: %zu records -> %s\n", records.size(), mt_out.c_str());
      return 0;
    }

    if (demo->parsed())
      return powertriad::cli::run_demo(demo_name, demo_delta, demo_out_dir);

    return 2; // unreachable: require_subcommand(1)
  } catch (const NumericValidityError& e) {
    std::fprintf(stderr, "numeric-validity error: %s\n", e.what());
    return 4;
  } catch (const DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
