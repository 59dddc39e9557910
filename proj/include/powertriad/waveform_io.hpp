#pragma once

#include "powertriad/power.hpp"
#include "powertriad/waveform.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace powertriad {

/// Contents of a waveform CSV: header `t,v` or `t,v,i`, one record per line.
/// The time column must be uniformly spaced (relative jitter <= 1e-6).
struct WaveformFile {
  SamplingGrid grid;
  std::vector<double> v;
  std::optional<std::vector<double>> i;

  RealWaveform voltage() const;
  std::optional<RealWaveform> current() const;
};

/// Throws DataError on malformed/non-finite/non-uniform input, with the
/// offending line number in the message.
WaveformFile load_waveform_csv(const std::filesystem::path& path);

/// Writes `t,v` or `t,v,i` with every number at 17 significant digits.
void save_waveform_csv(const std::filesystem::path& path, const RealWaveform& v,
                       const RealWaveform* i = nullptr);

/// Raw meter input: interleaved little-endian float64 (v,i) pairs.
/// sample_rate/t0 must come from the caller (no header in the stream).
struct RawPairStream {
  std::vector<double> v;
  std::vector<double> i;
  /// True when the byte length was not a whole number of pairs: the trailing
  /// partial record was dropped.
  bool truncated = false;
};

RawPairStream load_raw_pairs(const std::filesystem::path& path);

/// Power series CSV, exactly this header:
///   t,p,p_active,p_nonactive,p_pos,p_neg,re_pH,im_pH,re_pC,im_pC
std::string power_series_csv(const PowerSeries& series);
void save_power_series_csv(const std::filesystem::path& path, const PowerSeries& series);

/// Flat JSON object with the PowerSummary fields, 17 significant digits,
/// fixed key order (byte-deterministic).
std::string power_summary_json(const PowerSummary& summary);

/// %.17g rendering used for every numeric output.
std::string format_g17(double x);

/// FNV-1a 64-bit content checksum, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string file_checksum(const std::filesystem::path& path);

} // namespace powertriad
