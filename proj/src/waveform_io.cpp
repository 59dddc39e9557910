#include "powertriad/waveform_io.hpp"

#include "powertriad/errors.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace powertriad {
namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, std::size_t line_no) {
  const std::string f = strip(field);
  double value = 0.0;
  const char* first = f.data();
  const char* last = f.data() + f.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw DataError("csv: malformed number '" + field + "' at line " + std::to_string(line_no));
  if (!std::isfinite(value))
    throw DataError("csv: non-finite value at line " + std::to_string(line_no));
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') { fields.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  fields.push_back(cur);
  return fields;
}

} // namespace

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file for checksum: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a_hex(ss.str());
}

RealWaveform WaveformFile::voltage() const {
  return make_waveform(grid, v, Unit::volt);
}

std::optional<RealWaveform> WaveformFile::current() const {
  if (!i) return std::nullopt;
  return make_waveform(grid, *i, Unit::ampere);
}

WaveformFile load_waveform_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open waveform file: " + path.string());

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw DataError("csv: empty file: " + path.string());
  ++line_no;
  const std::string header = strip(line);
  bool has_current = false;
  if (header == "t,v") has_current = false;
  else if (header == "t,v,i") has_current = true;
  else throw DataError("csv: expected header 't,v' or 't,v,i', got '" + header + "'");

  std::vector<double> t, v, i;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != (has_current ? 3u : 2u))
      throw DataError("csv: wrong field count at line " + std::to_string(line_no));
    t.push_back(parse_double(fields[0], line_no));
    v.push_back(parse_double(fields[1], line_no));
    if (has_current) i.push_back(parse_double(fields[2], line_no));
  }
  if (t.size() < 2) throw DataError("csv: need at least 2 samples: " + path.string());

  // Uniform-spacing check: every step within 1e-6 (relative) of the mean step.
  double dt_mean = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt_mean > 0.0)) throw DataError("csv: time column must be strictly increasing");
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const double dt = t[k + 1] - t[k];
    if (std::abs(dt - dt_mean) > 1e-6 * dt_mean)
      throw DataError("csv: non-uniform time step at line " + std::to_string(k + 3) +
                      " (jitter above 1e-6)");
  }

  WaveformFile out;
  out.grid = SamplingGrid{1.0 / dt_mean, t.size(), t.front()};
  out.v = std::move(v);
  if (has_current) out.i = std::move(i);
  return out;
}

void save_waveform_csv(const std::filesystem::path& path, const RealWaveform& v,
                       const RealWaveform* i) {
  if (i && !(i->grid == v.grid))
    throw std::invalid_argument("save_waveform_csv: grids must match");
  std::ofstream out(path);
  if (!out) throw DataError("cannot write waveform file: " + path.string());
  out << (i ? "t,v,i\n" : "t,v\n");
  for (std::size_t k = 0; k < v.samples.size(); ++k) {
    out << format_g17(v.grid.time(k)) << ',' << format_g17(v.samples[k]);
    if (i) out << ',' << format_g17(i->samples[k]);
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

RawPairStream load_raw_pairs(const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little,
                "raw pair streams are little-endian");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open raw file: " + path.string());
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  RawPairStream out;
  const std::size_t pair_bytes = 2 * sizeof(double);
  const std::size_t n_pairs = bytes.size() / pair_bytes;
  out.truncated = bytes.size() % pair_bytes != 0;
  out.v.resize(n_pairs);
  out.i.resize(n_pairs);
  for (std::size_t k = 0; k < n_pairs; ++k) {
    double pair[2];
    std::memcpy(pair, bytes.data() + k * pair_bytes, pair_bytes);
    if (!std::isfinite(pair[0]) || !std::isfinite(pair[1]))
      throw DataError("raw: non-finite sample in pair " + std::to_string(k));
    out.v[k] = pair[0];
    out.i[k] = pair[1];
  }
  return out;
}

std::string power_series_csv(const PowerSeries& series) {
  std::string csv = "t,p,p_active,p_nonactive,p_pos,p_neg,re_pH,im_pH,re_pC,im_pC\n";
  for (std::size_t k = 0; k < series.instantaneous.size(); ++k) {
    csv += format_g17(series.grid.time(k));
    csv += ',';
    csv += format_g17(series.instantaneous[k]);
    csv += ',';
    csv += format_g17(series.active[k]);
    csv += ',';
    csv += format_g17(series.nonactive[k]);
    csv += ',';
    csv += format_g17(series.positive[k]);
    csv += ',';
    csv += format_g17(series.negative[k]);
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
  return csv;
}

void save_power_series_csv(const std::filesystem::path& path, const PowerSeries& series) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write power series file: " + path.string());
  out << power_series_csv(series);
  if (!out) throw DataError("write failed: " + path.string());
}

std::string power_summary_json(const PowerSummary& s) {
  std::string json = "{\n";
  auto field = [&json](const char* name, double value, bool last = false) {
    json += "  \"";
    json += name;
    json += "\": ";
    json += format_g17(value);
    json += last ? "\n" : ",\n";
  };
  field("apparent_S", s.apparent_S);
  field("active_P", s.active_P);
  field("nonactive_Q", s.nonactive_Q);
  field("power_angle", s.power_angle);
  field("power_factor", s.power_factor);
  field("avg_positive", s.avg_positive);
  field("avg_negative", s.avg_negative);
  field("negative_fraction", s.negative_fraction, true);
  json += "}\n";
  return json;
}

} // namespace powertriad
