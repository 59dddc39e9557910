#pragma once

#include "powertriad/errors.hpp"
#include "powertriad/version.hpp"
#include "powertriad/waveform_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace powertriad::cli {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

/// One manifest per run: the command, the inputs with content checksums, the
/// outputs with content checksums, and the effective parameters, in a fixed
/// order with no timestamps — two runs with identical inputs and flags write
/// byte-identical manifests.
class RunManifest {
public:
  explicit RunManifest(std::string command) : command_(std::move(command)) {}

  void add_input(const std::filesystem::path& path) {
    inputs_.emplace_back(path.string(), file_checksum(path));
  }
  void add_output(const std::filesystem::path& path) {
    outputs_.emplace_back(path.string(), file_checksum(path));
  }
  void add_parameter(const std::string& key, const std::string& value) {
    parameters_.emplace_back(key, value);
  }
  void add_parameter(const std::string& key, double value) {
    parameters_.emplace_back(key, format_g17(value));
  }
  void add_parameter(const std::string& key, std::size_t value) {
    parameters_.emplace_back(key, std::to_string(value));
  }

  std::string to_json() const {
    std::string json = "{\n";
    json += "  \"command\": \"" + json_escape(command_) + "\",\n";
    json += "  \"version\": \"" + std::string(kVersion) + "\",\n";
    json += "  \"inputs\": [";
    json += entry_list(inputs_);
    json += "],\n  \"outputs\": [";
    json += entry_list(outputs_);
    json += "],\n  \"parameters\": {";
    for (std::size_t k = 0; k < parameters_.size(); ++k) {
      json += k ? ",\n    " : "\n    ";
      json += "\"" + json_escape(parameters_[k].first) + "\": \"" +
              json_escape(parameters_[k].second) + "\"";
    }
    json += parameters_.empty() ? "}\n" : "\n  }\n";
    json += "}\n";
    return json;
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write manifest: " + path.string());
    out << to_json();
  }

private:
  using Entry = std::pair<std::string, std::string>; // path, checksum

  static std::string entry_list(const std::vector<Entry>& entries) {
    std::string json;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      json += k ? ",\n    " : "\n    ";
      json += "{\"path\": \"" + json_escape(entries[k].first) +
              "\", \"checksum\": \"" + entries[k].second + "\"}";
    }
    if (!entries.empty()) json += "\n  ";
    return json;
  }

  std::string command_;
  std::vector<Entry> inputs_;
  std::vector<Entry> outputs_;
  std::vector<Entry> parameters_;
};

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

} // namespace powertriad::cli
