#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mottlab::io {

/// CSV with 17-significant-digit numeric fields (lossless double round trip).
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(const std::vector<double>& values);
  /// Serialized file contents (header + rows, '\n' line ends).
  [[nodiscard]] std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);

struct CsvData {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  [[nodiscard]] std::vector<double> column(const std::string& name) const;
};

CsvData read_csv(const std::string& path);

/// Plain-text key = value configuration; '#' starts a comment.
std::map<std::string, std::string> parse_config(const std::string& path);

double config_number(const std::map<std::string, std::string>& cfg,
                     const std::string& key, double fallback);
std::string config_string(const std::map<std::string, std::string>& cfg,
                          const std::string& key, const std::string& fallback);

/// FNV-1a 64-bit digest of a file, hex encoded; manifests use it to pin
/// outputs.
std::string fnv1a64_file(const std::string& path);
std::string fnv1a64_bytes(const std::string& bytes);

struct ExperimentManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t master_seed = 0;
  std::string code_version;
  std::string started_at;
  std::string finished_at;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, digest

  void add_output(const std::string& path);
  [[nodiscard]] std::string to_json() const;
  void write(const std::string& path) const;
};

std::string timestamp_utc();

}  // namespace mottlab::io
