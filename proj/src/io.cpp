#include "mottlab/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mottlab/errors.hpp"

namespace mottlab::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size())
    throw ConfigError("CsvWriter: row width mismatch");
  rows_.push_back(values);
}

std::string CsvWriter::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << columns_[i] << (i + 1 < columns_.size() ? "," : "");
  out << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
  return out.str();
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open for writing: " + path);
  f << str();
}

std::vector<double> CsvData::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] != name) continue;
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.at(c));
    return out;
  }
  throw ConfigError("csv column not found: " + name);
}

CsvData read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open: " + path);
  CsvData data;
  std::string line;
  bool header = true;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    if (header) {
      while (std::getline(ss, cell, ',')) data.columns.push_back(cell);
      header = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    data.rows.push_back(std::move(row));
  }
  return data;
}

std::map<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config: " + path);
  std::map<std::string, std::string> cfg;
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) cfg[key] = value;
  }
  return cfg;
}

double config_number(const std::map<std::string, std::string>& cfg,
                     const std::string& key, double fallback) {
  const auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' is not a number: " +
                      it->second);
  }
}

std::string config_string(const std::map<std::string, std::string>& cfg,
                          const std::string& key,
                          const std::string& fallback) {
  const auto it = cfg.find(key);
  return it == cfg.end() ? fallback : it->second;
}

std::string fnv1a64_bytes(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open for digest: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return fnv1a64_bytes(ss.str());
}

void ExperimentManifest::add_output(const std::string& path) {
  outputs.emplace_back(path, fnv1a64_file(path));
}

std::string ExperimentManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["master_seed"] = master_seed;
  j["code_version"] = code_version;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  auto& outs = j["outputs"] = nlohmann::json::array();
  for (const auto& [path, digest] : outputs)
    outs.push_back({{"path", path}, {"fnv1a64", digest}});
  return j.dump(2) + "\n";
}

void ExperimentManifest::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open for writing: " + path);
  f << to_json();
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace mottlab::io
