#include "common.hpp"

#include <cstdio>

#include "json.hpp"

#ifndef ESDG_BUILD_ID
#define ESDG_BUILD_ID "unknown"
#endif

namespace esdg::cases {

const char* build_id() { return ESDG_BUILD_ID; }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path.string()), out_(path) {
  if (!out_) throw Error("cannot write '" + path_ + "'");
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

std::string output_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.output_dir) / name).string();
}

std::string prepare_output(const RunConfig& cfg, const std::string& extra_json) {
  if (cfg.output_dir.empty()) return "";
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw Error("cannot create output directory '" + cfg.output_dir + "': " + ec.message());
  nlohmann::json meta;
  meta["build"] = build_id();
  meta["config"] = nlohmann::json::parse(config_to_json(cfg));
  meta["results"] = nlohmann::json::parse(extra_json);
  const std::string path = output_path(cfg, "metadata.json");
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << meta.dump(2) << '\n';
  return path;
}

}  // namespace esdg::cases
