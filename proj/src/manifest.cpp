#include "vlse/manifest.hpp"

#include <json.hpp>

#include "vlse/csvio.hpp"
#include "vlse/errors.hpp"

namespace vlse {

std::string tool_version() { return "vasicek-lse 0.1.0"; }

void write_manifest(const std::string& file, const RunManifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["version"] = m.version;
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [k, v] : m.config) cfg[k] = v;
  j["config"] = cfg;
  j["outputs"] = m.outputs;
  j["duration_seconds"] = m.duration_seconds;
  write_text_file(file, j.dump(2) + "\n");
}

RunManifest read_manifest(const std::string& file) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(file));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("manifest " + file + ": " + e.what());
  }
  RunManifest m;
  m.command = j.value("command", "");
  m.version = j.value("version", "");
  if (j.contains("argv"))
    for (const auto& a : j["argv"]) m.argv.push_back(a.get<std::string>());
  if (j.contains("config"))
    for (auto it = j["config"].begin(); it != j["config"].end(); ++it)
      m.config.emplace_back(it.key(), it.value().get<std::string>());
  if (j.contains("outputs"))
    for (const auto& o : j["outputs"]) m.outputs.push_back(o.get<std::string>());
  m.duration_seconds = j.value("duration_seconds", 0.0);
  return m;
}

}  // namespace vlse
