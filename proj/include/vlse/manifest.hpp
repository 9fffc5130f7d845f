#pragma once

#include <string>
#include <vector>

namespace vlse {

// Written alongside every CLI output; replaying the stored argv reproduces
// the outputs byte for byte.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;  // full invocation, program name included
  std::string version;
  std::vector<std::pair<std::string, std::string>> config;  // resolved settings
  std::vector<std::string> outputs;
  double duration_seconds = 0.0;

  void add(const std::string& key, const std::string& value) { config.emplace_back(key, value); }
};

std::string tool_version();

void write_manifest(const std::string& file, const RunManifest& m);
RunManifest read_manifest(const std::string& file);

}  // namespace vlse
