#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qcoex/scenario.hpp"

namespace qcoex {

inline constexpr const char* kToolVersion = "0.1.0";

// Config parse or validation failure; the message names the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunManifest {
  std::string tool_version;
  std::string config_digest;
  std::string started_at_utc;  // ISO 8601
  size_t row_count = 0;
};

struct LoadedConfig {
  ScenarioConfig base;
  SweepAxes axes;
  std::string digest;  // stable over key order and comments
};

// Parses and validates a JSON scenario config (// comments allowed), filling
// defaults for absent fields and converting units (dBm -> W) once.
LoadedConfig load_config(const std::filesystem::path& path);
LoadedConfig parse_config_text(const std::string& text);

double dbm_to_watts(double dbm);

// FNV-1a 64 over the canonical (sorted-key, comment-free) JSON dump.
std::string config_digest(const std::string& text);

// The sweep grids used when the config says "sweep": "default".
SweepAxes default_sweep_axes();

}  // namespace qcoex
