#pragma once
#include <optional>
#include <string>

#include "biphoton/braun_twiss.hpp"
#include "biphoton/montecarlo.hpp"
#include "biphoton/qutrit.hpp"
#include "biphoton/source.hpp"

namespace biphoton {

/// Parsed experiment file: the state to prepare, the detector tuning, and
/// optional source and counting-run sections. The on-disk form is a JSON
/// object with keys state, tuning, source, montecarlo; see README for the
/// schema. Unknown keys anywhere raise ConfigError naming the key; states
/// given as raw amplitudes must be within 1e-6 of unit norm (ValidationError
/// otherwise) and are then renormalized exactly.
struct ExperimentFile {
  BiphotonState state;
  DetectorTuning tuning;
  std::optional<SourceConfig> source;
  std::optional<ExperimentConfig> montecarlo;
};

/// Mode literal: {"named": "H"} or {"theta": t, "phi": p} or
/// {"jones": [[re, im], [re, im]]}.
PolarizationMode parse_mode_json(const std::string& text);

/// State literal: {"named": "HV"} or {"c": [[re, im] x3]} or
/// {"modes": [mode, mode]}.
BiphotonState parse_state_json(const std::string& text);

ExperimentFile parse_experiment(const std::string& text);
ExperimentFile load_experiment(const std::string& path);

/// A bare counting-run config: a JSON object with the montecarlo-section
/// keys. Missing keys fall back to the calibrated defaults.
ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);

std::string to_json(const PolarizationMode& mode);
std::string to_json(const BiphotonState& state);
std::string to_json(const ExperimentConfig& config);

}  // namespace biphoton
