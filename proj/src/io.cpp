#include "biphoton/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ConfigError("missing key '" + std::string(key) + "' in " + where);
  }
  return obj.at(key);
}

double number(const json& value, const std::string& what) {
  if (!value.is_number()) throw ConfigError(what + " must be a number");
  return value.get<double>();
}

std::string text_value(const json& value, const std::string& what) {
  if (!value.is_string()) throw ConfigError(what + " must be a string");
  return value.get<std::string>();
}

Complex complex_value(const json& value, const std::string& what) {
  if (!value.is_array() || value.size() != 2) {
    throw ConfigError(what + " must be a [re, im] pair");
  }
  return {number(value[0], what + " real part"), number(value[1], what + " imaginary part")};
}

PolarizationMode parse_mode(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  if (obj.contains("named")) {
    check_keys(obj, {"named"}, where);
    return PolarizationMode::named(text_value(obj.at("named"), where + ".named"));
  }
  if (obj.contains("jones")) {
    check_keys(obj, {"jones"}, where);
    const json& arr = obj.at("jones");
    if (!arr.is_array() || arr.size() != 2) {
      throw ConfigError(where + ".jones must be an array of two [re, im] pairs");
    }
    return PolarizationMode::from_jones(complex_value(arr[0], where + ".jones[0]"),
                                        complex_value(arr[1], where + ".jones[1]"));
  }
  if (obj.contains("theta") || obj.contains("phi")) {
    check_keys(obj, {"theta", "phi"}, where);
    return PolarizationMode(number(member(obj, "theta", where), where + ".theta"),
                            number(member(obj, "phi", where), where + ".phi"));
  }
  throw ConfigError(where + " needs one of: named, jones, theta/phi");
}

BiphotonState parse_state(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  if (obj.contains("named")) {
    check_keys(obj, {"named"}, where);
    return standard_state(text_value(obj.at("named"), where + ".named"));
  }
  if (obj.contains("c")) {
    check_keys(obj, {"c"}, where);
    const json& arr = obj.at("c");
    if (!arr.is_array() || arr.size() != 3) {
      throw ConfigError(where + ".c must be an array of three [re, im] pairs");
    }
    const BiphotonState state{complex_value(arr[0], where + ".c[0]"),
                              complex_value(arr[1], where + ".c[1]"),
                              complex_value(arr[2], where + ".c[2]")};
    if (std::abs(state.norm() - 1.0) > 1e-6) {
      std::ostringstream msg;
      msg << where << ".c has norm " << state.norm() << ", more than 1e-6 away from 1";
      throw ValidationError(msg.str());
    }
    return state.normalized();
  }
  if (obj.contains("modes")) {
    check_keys(obj, {"modes"}, where);
    const json& arr = obj.at("modes");
    if (!arr.is_array() || arr.size() != 2) {
      throw ConfigError(where + ".modes must be an array of two mode literals");
    }
    return from_modes(parse_mode(arr[0], where + ".modes[0]"),
                      parse_mode(arr[1], where + ".modes[1]"));
  }
  throw ConfigError(where + " needs one of: named, c, modes");
}

DetectorTuning parse_tuning(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  check_keys(obj, {"arm1", "arm2"}, where);
  return {parse_mode(member(obj, "arm1", where), where + ".arm1"),
          parse_mode(member(obj, "arm2", where), where + ".arm2")};
}

ArmBasis parse_basis(const json& value, const std::string& what) {
  const std::string name = text_value(value, what);
  if (name == "20") return ArmBasis::TwoZero;
  if (name == "11") return ArmBasis::OneOne;
  if (name == "02") return ArmBasis::ZeroTwo;
  throw ConfigError(what + " must be one of \"20\", \"11\", \"02\"");
}

SourceConfig parse_source(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  check_keys(obj, {"arms"}, where);
  const json& arms = member(obj, "arms", where);
  if (!arms.is_array() || arms.size() != 3) {
    throw ConfigError(where + ".arms must be an array of three arm settings");
  }
  SourceConfig config;
  for (int i = 0; i < 3; ++i) {
    const std::string arm_where = where + ".arms[" + std::to_string(i) + "]";
    const json& arm = arms[i];
    if (!arm.is_object()) throw ConfigError(arm_where + " must be an object");
    check_keys(arm, {"amplitude", "phase", "basis"}, arm_where);
    config.arms[i].pump_amplitude =
        number(member(arm, "amplitude", arm_where), arm_where + ".amplitude");
    config.arms[i].phase = number(member(arm, "phase", arm_where), arm_where + ".phase");
    config.arms[i].basis_state = parse_basis(member(arm, "basis", arm_where), arm_where + ".basis");
  }
  config.validate();
  return config;
}

ExperimentConfig parse_montecarlo(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  check_keys(obj,
             {"pair_rate", "integration_time", "efficiency1", "efficiency2", "dark_rate1",
              "dark_rate2", "coincidence_window", "observable", "seed"},
             where);
  ExperimentConfig config;
  if (obj.contains("pair_rate"))
    config.pair_rate = number(obj.at("pair_rate"), where + ".pair_rate");
  if (obj.contains("integration_time"))
    config.integration_time = number(obj.at("integration_time"), where + ".integration_time");
  if (obj.contains("efficiency1"))
    config.efficiency1 = number(obj.at("efficiency1"), where + ".efficiency1");
  if (obj.contains("efficiency2"))
    config.efficiency2 = number(obj.at("efficiency2"), where + ".efficiency2");
  if (obj.contains("dark_rate1"))
    config.dark_rate1 = number(obj.at("dark_rate1"), where + ".dark_rate1");
  if (obj.contains("dark_rate2"))
    config.dark_rate2 = number(obj.at("dark_rate2"), where + ".dark_rate2");
  if (obj.contains("coincidence_window"))
    config.coincidence_window =
        number(obj.at("coincidence_window"), where + ".coincidence_window");
  if (obj.contains("observable"))
    config.observable =
        observable_from_string(text_value(obj.at("observable"), where + ".observable"));
  if (obj.contains("seed")) {
    const json& seed = obj.at("seed");
    if (!seed.is_number_integer() || (seed.is_number_integer() && !seed.is_number_unsigned() &&
                                      seed.get<long long>() < 0)) {
      throw ConfigError(where + ".seed must be a non-negative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  config.validate();
  return config;
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(what + ": " + err.what());
  }
}

}  // namespace

PolarizationMode parse_mode_json(const std::string& text) {
  return parse_mode(parse_text(text, "mode literal"), "mode");
}

BiphotonState parse_state_json(const std::string& text) {
  return parse_state(parse_text(text, "state literal"), "state");
}

ExperimentFile parse_experiment(const std::string& text) {
  const json root = parse_text(text, "experiment file");
  if (!root.is_object()) throw ConfigError("experiment file must be a JSON object");
  check_keys(root, {"state", "tuning", "source", "montecarlo"}, "experiment file");

  ExperimentFile file{parse_state(member(root, "state", "experiment file"), "state"),
                      parse_tuning(member(root, "tuning", "experiment file"), "tuning"),
                      std::nullopt, std::nullopt};
  if (root.contains("source")) file.source = parse_source(root.at("source"), "source");
  if (root.contains("montecarlo"))
    file.montecarlo = parse_montecarlo(root.at("montecarlo"), "montecarlo");
  return file;
}

ExperimentFile load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read experiment file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment(buffer.str());
}

ExperimentConfig parse_config_json(const std::string& text) {
  return parse_montecarlo(parse_text(text, "config"), "config");
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

std::string to_json(const PolarizationMode& mode) {
  const auto [h, v] = mode.jones();
  json obj;
  obj["jones"] = {{h.real(), h.imag()}, {v.real(), v.imag()}};
  return obj.dump();
}

std::string to_json(const BiphotonState& state) {
  json obj;
  obj["c"] = {{state.c1.real(), state.c1.imag()},
              {state.c2.real(), state.c2.imag()},
              {state.c3.real(), state.c3.imag()}};
  return obj.dump();
}

std::string to_json(const ExperimentConfig& config) {
  json obj;
  obj["pair_rate"] = config.pair_rate;
  obj["integration_time"] = config.integration_time;
  obj["efficiency1"] = config.efficiency1;
  obj["efficiency2"] = config.efficiency2;
  obj["dark_rate1"] = config.dark_rate1;
  obj["dark_rate2"] = config.dark_rate2;
  obj["coincidence_window"] = config.coincidence_window;
  obj["observable"] = to_string(config.observable);
  obj["seed"] = config.seed;
  return obj.dump();
}

}  // namespace biphoton
