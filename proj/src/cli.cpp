#include "biphoton/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biphoton/braun_twiss.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/io.hpp"
#include "biphoton/montecarlo.hpp"
#include "biphoton/qutrit.hpp"

namespace biphoton::cli {

namespace {

constexpr int kAnglePlaces = 6;
constexpr int kAmplitudePlaces = 9;

std::string fixed(double value, int places) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::ostringstream s;
  s << std::fixed << std::setprecision(places) << value;
  return s.str();
}

std::string pair_text(Complex value) {
  return fixed(value.real(), kAmplitudePlaces) + "," + fixed(value.imag(), kAmplitudePlaces);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

double parse_double(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + " '" + token + "' as a number");
  }
}

/// A mode is a letter (H, V, D, Db, R, L) or "theta:phi" in radians.
PolarizationMode parse_mode_token(const std::string& token) {
  if (token.find(':') != std::string::npos) {
    const auto parts = split(token, ':');
    if (parts.size() != 2) {
      throw ConfigError("mode '" + token + "' should look like theta:phi");
    }
    return PolarizationMode(parse_double(parts[0], "theta"), parse_double(parts[1], "phi"));
  }
  return PolarizationMode::named(token);
}

/// A state is a named state or "modes <m1> <m2>".
BiphotonState parse_input_spec(const std::string& spec) {
  const auto tokens = tokenize(spec);
  if (tokens.empty()) throw ConfigError("empty state spec");
  if (tokens[0] == "modes") {
    if (tokens.size() != 3) {
      throw ConfigError("state spec 'modes' needs exactly two modes, e.g. \"modes H D\"");
    }
    return from_modes(parse_mode_token(tokens[1]), parse_mode_token(tokens[2]));
  }
  if (tokens.size() != 1) {
    throw ConfigError("state spec '" + spec + "' not understood");
  }
  return standard_state(tokens[0]);
}

/// Tuning is "m1,m2" (two mode literals) or a named state, which tunes the
/// filters to that state's mode pair.
DetectorTuning parse_tuned_spec(const std::string& spec) {
  if (spec.find(',') != std::string::npos) {
    const auto parts = split(spec, ',');
    if (parts.size() != 2) {
      throw ConfigError("tuning '" + spec + "' should be two modes, e.g. H,V");
    }
    return {parse_mode_token(parts[0]), parse_mode_token(parts[1])};
  }
  return tuning_for(named_state_from_string(spec));
}

BiphotonState parse_amplitudes(const std::string& text) {
  const auto groups = split(text, ';');
  if (groups.size() != 3) {
    throw ConfigError("--c needs three components, e.g. \"1,0;0,0;0,0\"");
  }
  Complex c[3];
  for (int i = 0; i < 3; ++i) {
    const auto parts = split(groups[i], ',');
    if (parts.size() != 2) {
      throw ConfigError("component " + std::to_string(i + 1) + " of --c should be re,im");
    }
    c[i] = {parse_double(parts[0], "amplitude"), parse_double(parts[1], "amplitude")};
  }
  const BiphotonState state{c[0], c[1], c[2]};
  if (std::abs(state.norm() - 1.0) > 1e-6) {
    throw ValidationError("--c has norm " + fixed(state.norm(), kAmplitudePlaces) +
                          ", more than 1e-6 away from 1");
  }
  return state.normalized();
}

std::string state_label(const BiphotonState& state) {
  auto one = [](Complex c) {
    const double im = c.imag() == 0.0 ? 0.0 : c.imag();
    return fixed(c.real(), kAmplitudePlaces) + (im < 0.0 ? "-" : "+") +
           fixed(std::abs(im), kAmplitudePlaces) + "i";
  };
  return one(state.c1) + "|" + one(state.c2) + "|" + one(state.c3);
}

std::string tuning_label(const DetectorTuning& tuning) {
  auto one = [](const PolarizationMode& m) {
    return fixed(m.theta(), kAnglePlaces) + "/" + fixed(m.phi(), kAnglePlaces);
  };
  return one(tuning.arm1_mode) + "|" + one(tuning.arm2_mode);
}

void print_state_report(std::ostream& out, const BiphotonState& state) {
  const PoincarePair pair = to_modes(state);
  const auto stokes = mean_stokes(state);
  out << "c1 = " << pair_text(state.c1) << "\n";
  out << "c2 = " << pair_text(state.c2) << "\n";
  out << "c3 = " << pair_text(state.c3) << "\n";
  out << "photon1: theta = " << fixed(pair.first.theta(), kAnglePlaces)
      << ", phi = " << fixed(pair.first.phi(), kAnglePlaces) << "\n";
  out << "photon2: theta = " << fixed(pair.second.theta(), kAnglePlaces)
      << ", phi = " << fixed(pair.second.phi(), kAnglePlaces) << "\n";
  out << "global_phase = " << fixed(pair.global_phase, kAnglePlaces) << "\n";
  out << "P = " << fixed(degree_of_polarization(state), kAnglePlaces) << "\n";
  out << "S = " << fixed(stokes[0], kAnglePlaces) << "," << fixed(stokes[1], kAnglePlaces)
      << "," << fixed(stokes[2], kAnglePlaces) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biphoton qutrit toolbox: states, coincidences, scans, counting runs"};
  app.name("biphoton");
  app.require_subcommand(1);

  // state
  auto* state_cmd = app.add_subcommand("state", "Report amplitudes, Poincare pair, P, Stokes");
  std::string state_named, state_modes, state_c;
  state_cmd->add_option("--named", state_named, "Named state (HV, RL, DDb, HH, VV, DD)");
  state_cmd->add_option("--modes", state_modes, "Mode angles t1,p1,t2,p2 in radians");
  state_cmd->add_option("--c", state_c, "Amplitudes \"re,im;re,im;re,im\"");
  state_cmd->callback([&] {
    const int given = (state_named.empty() ? 0 : 1) + (state_modes.empty() ? 0 : 1) +
                      (state_c.empty() ? 0 : 1);
    if (given != 1) throw ConfigError("state needs exactly one of --named, --modes, --c");
    BiphotonState state{};
    if (!state_named.empty()) {
      state = standard_state(state_named);
    } else if (!state_modes.empty()) {
      const auto parts = split(state_modes, ',');
      if (parts.size() != 4) throw ConfigError("--modes needs t1,p1,t2,p2");
      state = from_modes(PolarizationMode(parse_double(parts[0], "theta1"),
                                          parse_double(parts[1], "phi1")),
                         PolarizationMode(parse_double(parts[2], "theta2"),
                                          parse_double(parts[3], "phi2")));
    } else {
      state = parse_amplitudes(state_c);
    }
    print_state_report(out, state);
  });

  // coincide
  auto* coincide_cmd = app.add_subcommand("coincide", "Coincidence probabilities for one tuning");
  std::string coincide_input, coincide_tuned;
  coincide_cmd->add_option("--input", coincide_input, "Input state (named or \"modes A B\")")
      ->required();
  coincide_cmd->add_option("--tuned", coincide_tuned, "Detector tuning (named or m1,m2)")
      ->required();
  coincide_cmd->callback([&] {
    const BiphotonState input = parse_input_spec(coincide_input);
    const DetectorTuning tuning = parse_tuned_spec(coincide_tuned);
    const CoincidenceResult result = coincidence_probability(input, tuning);
    out << "exact_probability = " << fixed(result.exact_probability, kAmplitudePlaces) << "\n";
    out << "overlap_squared = " << fixed(result.overlap_squared, kAmplitudePlaces) << "\n";
    out << "same_arm_probability = " << fixed(result.same_arm_probability, kAmplitudePlaces)
        << "\n";
    out << "orthogonal: " << (orthogonality_test(input, tuning) ? "yes" : "no") << "\n";
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "The seven reference (input, tuning) rows");
  bool table_mc = false;
  std::string table_config, table_observable;
  std::uint64_t table_seed = 0;
  int table_seeds = 10;
  table_cmd->add_flag("--mc", table_mc, "Simulate counting rates instead of probabilities");
  table_cmd->add_option("--config", table_config, "JSON config file (counting-run keys)");
  auto* table_obs_opt =
      table_cmd->add_option("--observable", table_observable, "overlap2 or exact");
  auto* table_seed_opt = table_cmd->add_option("--seed", table_seed, "Base seed");
  table_cmd->add_option("--seeds", table_seeds, "Seeds to average over (default 10)");
  table_cmd->callback([&] {
    ExperimentConfig config;
    if (!table_config.empty()) config = load_config(table_config);
    if (table_obs_opt->count() > 0) config.observable = observable_from_string(table_observable);
    if (table_seed_opt->count() > 0) config.seed = table_seed;
    if (!table_mc) {
      out << "input,detected,P_in,P_det,probability\n";
      for (const TableRow& row : ideal_table(config.observable)) {
        out << to_string(row.input) << "," << to_string(row.detected) << ","
            << fixed(row.input_polarization, kAnglePlaces) << ","
            << fixed(row.detected_polarization, kAnglePlaces) << ","
            << fixed(row.probability, kAmplitudePlaces) << "\n";
      }
      return;
    }
    if (table_seeds < 1) throw ConfigError("--seeds must be at least 1");
    out << "input,detected,P_in,P_det,rate,stderr\n";
    for (const TableRow& row : reproduce_table(config, table_seeds)) {
      out << to_string(row.input) << "," << to_string(row.detected) << ","
          << fixed(row.input_polarization, kAnglePlaces) << ","
          << fixed(row.detected_polarization, kAnglePlaces) << ","
          << fixed(row.rate, kAnglePlaces) << "," << fixed(row.rate_error, kAnglePlaces)
          << "\n";
    }
  });

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Singles intensity over analyzer settings");
  std::string scan_input;
  int scan_arm = 0;
  int scan_steps = 12;
  scan_cmd->add_option("--input", scan_input, "Input state (named or \"modes A B\")")
      ->required();
  scan_cmd->add_option("--arm", scan_arm, "Arm to scan (1 or 2)")->required();
  scan_cmd->add_option("--steps", scan_steps, "Polar grid steps (default 12)");
  scan_cmd->callback([&] {
    if (scan_steps < 1) throw ConfigError("--steps must be at least 1");
    const BiphotonState input = parse_input_spec(scan_input);
    const double pi = std::acos(-1.0);
    out << "theta,phi,intensity\n";
    for (int i = 0; i <= scan_steps; ++i) {
      const double theta = pi * i / scan_steps;
      for (int j = 0; j < 2 * scan_steps; ++j) {
        const double phi = pi * j / scan_steps;
        const double value = singles_intensity(input, scan_arm, PolarizationMode(theta, phi));
        out << fixed(theta, kAnglePlaces) << "," << fixed(phi, kAnglePlaces) << ","
            << fixed(value, kAmplitudePlaces) << "\n";
      }
    }
    const VisibilityScan extremes = visibility_scan(input, scan_arm);
    out << "# max=" << fixed(extremes.max, kAmplitudePlaces)
        << " min=" << fixed(extremes.min, kAmplitudePlaces)
        << " visibility=" << fixed(extremes.visibility, kAnglePlaces)
        << " P=" << fixed(degree_of_polarization(input), kAnglePlaces) << "\n";
  });

  // mc
  auto* mc_cmd = app.add_subcommand("mc", "One counting run from an experiment file");
  std::string mc_config;
  std::uint64_t mc_seed = 0;
  mc_cmd->add_option("--config", mc_config, "Experiment file (state, tuning, options)")
      ->required();
  auto* mc_seed_opt = mc_cmd->add_option("--seed", mc_seed, "Override the config seed");
  mc_cmd->callback([&] {
    const ExperimentFile file = load_experiment(mc_config);
    ExperimentConfig config = file.montecarlo.value_or(ExperimentConfig{});
    if (mc_seed_opt->count() > 0) config.seed = mc_seed;
    const CountRecord record = biphoton::run(file.state, file.tuning, config);
    out << "input,detected,P_in,P_det,rate,stderr\n";
    out << state_label(file.state) << "," << tuning_label(file.tuning) << ","
        << fixed(degree_of_polarization(file.state), kAnglePlaces) << ","
        << fixed(degree_of_polarization(file.tuning.tuned_state()), kAnglePlaces) << ","
        << fixed(record.rate(), kAnglePlaces) << "," << fixed(record.rate_error(), kAnglePlaces)
        << "\n";
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ZeroState& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const AllArmsDark& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace biphoton::cli
