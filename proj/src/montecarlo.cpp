#include "biphoton/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ConfigError(message);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

long long poisson_draw(std::mt19937_64& rng, double mean) {
  if (mean <= 0.0) return 0;
  std::poisson_distribution<long long> dist(mean);
  return dist(rng);
}

}  // namespace

Observable observable_from_string(const std::string& text) {
  if (text == "overlap2") return Observable::Overlap2;
  if (text == "exact") return Observable::Exact;
  throw UnknownName("unknown observable '" + text + "' (expected overlap2 or exact)");
}

std::string to_string(Observable observable) {
  return observable == Observable::Overlap2 ? "overlap2" : "exact";
}

void ExperimentConfig::validate() const {
  require(std::isfinite(pair_rate) && pair_rate >= 0.0, "pair_rate must be >= 0");
  require(std::isfinite(integration_time) && integration_time >= 0.0,
          "integration_time must be >= 0");
  require(std::isfinite(efficiency1) && efficiency1 >= 0.0 && efficiency1 <= 1.0,
          "efficiency1 must be in [0, 1]");
  require(std::isfinite(efficiency2) && efficiency2 >= 0.0 && efficiency2 <= 1.0,
          "efficiency2 must be in [0, 1]");
  require(std::isfinite(dark_rate1) && dark_rate1 >= 0.0, "dark_rate1 must be >= 0");
  require(std::isfinite(dark_rate2) && dark_rate2 >= 0.0, "dark_rate2 must be >= 0");
  require(std::isfinite(coincidence_window) && coincidence_window >= 0.0,
          "coincidence_window must be >= 0");
}

double CountRecord::rate() const {  //
  return duration > 0.0 ? static_cast<double>(coincidences) / duration : 0.0;
}

double CountRecord::rate_error() const {
  return duration > 0.0 ? std::sqrt(static_cast<double>(coincidences)) / duration : 0.0;
}

CountRecord merge(const CountRecord& a, const CountRecord& b) {
  CountRecord out;
  out.singles1 = a.singles1 + b.singles1;
  out.singles2 = a.singles2 + b.singles2;
  out.coincidences = a.coincidences + b.coincidences;
  out.accidental_estimate = a.accidental_estimate + b.accidental_estimate;
  out.duration = a.duration + b.duration;
  return out;
}

double accidental_rate(double singles1_rate, double singles2_rate, double window) {
  require(singles1_rate >= 0.0 && singles2_rate >= 0.0 && window >= 0.0,
          "accidental_rate arguments must be >= 0");
  return singles1_rate * singles2_rate * window;
}

double per_pair_probability(const BiphotonState& input, const DetectorTuning& tuning,
                            Observable observable) {
  if (observable == Observable::Overlap2) {
    return std::norm(overlap(tuning.tuned_state(), input));
  }
  return coincidence_probability(input, tuning).exact_probability;
}

double expected_rate(const BiphotonState& input, const DetectorTuning& tuning,
                     const ExperimentConfig& config) {
  config.validate();
  const double p = per_pair_probability(input, tuning, config.observable);
  const double i1 = singles_intensity(input, 1, tuning.arm1_mode);
  const double i2 = singles_intensity(input, 2, tuning.arm2_mode);
  const double r1 = config.pair_rate * i1 * config.efficiency1 + config.dark_rate1;
  const double r2 = config.pair_rate * i2 * config.efficiency2 + config.dark_rate2;
  return config.pair_rate * p * config.efficiency1 * config.efficiency2 +
         accidental_rate(r1, r2, config.coincidence_window);
}

CountRecord run(const BiphotonState& input, const DetectorTuning& tuning,
                const ExperimentConfig& config) {
  config.validate();
  const double t = config.integration_time;
  const double p = per_pair_probability(input, tuning, config.observable);
  const double i1 = singles_intensity(input, 1, tuning.arm1_mode);
  const double i2 = singles_intensity(input, 2, tuning.arm2_mode);
  const double p_cc = p * config.efficiency1 * config.efficiency2;

  // Residual single-click probabilities conditioned on no coincidence, so
  // that each true coincidence also shows up in both singles counters while
  // the marginal singles stay at I_i eta_i per pair. The overlap2 observable
  // can demand more coincidences than an arm has photons; the clamp keeps
  // counts consistent in that corner.
  auto residual = [&](double marginal) {
    if (p_cc >= 1.0) return 0.0;
    return std::clamp((marginal - p_cc) / (1.0 - p_cc), 0.0, 1.0);
  };
  const double q1 = residual(i1 * config.efficiency1);
  const double q2 = residual(i2 * config.efficiency2);

  std::mt19937_64 rng(config.seed);
  CountRecord record;
  record.duration = t;

  const long long pairs = poisson_draw(rng, config.pair_rate * t);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (long long k = 0; k < pairs; ++k) {
    if (uniform(rng) < p_cc) {
      ++record.coincidences;
      ++record.singles1;
      ++record.singles2;
    } else {
      if (uniform(rng) < q1) ++record.singles1;
      if (uniform(rng) < q2) ++record.singles2;
    }
  }

  record.singles1 += poisson_draw(rng, config.dark_rate1 * t);
  record.singles2 += poisson_draw(rng, config.dark_rate2 * t);

  const double r1 = config.pair_rate * i1 * config.efficiency1 + config.dark_rate1;
  const double r2 = config.pair_rate * i2 * config.efficiency2 + config.dark_rate2;
  record.coincidences +=
      poisson_draw(rng, accidental_rate(r1, r2, config.coincidence_window) * t);

  if (t > 0.0) {
    record.accidental_estimate = static_cast<double>(record.singles1) *
                                 static_cast<double>(record.singles2) *
                                 config.coincidence_window / t;
  }
  return record;
}

DetectorTuning tuning_for(NamedState name) {
  using PM = PolarizationMode;
  switch (name) {
    case NamedState::HV:
      return {PM::horizontal(), PM::vertical()};
    case NamedState::RL:
      return {PM::right_circular(), PM::left_circular()};
    case NamedState::DDb:
      return {PM::diagonal(), PM::antidiagonal()};
    case NamedState::HH:
      return {PM::horizontal(), PM::horizontal()};
    case NamedState::VV:
      return {PM::vertical(), PM::vertical()};
  }
  throw UnknownName("unhandled named state");
}

const std::vector<std::pair<NamedState, NamedState>>& table_settings() {
  static const std::vector<std::pair<NamedState, NamedState>> rows = {
      {NamedState::HV, NamedState::HV},   {NamedState::RL, NamedState::HV},
      {NamedState::DDb, NamedState::HV},  {NamedState::HV, NamedState::DDb},
      {NamedState::DDb, NamedState::DDb}, {NamedState::HV, NamedState::HH},
      {NamedState::DDb, NamedState::HH},
  };
  return rows;
}

namespace {

TableRow base_row(NamedState in, NamedState det, Observable observable) {
  TableRow row{};
  row.input = in;
  row.detected = det;
  row.input_polarization = degree_of_polarization(standard_state(in));
  row.detected_polarization = degree_of_polarization(standard_state(det));
  row.probability = per_pair_probability(standard_state(in), tuning_for(det), observable);
  return row;
}

}  // namespace

std::vector<TableRow> ideal_table(Observable observable) {
  std::vector<TableRow> rows;
  for (const auto& [in, det] : table_settings()) {
    rows.push_back(base_row(in, det, observable));
  }
  return rows;
}

std::vector<TableRow> reproduce_table(const ExperimentConfig& config, int seeds) {
  config.validate();
  require(seeds >= 1, "reproduce_table needs at least one seed");

  std::vector<TableRow> rows;
  std::uint64_t row_index = 0;
  for (const auto& [in, det] : table_settings()) {
    TableRow row = base_row(in, det, config.observable);
    const BiphotonState input = standard_state(in);
    const DetectorTuning tuning = tuning_for(det);

    std::vector<double> rates;
    rates.reserve(seeds);
    for (int k = 0; k < seeds; ++k) {
      ExperimentConfig derived = config;
      derived.seed = splitmix64(config.seed ^ splitmix64(row_index * 1024 + k + 1));
      rates.push_back(run(input, tuning, derived).rate());
    }

    double mean = 0.0;
    for (double r : rates) mean += r;
    mean /= rates.size();
    double var = 0.0;
    for (double r : rates) var += (r - mean) * (r - mean);
    const double sem =
        rates.size() > 1 ? std::sqrt(var / (rates.size() - 1.0) / rates.size()) : 0.0;

    row.rate = mean;
    row.rate_error = sem;
    rows.push_back(row);
    ++row_index;
  }
  return rows;
}

}  // namespace biphoton
