#pragma once
#include <stdexcept>
#include <string>

namespace biphoton {

/// Raised when an operation would push a state past the photon-number cutoff.
/// The engine refuses to truncate silently.
struct CutoffExceeded : std::runtime_error {
  explicit CutoffExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Mode counts, cutoffs or matrix dimensions do not match.
struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A state with (numerically) zero norm where a normalized one is required.
struct ZeroState : std::runtime_error {
  explicit ZeroState(const std::string& what) : std::runtime_error(what) {}
};

/// Unrecognized named state or polarization mode.
struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& what) : std::invalid_argument(what) {}
};

/// Source configuration with every pump amplitude zero.
struct AllArmsDark : std::runtime_error {
  explicit AllArmsDark(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent configuration input (files, literals, flags).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Loaded data failed a physical validation check (for example a state whose
/// norm is too far from 1 to be a rounding artifact).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biphoton
