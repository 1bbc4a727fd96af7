"""Single-mode biphoton qutrits and the Braun-Twiss coincidence scheme."""

from ._core import (
    ArmBasis,
    ArmSetting,
    BiphotonState,
    CoincidenceResult,
    ConfigError,
    CountRecord,
    CutoffExceededError,
    DetectorTuning,
    ExperimentConfig,
    NamedState,
    Observable,
    PoincarePair,
    PolarizationMode,
    SourceConfig,
    TableRow,
    UnknownNameError,
    ValidationError,
    VisibilityScan,
    ZeroStateError,
    accidental_rate,
    coincidence_probability,
    coincidence_probability_paired,
    degree_of_polarization,
    emit,
    expected_rate,
    from_modes,
    ideal_table,
    is_orthogonal,
    mean_stokes,
    mode_overlap,
    orthogonality_test,
    overlap,
    random_state,
    reproduce_table,
    run,
    same_mode,
    settings_for,
    singles_intensity,
    standard_state,
    to_modes,
    tuning_for,
    visibility_scan,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
