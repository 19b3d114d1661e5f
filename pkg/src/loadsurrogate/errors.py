"""Exception hierarchy shared by all loadsurrogate modules.

Two broad classes matter for the CLI exit codes: ``DataError`` (bad or
insufficient input data, exit 3) and ``NumericalError`` (a computation
failed or diverged, exit 4). ``ConfigError`` (exit 2) is raised during
run-configuration validation before any stage executes.
"""


class LoadSurrogateError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(LoadSurrogateError):
    """Invalid or incomplete run configuration."""


class DataError(LoadSurrogateError):
    """Input data violates a precondition."""


class NumericalError(LoadSurrogateError):
    """A numerical routine failed to produce a usable result."""


# -- dataset ---------------------------------------------------------------

class TooShort(DataError):
    """Profile spans less than the required 2.5 years."""


class TooSparse(DataError):
    """More than 5% of values missing after cleaning."""


class NonMonotonicTimestamps(DataError):
    """Timestamps not strictly increasing on a constant 15-min grid."""


class DegenerateRange(DataError):
    """Min-max scaling with v_min == v_max."""


class InsufficientData(DataError):
    """A (weekday, slot) cell of a typical week has no observations."""


# -- encoding --------------------------------------------------------------

class OutOfRange(DataError):
    """Value outside the documented input interval."""


class ZeroVariance(DataError):
    """Standardization of a constant series."""


class UnknownLabel(DataError):
    """Label codec asked to decode or encode an unregistered key."""


# -- consumer typing -------------------------------------------------------

class TooFewRows(DataError):
    """PCA needs at least 6 typical weeks."""


class TooFewPoints(DataError):
    """k-means needs at least k points."""


# -- hmm -------------------------------------------------------------------

class MissingTemperature(DataError):
    """HMM training requires a temperature series."""


class EmptyGroup(DataError):
    """A (season, weekday) group contains zero day samples."""


class EmptyInput(DataError):
    """No sequences passed to an estimator."""


class DegenerateEmissions(NumericalError):
    """Emission variances collapsed (only possible with the floor disabled)."""


class MissingModel(DataError):
    """Year assembly requires all 21 (season, weekday) models."""


# -- mabf ------------------------------------------------------------------

class DomainError(DataError):
    """Input outside the transform's domain."""


class NonFinite(NumericalError):
    """A non-finite value appeared in a density or gradient."""

    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{message} (at {where})")
        self.where = where


class NonPositiveData(DataError):
    """Flow training data must be strictly positive after the domain shift."""


class DivergedTraining(NumericalError):
    """Training NLL became NaN."""


class InversionFailure(NumericalError):
    """Bisection failed to invert the flow transform."""

    def __init__(self, message, step=None):
        super().__init__(message if step is None else f"{message} (step {step})")
        self.step = step


class MissingConditions(DataError):
    """Year generation lacks a condition vector for some day."""


# -- slp baseline ----------------------------------------------------------

class DegenerateTarget(DataError):
    """SLP scaling target has m_low == m_high."""


# -- evaluation ------------------------------------------------------------

class ConstantSeries(DataError):
    """Pearson correlation undefined for a constant series."""


class WindowTooLarge(DataError):
    """SSIM window exceeds the series length."""


class SchemaMismatch(DataError):
    """Feature matrices do not share one schema."""


# -- day matching ----------------------------------------------------------

class KeyMismatch(DataError):
    """External embedding import is missing (sensor_id, date) keys."""


class NonFiniteCost(DataError):
    """Assignment cost matrix contains non-finite entries."""
