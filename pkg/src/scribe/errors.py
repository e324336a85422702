"""Exception types shared across the package."""


class ScribeError(Exception):
    """Base class for all package errors."""


class ConfigError(ScribeError):
    """Bad or missing configuration (CLI exit code 1)."""


class DataFormatError(ScribeError):
    """Malformed ink / dictionary / corpus data (CLI exit code 2)."""


class ModelFormatError(ScribeError):
    """Corrupt or incompatible model file (CLI exit code 2)."""


class TrainingDivergedError(ScribeError):
    """Loss became NaN during training (CLI exit code 3)."""
